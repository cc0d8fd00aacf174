#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument outside an operation's domain (s too small, bad modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// L(s, chi) requested at the pole s = 1 of a principal character.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series stopped converging before reaching the requested tolerance.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

/// |L(M, s, chi) - 1| too large for the principal logarithm to be trusted.
class BranchRiskError : public Error {
 public:
  using Error::Error;
};

/// Orthogonality inversion left a non-negligible imaginary part.
class ImaginaryResidueError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirichlet
