#include "dirichlet/precision.hpp"

#include "dirichlet/errors.hpp"

namespace dirichlet {

void PrecisionContext::validate(int max_modulus) const {
  if (target_digits < 1) throw DomainError("target digits must be positive");
  if (guard_digits < 10) throw DomainError("guard digits must be at least 10");
  if (max_modulus < 1) throw DomainError("modulus must be positive");
  if (cutoff < 2ULL * static_cast<std::uint64_t>(max_modulus)) {
    throw DomainError("cutoff " + std::to_string(cutoff) + " must be at least twice the modulus " +
                      std::to_string(max_modulus));
  }
}

}  // namespace dirichlet
