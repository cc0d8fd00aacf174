#pragma once

#include <optional>
#include <string>

namespace dirichlet {

/// A: Artin, Q: quadratic class numbers, F: Feller-Tornier, C: Hardy-Littlewood.
enum class ConstantKind { Artin, Quadratic, FellerTornier, HardyLittlewood };

char constant_letter(ConstantKind k);
/// Accepts a/q/f/c in either case.
std::optional<ConstantKind> parse_constant_kind(const std::string& s);
/// Smallest order s the family is defined for.
long constant_min_order(ConstantKind k);

}  // namespace dirichlet
