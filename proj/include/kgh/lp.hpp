#pragma once

#include <vector>

#include "kgh/rational.hpp"

namespace kgh {

/// Decides feasibility of { A x = b, x >= 0 } exactly, by a phase-one primal
/// simplex over rationals with Bland's smallest-index anti-cycling rule.
/// Optionally reports a feasible point.
bool lp_equality_feasible(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b,
                          std::vector<Rat>* solution = nullptr);

}  // namespace kgh
