#pragma once

#include <optional>
#include <utility>

#include "latip/model.hpp"

namespace latip {

// Brute-force ground truth over the bounded box. Deliberately free of any
// algorithmic cleverness; every other module is validated against it.

inline const Int kDefaultBoxBudget = Int(10'000'000);

/// Lexicographically smallest solution of Ax = b in the box, or absent.
/// Throws budget_error when the box size Π(uᵢ+1) exceeds the budget.
std::optional<Assignment> oracle_solve(const BipInstance& inst,
                                       const Int& box_budget = kDefaultBoxBudget);

/// Exact number of box points with Ax = b.
Int oracle_count(const BipInstance& inst, const Int& box_budget = kDefaultBoxBudget);

/// Feasible x minimizing c·x, ties broken lexicographically; absent if infeasible.
std::optional<std::pair<Assignment, Int>> oracle_optimize(
    const BipInstance& inst, const IntVec& c, const Int& box_budget = kDefaultBoxBudget);

}  // namespace latip
