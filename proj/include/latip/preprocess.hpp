#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "latip/model.hpp"

namespace latip {

// Invertible preprocessing: every step carries enough data to pull solutions
// of the transformed instance back to the original, and a multiplicity factor
// for count transport.

struct AggregateStep {
    Int multiplier;           // M of the fold step
    std::size_t merged_row;   // row folded into the running combination
};
struct FlipColumnStep {
    std::size_t column;
    Int bound;                // x_j <- bound - x_j
};
struct DropZeroColumnStep {
    std::size_t column;       // index at the time of the drop
    Int multiplicity;         // u_j + 1, count factor
    Int reinserted;           // value restored on pullback (always 0)
};
struct FixVariableStep {
    std::size_t column;       // index at the time of the fix
    Int value;
};
struct BranchMarkerStep {
    std::size_t branch_id;
    std::optional<Assignment> explicit_solution;  // set for closed-form branches
};
struct AppendForcedOneStep {
    std::size_t index;        // 0-based index of the appended 0/1 variable
};
struct AppendSlackStep {
    std::size_t index;
    Int bound;
};

using TransformStep = std::variant<AggregateStep, FlipColumnStep, DropZeroColumnStep,
                                   FixVariableStep, BranchMarkerStep, AppendForcedOneStep,
                                   AppendSlackStep>;

struct TransformTrail {
    std::vector<TransformStep> steps;

    void push(TransformStep s) { steps.push_back(std::move(s)); }
    void append(const TransformTrail& other) {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    }
};

/// Single equation over a box, coefficients of arbitrary sign.
struct RawEquation {
    IntVec a;
    Int b = 0;
    IntVec u;
};

/// Folds all rows of the system into one equation with the same box solutions.
/// Each step merges the running equation (a1,b1) with the next row using
/// M = 1 + Σ|a1_j|u_j + |b1|, which strictly dominates |a1·x - b1| on the box.
std::pair<RawEquation, TransformTrail> aggregate(const BipInstance& bip);

struct PositivizeResult {
    enum class Kind { Reduced, Infeasible, ZeroOnly };
    Kind kind = Kind::Reduced;
    std::optional<BkpInstance> instance;  // Kind::Reduced
    std::size_t reduced_dim = 0;          // dimension after drops (ZeroOnly: all-zero solution length)
    TransformTrail trail;
};

/// Flips negative-coefficient columns (x_j <- u_j - x_j), drops zero columns
/// with multiplicity u_j + 1, then classifies by the resulting right-hand side.
PositivizeResult positivize(const RawEquation& eq);

struct Branch {
    enum class Kind { Instance, Explicit, Infeasible };
    Kind kind = Kind::Instance;
    std::optional<BkpInstance> instance;   // Kind::Instance
    std::optional<Assignment> solution;    // Kind::Explicit, in input coordinates
    TransformTrail trail;
};

/// Splits the instance into at most n+1 branches whose solution sets partition
/// the original's: one closed-form branch per a_i = b, and one residual branch
/// with every a_i >= b fixed to zero. Residual instances satisfy a_i < b.
std::vector<Branch> enforce_small_coeffs(const BkpInstance& bkp);

/// Appends the 0/1 variable with coefficient u_max(n+1)b and right-hand side
/// b + u_max(n+1)b. Every solution of the result has the new variable equal
/// to 1, so solution sets correspond bijectively.
std::pair<BkpInstance, TransformTrail> append_forced_one(const BkpInstance& bkp);

/// append_forced_one when Σa_ju_j = 2b, identity otherwise.
std::pair<BkpInstance, TransformTrail> ensure_not_double_b(const BkpInstance& bkp);

/// Inverts the trail on a solution of the transformed instance.
Assignment pullback_solution(const TransformTrail& trail, Assignment x);

/// Transports a solution count of the transformed instance to the original.
Int pullback_count(const TransformTrail& trail, Int count);

using FeasibilitySolver = std::function<std::optional<Assignment>(const BipInstance&)>;

/// Minimizes c·x over the feasible box via binary search on the objective.
/// Each probe at threshold t appends one slack variable s with row c·x + s = t
/// and 0 <= s <= U - L; ⌈log2(U-L+1)⌉ + 1 probes in total.
std::optional<std::pair<Assignment, Int>> binary_search_optimize(
    const BipInstance& bip, const IntVec& c, const FeasibilitySolver& solve);

}  // namespace latip
