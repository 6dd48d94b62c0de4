#pragma once

#include <optional>
#include <utility>

#include "latip/model.hpp"
#include "latip/sap.hpp"

namespace latip {

// Lattice reduction data for a knapsack instance: the (2n+2)-dimensional
// lower-triangular basis, its parameters, and the avoided hyperplane
// S = { y : Σ a_i u_i y_i = 0 } over the first n coordinates.

struct Params {
    Int s0;          // > n^2
    Int s1;          // > n^2
    Int lambda;      // > delta·n^3·u_max
    Int gamma;       // 1 + lambda + ... + lambda^n
    Int delta;       // u_1···u_n
    IntVec delta_i;  // delta / u_i
    IntVec weights;  // C_i = delta_i·lambda^(i-1)
    Int u_max;
    Rat p;           // min{s0, s1, lambda/(delta·n·u_max)}
};

struct ReductionArtifacts {
    RatMat basis;       // lower-triangular, (2n+2) x (2n+2)
    Params params;
    RatVec functional;  // f_i = a_i u_i for i < n, 0 elsewhere
    BkpInstance source;

    std::size_t dim() const { return basis.size(); }
};

/// Smallest admissible parameters scaled by the safety factor:
/// s0 = s1 = n^2 + 1, lambda = K·delta·n^3·u_max + 1. Requires K >= 1.
Params choose_params(const BkpInstance& bkp, const Int& safety = 1);

/// Builds the basis in block layout
///   rows 1..n:      diag(1/u_i)
///   row n+1:        (s0·a, -s0·b, 0, 0)
///   rows n+2..2n+1: diag(1/u_i)
///   row 2n+2:       (s1·C, s1·delta·lambda^n, s1·C, -s1·gamma)
/// and checks |det| = s0·s1·b·gamma/delta^2 on construction.
ReductionArtifacts build_lattice_basis(const BkpInstance& bkp, const Params& params);

/// Lifts a solution x to the lattice vector y = (x/u, 0, e - x/u, 0) with
/// coefficients z = (x, 1, u-x, z_last); checks ||y||_inf <= 1, ||y||_1 = n
/// and y outside S.
LatticeVector embed_solution(const ReductionArtifacts& artifacts, const Assignment& x);

/// Exact evaluation of the two structural conditions:
/// first:  y_{n+1} = y_{2n+2} = 0
/// second: y_i + y_{n+1+i} = z_{n+1} for all i in [n].
std::pair<bool, bool> check_structural_conditions(const ReductionArtifacts& artifacts,
                                                  const LatticeVector& v);

/// Reads the candidate solutions (u_1 y_1, ..., u_n y_n) and its negation off
/// a lattice vector outside S; returns the first that verifies, absent
/// otherwise. Never returns a non-solution.
std::optional<Assignment> extract_solution(const ReductionArtifacts& artifacts,
                                           const LatticeVector& v);

}  // namespace latip
