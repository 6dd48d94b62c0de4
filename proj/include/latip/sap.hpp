#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latip/numeric.hpp"

namespace latip {

enum class Norm { L1, Linf };

/// Integer coefficient vector z paired with its exact rational image y = Bz.
struct LatticeVector {
    IntVec z;
    RatVec y;
};

/// SAP instance: lattice via a lower-triangular rational basis, subspace M as
/// the kernel of a single functional (y in M iff f·y = 0), norm and radius.
struct SapQuery {
    RatMat basis;
    RatVec functional;
    Norm norm = Norm::Linf;
    Rat radius = 0;
    std::uint64_t node_budget = 100'000'000;
};

struct EnumerationResult {
    std::vector<LatticeVector> vectors;  // lex-sorted by z
    std::uint64_t nodes_visited = 0;
};

struct ShortestResult {
    std::optional<LatticeVector> vector;  // minimal norm, ties lex-smallest z
    Rat norm_value = 0;                   // meaningful iff vector is set
    std::uint64_t nodes_visited = 0;
};

struct NearMinimalResult {
    std::optional<Rat> lambda_min;
    Int count = 0;
    std::uint64_t nodes_visited = 0;
};

Rat vector_norm(const RatVec& y, Norm norm);

/// Exact product basis·z. Throws on dimension mismatch.
RatVec forward_map(const RatMat& basis, const IntVec& z);

/// The exact set { v in L \ M : norm(v) <= radius }, by depth-first search
/// over z_1..z_d in index order with exact rational interval bounds per row.
/// Throws budget_error past node_budget.
EnumerationResult enumerate_within(const SapQuery& q);

/// Minimal-norm element of enumerate_within; absent means no vector of L \ M
/// lies within the radius (a certificate, not an error).
ShortestResult sap_shortest(const SapQuery& q);

/// lambda_min = norm of the shortest vector within q.radius; count = number of
/// vectors of L \ M with norm <= (1+epsilon)·lambda_min (second enumeration).
NearMinimalResult count_near_minimal(const SapQuery& q, const Rat& epsilon);

}  // namespace latip
