#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latip/model.hpp"
#include "latip/preprocess.hpp"
#include "latip/reduction.hpp"
#include "latip/sap.hpp"

namespace latip {

struct PipelineOptions {
    Norm norm = Norm::Linf;
    Int safety = 1;                          // scales lambda in choose_params
    std::uint64_t node_budget = 100'000'000;
};

struct SolveStats {
    std::uint64_t nodes_visited = 0;
    std::size_t branches = 0;
    std::size_t probes = 0;                  // feasibility probes (optimization)
    std::size_t fallback_extractions = 0;    // shortest vector failed to extract
};

/// Solves the knapsack through the lattice: normalize, build the basis,
/// shortest vector within radius 1 (Linf) or n (L1), extract, pull back.
/// Absent means enumeration found nothing outside S within the radius on any
/// branch, which is an infeasibility certificate.
std::optional<Assignment> solve_bkp_via_sap(const BkpInstance& bkp,
                                            const PipelineOptions& opts = {},
                                            SolveStats* stats = nullptr);

struct CountBreakdown {
    Int count = 0;                  // #BKP of the input
    Int explicit_solutions = 0;     // contributed by closed-form branches
    std::vector<Int> raw_short_vectors;  // per lattice branch, before halving
    std::uint64_t nodes_visited = 0;
};

/// Counts solutions: every lattice branch is routed through the appended 0/1
/// variable so solutions sit on the hypercube surface, short vectors at Linf
/// radius 1 are counted and halved (sign pairs), branches are summed.
CountBreakdown count_bkp_via_sap_detailed(const BkpInstance& bkp,
                                          const PipelineOptions& opts = {});
Int count_bkp_via_sap(const BkpInstance& bkp, const PipelineOptions& opts = {});

/// aggregate -> positivize -> solve_bkp_via_sap -> pullback.
std::optional<Assignment> solve_bip(const BipInstance& bip, const PipelineOptions& opts = {},
                                    SolveStats* stats = nullptr);

/// aggregate -> positivize -> count_bkp_via_sap -> count transport.
Int count_bip_via_sap(const BipInstance& bip, const PipelineOptions& opts = {});

/// binary_search_optimize with solve_bip as the feasibility probe.
std::optional<std::pair<Assignment, Int>> optimize_bip(const BipInstance& bip, const IntVec& c,
                                                       const PipelineOptions& opts = {},
                                                       SolveStats* stats = nullptr);

struct LengthProfile {
    std::optional<Rat> linf_min;  // scan ceiling 1, surface-forcing transform applied
    std::optional<Rat> l1_min;    // scan ceiling n of the lattice-source instance
    std::size_t l1_source_dim = 0;
    std::uint64_t nodes_visited = 0;
};

/// Shortest-vector norms of the two scan routes; checks l1_min = n and
/// linf_min = 1 whenever the instance is feasible.
LengthProfile shortest_length_profile(const BkpInstance& bkp, const PipelineOptions& opts = {});

/// Exact check of x_i/u_i in [eps/(1+eps), 1/(1+eps)] for all i.
/// Requires 0 < eps <= 1 and x a solution.
bool check_center_condition(const BkpInstance& bkp, const Assignment& x, const Rat& epsilon);

struct GapCertificate {
    Rat scan_radius;
    Rat threshold;                         // 1 + 1/u_max
    std::optional<Rat> min_nonextracting;  // absent: every vector within scan extracts
    bool bound_holds = true;               // non-extracting vectors all reach the threshold
    Int extracting = 0;
    Int nonextracting = 0;
    std::uint64_t nodes_visited = 0;
};

/// Enumerates L0 \ S at Linf radius scan_radius and partitions the vectors by
/// whether they extract a solution; verifies the lower bound 1 + 1/u_max on
/// non-extracting norms.
GapCertificate sap_gap_certificate(const BkpInstance& bkp, const Rat& scan_radius,
                                   const PipelineOptions& opts = {});

}  // namespace latip
