#include "latip/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace latip {

namespace {

void require_valid_bkp(const BkpInstance& bkp, const char* where) {
    auto v = validate_instance(bkp);
    if (!v.empty()) throw std::invalid_argument(std::string(where) + ": " + v.front());
}

void require_valid_bip(const BipInstance& bip, const char* where) {
    auto v = validate_instance(bip);
    if (!v.empty()) throw std::invalid_argument(std::string(where) + ": " + v.front());
}

SapQuery make_query(const ReductionArtifacts& art, Norm norm, Rat radius,
                    const PipelineOptions& opts) {
    SapQuery q;
    q.basis = art.basis;
    q.functional = art.functional;
    q.norm = norm;
    q.radius = std::move(radius);
    q.node_budget = opts.node_budget;
    return q;
}

Rat lattice_radius(Norm norm, std::size_t n) {
    return norm == Norm::Linf ? Rat(1) : Rat(Int(static_cast<unsigned long>(n)));
}

// Tries the shortest vector first, then the remaining enumerated vectors in
// (norm, lex) order. At adequate parameters every enumerated vector extracts,
// so the fallback stays cold; extraction is verification-gated either way.
std::optional<Assignment> extract_from_enumeration(const ReductionArtifacts& art,
                                                   EnumerationResult& er, Norm norm,
                                                   SolveStats* stats) {
    if (er.vectors.empty()) return std::nullopt;
    std::vector<std::size_t> order(er.vectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Rat> norms(er.vectors.size());
    for (std::size_t i = 0; i < er.vectors.size(); ++i)
        norms[i] = vector_norm(er.vectors[i].y, norm);
    std::stable_sort(order.begin(), order.end(),
                     [&norms](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
    bool first = true;
    for (std::size_t idx : order) {
        auto x = extract_solution(art, er.vectors[idx]);
        if (x) {
            if (!first && stats) ++stats->fallback_extractions;
            return x;
        }
        first = false;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Assignment> solve_bkp_via_sap(const BkpInstance& bkp, const PipelineOptions& opts,
                                            SolveStats* stats) {
    require_valid_bkp(bkp, "solve_bkp_via_sap");
    auto branches = enforce_small_coeffs(bkp);
    if (stats) stats->branches += branches.size();
    for (const Branch& br : branches) {
        if (br.kind == Branch::Kind::Infeasible) continue;
        if (br.kind == Branch::Kind::Explicit) {
            if (!verify_bkp(bkp, *br.solution))
                throw std::logic_error("solve_bkp_via_sap: explicit branch does not verify");
            return br.solution;
        }
        auto [inst, forced_trail] = ensure_not_double_b(*br.instance);
        auto art = build_lattice_basis(inst, choose_params(inst, opts.safety));
        SapQuery q = make_query(art, opts.norm, lattice_radius(opts.norm, inst.size()), opts);
        EnumerationResult er = enumerate_within(q);
        if (stats) stats->nodes_visited += er.nodes_visited;
        auto inner = extract_from_enumeration(art, er, opts.norm, stats);
        if (!inner) continue;  // empty slice of L0 \ S at the lemma radius
        TransformTrail full = br.trail;
        full.append(forced_trail);
        Assignment x = pullback_solution(full, std::move(*inner));
        if (!verify_bkp(bkp, x))
            throw std::logic_error("solve_bkp_via_sap: pulled-back solution does not verify");
        return x;
    }
    return std::nullopt;
}

CountBreakdown count_bkp_via_sap_detailed(const BkpInstance& bkp, const PipelineOptions& opts) {
    require_valid_bkp(bkp, "count_bkp_via_sap");
    CountBreakdown out;
    for (const Branch& br : enforce_small_coeffs(bkp)) {
        if (br.kind == Branch::Kind::Infeasible) continue;
        if (br.kind == Branch::Kind::Explicit) {
            if (!verify_bkp(bkp, *br.solution))
                throw std::logic_error("count_bkp_via_sap: explicit branch does not verify");
            out.count += pullback_count(br.trail, 1);
            out.explicit_solutions += 1;
            continue;
        }
        // Forced surface transform: with the appended 0/1 variable every
        // solution touches the hypercube surface and short vectors have
        // norm exactly 1, in sign pairs.
        auto [inst, forced_trail] = append_forced_one(*br.instance);
        auto art = build_lattice_basis(inst, choose_params(inst, opts.safety));
        SapQuery q = make_query(art, Norm::Linf, Rat(1), opts);
        EnumerationResult er = enumerate_within(q);
        out.nodes_visited += er.nodes_visited;
        const Int raw(static_cast<unsigned long>(er.vectors.size()));
        if (raw % 2 != 0)
            throw std::logic_error("count_bkp_via_sap: short-vector count not even");
        out.raw_short_vectors.push_back(raw);
        TransformTrail full = br.trail;
        full.append(forced_trail);
        out.count += pullback_count(full, raw / 2);
    }
    return out;
}

Int count_bkp_via_sap(const BkpInstance& bkp, const PipelineOptions& opts) {
    return count_bkp_via_sap_detailed(bkp, opts).count;
}

std::optional<Assignment> solve_bip(const BipInstance& bip, const PipelineOptions& opts,
                                    SolveStats* stats) {
    require_valid_bip(bip, "solve_bip");
    auto [eq, agg_trail] = aggregate(bip);
    PositivizeResult pos = positivize(eq);
    TransformTrail full = agg_trail;
    full.append(pos.trail);
    if (pos.kind == PositivizeResult::Kind::Infeasible) return std::nullopt;
    std::optional<Assignment> inner;
    if (pos.kind == PositivizeResult::Kind::ZeroOnly) {
        inner = Assignment(pos.reduced_dim, Int(0));
    } else {
        inner = solve_bkp_via_sap(*pos.instance, opts, stats);
        if (!inner) return std::nullopt;
    }
    Assignment x = pullback_solution(full, std::move(*inner));
    if (!verify_bip(bip, x))
        throw std::logic_error("solve_bip: pulled-back solution does not verify");
    return x;
}

Int count_bip_via_sap(const BipInstance& bip, const PipelineOptions& opts) {
    require_valid_bip(bip, "count_bip_via_sap");
    auto [eq, agg_trail] = aggregate(bip);
    PositivizeResult pos = positivize(eq);
    TransformTrail full = agg_trail;
    full.append(pos.trail);
    switch (pos.kind) {
        case PositivizeResult::Kind::Infeasible: return 0;
        case PositivizeResult::Kind::ZeroOnly: return pullback_count(full, 1);
        case PositivizeResult::Kind::Reduced: break;
    }
    return pullback_count(full, count_bkp_via_sap(*pos.instance, opts));
}

std::optional<std::pair<Assignment, Int>> optimize_bip(const BipInstance& bip, const IntVec& c,
                                                       const PipelineOptions& opts,
                                                       SolveStats* stats) {
    return binary_search_optimize(bip, c, [&](const BipInstance& probe) {
        if (stats) ++stats->probes;
        return solve_bip(probe, opts, stats);
    });
}

LengthProfile shortest_length_profile(const BkpInstance& bkp, const PipelineOptions& opts) {
    require_valid_bkp(bkp, "shortest_length_profile");
    LengthProfile out;
    const BkpInstance* residual = nullptr;
    auto branches = enforce_small_coeffs(bkp);
    for (const Branch& br : branches)
        if (br.kind == Branch::Kind::Instance) residual = &*br.instance;
    if (!residual) return out;  // no lattice-carrying branch

    {
        auto [inst, trail] = ensure_not_double_b(*residual);
        out.l1_source_dim = inst.size();
        auto art = build_lattice_basis(inst, choose_params(inst, opts.safety));
        SapQuery q = make_query(art, Norm::L1, lattice_radius(Norm::L1, inst.size()), opts);
        ShortestResult s = sap_shortest(q);
        out.nodes_visited += s.nodes_visited;
        if (s.vector) {
            if (s.norm_value != Rat(Int(static_cast<unsigned long>(inst.size()))))
                throw std::logic_error("shortest_length_profile: l1 minimum differs from n");
            out.l1_min = s.norm_value;
        }
    }
    {
        auto [inst, trail] = append_forced_one(*residual);
        auto art = build_lattice_basis(inst, choose_params(inst, opts.safety));
        SapQuery q = make_query(art, Norm::Linf, Rat(1), opts);
        ShortestResult s = sap_shortest(q);
        out.nodes_visited += s.nodes_visited;
        if (s.vector) {
            if (s.norm_value != 1)
                throw std::logic_error("shortest_length_profile: linf minimum differs from 1");
            out.linf_min = s.norm_value;
        }
    }
    if (out.l1_min.has_value() != out.linf_min.has_value())
        throw std::logic_error("shortest_length_profile: routes disagree on feasibility");
    return out;
}

bool check_center_condition(const BkpInstance& bkp, const Assignment& x, const Rat& epsilon) {
    if (epsilon <= 0 || epsilon > 1)
        throw std::invalid_argument("check_center_condition: epsilon outside (0, 1]");
    if (!verify_bkp(bkp, x))
        throw std::invalid_argument("check_center_condition: x does not solve the instance");
    const Rat lo = epsilon / (Rat(1) + epsilon);
    const Rat hi = Rat(1) / (Rat(1) + epsilon);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rat ratio = make_rat(x[i], bkp.u[i]);
        if (ratio < lo || ratio > hi) return false;
    }
    return true;
}

GapCertificate sap_gap_certificate(const BkpInstance& bkp, const Rat& scan_radius,
                                   const PipelineOptions& opts) {
    require_valid_bkp(bkp, "sap_gap_certificate");
    if (scan_radius < 0) throw std::invalid_argument("sap_gap_certificate: negative radius");
    auto [inst, trail] = ensure_not_double_b(bkp);
    auto art = build_lattice_basis(inst, choose_params(inst, opts.safety));
    GapCertificate out;
    out.scan_radius = scan_radius;
    out.threshold = Rat(1) + make_rat(1, art.params.u_max);
    SapQuery q = make_query(art, Norm::Linf, scan_radius, opts);
    EnumerationResult er = enumerate_within(q);
    out.nodes_visited = er.nodes_visited;
    for (const LatticeVector& v : er.vectors) {
        if (extract_solution(art, v)) {
            ++out.extracting;
            continue;
        }
        ++out.nonextracting;
        const Rat nv = vector_norm(v.y, Norm::Linf);
        if (!out.min_nonextracting || nv < *out.min_nonextracting) out.min_nonextracting = nv;
    }
    if (out.min_nonextracting && *out.min_nonextracting < out.threshold) out.bound_holds = false;
    return out;
}

}  // namespace latip
