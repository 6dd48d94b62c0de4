#include "latip/selftest.hpp"

#include <sstream>

#include "latip/diophantine.hpp"
#include "latip/gen.hpp"
#include "latip/oracle.hpp"
#include "latip/pipeline.hpp"

namespace latip {

namespace {

std::uint64_t sub_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    SplitMix64 rng(master ^ (stream * 0x9e3779b97f4a7c15ULL) ^ (index * 0xbf58476d1ce4e5b9ULL));
    return rng.next();
}

BkpInstance suite_bkp(const AcceptanceConfig& cfg, std::uint64_t stream, int index) {
    SplitMix64 rng(sub_seed(cfg.seed, stream, static_cast<std::uint64_t>(index)));
    const std::size_t n = 1 + rng.below(5);
    return gen_bkp(rng.next(), n, 4, 15, index % 2 == 0);
}

BipInstance suite_bip(const AcceptanceConfig& cfg, int index) {
    SplitMix64 rng(sub_seed(cfg.seed, 5, static_cast<std::uint64_t>(index)));
    const std::size_t m = 1 + rng.below(3);
    const std::size_t n = 1 + rng.below(4);
    return gen_bip(rng.next(), m, n, 6, 3, index % 2 == 0);
}

PipelineOptions options(const AcceptanceConfig& cfg, Norm norm, long safety = 1) {
    PipelineOptions opts;
    opts.norm = norm;
    opts.safety = safety;
    opts.node_budget = cfg.node_budget;
    return opts;
}

std::string describe(const BkpInstance& inst) {
    std::ostringstream os;
    os << "a=(";
    for (std::size_t j = 0; j < inst.a.size(); ++j)
        os << (j ? "," : "") << int_str(inst.a[j]);
    os << ") b=" << int_str(inst.b) << " u=(";
    for (std::size_t j = 0; j < inst.u.size(); ++j)
        os << (j ? "," : "") << int_str(inst.u[j]);
    os << ")";
    return os.str();
}

// --- criterion bodies -------------------------------------------------------

CriterionResult criterion_solver_oracle(const AcceptanceConfig& cfg, long safety, int id,
                                        const std::string& name) {
    CriterionResult out{id, name, true, ""};
    int checked = 0;
    for (int i = 0; i < cfg.solver_instances; ++i) {
        const BkpInstance inst = suite_bkp(cfg, 1, i);
        const bool oracle_feasible = oracle_solve(as_bip(inst)).has_value();
        for (Norm norm : {Norm::Linf, Norm::L1}) {
            auto got = solve_bkp_via_sap(inst, options(cfg, norm, safety));
            if (got.has_value() != oracle_feasible || (got && !verify_bkp(inst, *got))) {
                out.passed = false;
                out.detail = "mismatch at instance " + std::to_string(i) + ": " + describe(inst);
                return out;
            }
        }
        ++checked;
    }
    out.detail = std::to_string(checked) + "/" + std::to_string(cfg.solver_instances) +
                 " instances agree with the oracle under both norms";
    return out;
}

CriterionResult criterion_counting(const AcceptanceConfig& cfg, long safety, int id,
                                   const std::string& name) {
    CriterionResult out{id, name, true, ""};
    for (int i = 0; i < cfg.count_instances; ++i) {
        const BkpInstance inst = suite_bkp(cfg, 2, i);
        const Int expected = oracle_count(as_bip(inst));
        const CountBreakdown got = count_bkp_via_sap_detailed(inst, options(cfg, Norm::Linf, safety));
        Int raw_total = 0;
        for (const Int& r : got.raw_short_vectors) raw_total += r;
        const Int lattice_part = got.count - got.explicit_solutions;
        if (got.count != expected || raw_total != 2 * lattice_part) {
            out.passed = false;
            out.detail = "count mismatch at instance " + std::to_string(i) + ": " +
                         describe(inst) + " expected " + int_str(expected) + " got " +
                         int_str(got.count);
            return out;
        }
    }
    out.detail = std::to_string(cfg.count_instances) +
                 "/" + std::to_string(cfg.count_instances) +
                 " counts match the oracle with exact sign pairs";
    return out;
}

// Lattice-carrying instances derived from the solver suite, paired with their
// oracle feasibility.
std::vector<std::pair<BkpInstance, bool>> lattice_suite(const AcceptanceConfig& cfg) {
    std::vector<std::pair<BkpInstance, bool>> out;
    for (int i = 0; i < cfg.solver_instances; ++i) {
        const BkpInstance inst = suite_bkp(cfg, 1, i);
        for (const Branch& br : enforce_small_coeffs(inst)) {
            if (br.kind != Branch::Kind::Instance) continue;
            const bool feasible = oracle_solve(as_bip(*br.instance)).has_value();
            out.emplace_back(*br.instance, feasible);
        }
    }
    return out;
}

CriterionResult criterion_l1_biconditional(const AcceptanceConfig& cfg, long safety, int id,
                                           const std::string& name) {
    CriterionResult out{id, name, true, ""};
    int lattices = 0;
    for (const auto& [inst, feasible] : lattice_suite(cfg)) {
        auto [normalized, trail] = ensure_not_double_b(inst);
        auto art = build_lattice_basis(normalized, choose_params(normalized, safety));
        SapQuery q;
        q.basis = art.basis;
        q.functional = art.functional;
        q.norm = Norm::L1;
        q.radius = Rat(Int(static_cast<unsigned long>(normalized.size())));
        q.node_budget = cfg.node_budget;
        ShortestResult s = sap_shortest(q);
        const bool found_n = s.vector.has_value() &&
                             s.norm_value == Rat(Int(static_cast<unsigned long>(normalized.size())));
        if (found_n != feasible || (s.vector.has_value() && !found_n)) {
            out.passed = false;
            out.detail = "l1 biconditional fails on " + describe(normalized);
            return out;
        }
        ++lattices;
    }
    out.detail = "shortest l1 norm equals n exactly iff feasible on " +
                 std::to_string(lattices) + " lattices";
    return out;
}

CriterionResult criterion_linf_surface(const AcceptanceConfig& cfg, long safety, int id,
                                       const std::string& name) {
    CriterionResult out{id, name, true, ""};
    int feasible_lattices = 0;
    for (const auto& [inst, feasible] : lattice_suite(cfg)) {
        auto [surfaced, trail] = append_forced_one(inst);
        auto art = build_lattice_basis(surfaced, choose_params(surfaced, safety));
        SapQuery q;
        q.basis = art.basis;
        q.functional = art.functional;
        q.norm = Norm::Linf;
        q.radius = 1;
        q.node_budget = cfg.node_budget;
        ShortestResult s = sap_shortest(q);
        if (s.vector.has_value() != feasible || (feasible && s.norm_value != 1)) {
            out.passed = false;
            out.detail = "linf surface norm fails on " + describe(surfaced);
            return out;
        }
        if (feasible) ++feasible_lattices;
    }
    out.detail = "shortest linf norm is exactly 1 on " + std::to_string(feasible_lattices) +
                 " feasible surfaced lattices";
    return out;
}

CriterionResult criterion_bip_end_to_end(const AcceptanceConfig& cfg) {
    CriterionResult out{5, "BIP end-to-end vs oracle (solve + optimize)", true, ""};
    int optimized = 0;
    for (int i = 0; i < cfg.bip_instances; ++i) {
        const BipInstance inst = suite_bip(cfg, i);
        const auto oracle = oracle_solve(inst);
        for (Norm norm : {Norm::Linf, Norm::L1}) {
            auto got = solve_bip(inst, options(cfg, norm));
            if (got.has_value() != oracle.has_value() || (got && !verify_bip(inst, *got))) {
                out.passed = false;
                out.detail = "solve mismatch at instance " + std::to_string(i);
                return out;
            }
        }
        if (!oracle) continue;
        const IntVec c = gen_objective(sub_seed(cfg.seed, 6, static_cast<std::uint64_t>(i)),
                                       inst.cols(), 3);
        const auto best = oracle_optimize(inst, c);
        const auto got = optimize_bip(inst, c, options(cfg, Norm::Linf));
        if (!got || !best || got->second != best->second || !verify_bip(inst, got->first)) {
            out.passed = false;
            out.detail = "optimize mismatch at instance " + std::to_string(i);
            return out;
        }
        ++optimized;
    }
    out.detail = std::to_string(cfg.bip_instances) + " instances solved (both norms), " +
                 std::to_string(optimized) + " optimized to the oracle value";
    return out;
}

CriterionResult criterion_gap_certificate(const AcceptanceConfig& cfg) {
    CriterionResult out{6, "below 1 + 1/u_max every short vector extracts", true, ""};
    int covered = 0;
    for (int i = 0; covered < cfg.gap_instances && i < 20 * cfg.gap_instances; ++i) {
        const BkpInstance inst = suite_bkp(cfg, 1, i);
        for (const Branch& br : enforce_small_coeffs(inst)) {
            if (br.kind != Branch::Kind::Instance) continue;
            if (!oracle_solve(as_bip(*br.instance))) continue;
            Int u_max = br.instance->u[0];
            for (const Int& ui : br.instance->u)
                if (ui > u_max) u_max = ui;
            const Rat scan = Rat(1) + make_rat(1, 2 * u_max);  // strictly below 1 + 1/u_max
            GapCertificate cert = sap_gap_certificate(*br.instance, scan,
                                                      options(cfg, Norm::Linf));
            if (cert.min_nonextracting || cert.extracting == 0 || !cert.bound_holds) {
                out.passed = false;
                out.detail = "non-extracting vector below the bound on " +
                             describe(*br.instance);
                return out;
            }
            ++covered;
            if (covered >= cfg.gap_instances) break;
        }
    }
    out.detail = std::to_string(covered) + " feasible lattices certified";
    return out;
}

CriterionResult criterion_diophantine(const AcceptanceConfig&) {
    CriterionResult out{7, "Diophantine lemma: bounded non-constant solutions", true, ""};
    int cases = 0;
    for (long lambda : {10L, 33L}) {
        for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
            for (long t = -2; t <= 2; ++t) {
                const DioInstance inst = make_dio(Int(lambda), n, Int(t));
                if (!dio_check_lemma(inst, Int(2 * lambda))) {
                    out.passed = false;
                    out.detail = "lemma fails at lambda=" + std::to_string(lambda) +
                                 " n=" + std::to_string(n) + " t=" + std::to_string(t);
                    return out;
                }
                ++cases;
            }
        }
    }
    out.detail = std::to_string(cases) + " (lambda, n, t) cases verified exhaustively";
    return out;
}

// Independent of the enumerator: scan the z-box obtained from the exact
// inverse basis times the radius, and filter by the definition.
std::vector<IntVec> naive_enumeration(const SapQuery& q) {
    const std::size_t d = q.basis.size();
    RatMat inv(d, RatVec(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j) {
        inv[j][j] = Rat(1) / q.basis[j][j];
        for (std::size_t i = j + 1; i < d; ++i) {
            Rat acc = 0;
            for (std::size_t t = j; t < i; ++t) acc += q.basis[i][t] * inv[t][j];
            inv[i][j] = -acc / q.basis[i][i];
        }
    }
    IntVec zmax(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rat reach = 0;
        for (std::size_t l = 0; l <= j; ++l) {
            if (q.norm == Norm::Linf) reach += abs(inv[j][l]);
            else if (abs(inv[j][l]) > reach) reach = abs(inv[j][l]);
        }
        zmax[j] = rat_floor(reach * q.radius);
    }
    std::vector<IntVec> out;
    IntVec z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = -zmax[j];
    while (true) {
        RatVec y = forward_map(q.basis, z);
        Rat fy = 0;
        for (std::size_t i = 0; i < d; ++i) fy += q.functional[i] * y[i];
        if (fy != 0 && vector_norm(y, q.norm) <= q.radius) out.push_back(z);
        std::size_t j = d;
        while (j-- > 0) {
            if (z[j] < zmax[j]) {
                ++z[j];
                for (std::size_t k = j + 1; k < d; ++k) z[k] = -zmax[k];
                break;
            }
            if (j == 0) return out;
        }
    }
}

CriterionResult criterion_structural(const AcceptanceConfig& cfg) {
    CriterionResult out{8, "determinant, embed/extract round trip, enumeration oracle", true, ""};

    int round_trips = 0;
    for (const auto& [inst, feasible] : lattice_suite(cfg)) {
        auto [normalized, trail] = ensure_not_double_b(inst);
        // build_lattice_basis checks |det B0| = s0*s1*b*gamma/delta^2 on construction.
        auto art = build_lattice_basis(normalized, choose_params(normalized, 1));
        if (!feasible) continue;
        BipInstance box = as_bip(normalized);
        Assignment x(normalized.size(), Int(0));
        // Round-trip every solution of the instance.
        while (true) {
            if (verify_bkp(normalized, x)) {
                LatticeVector v = embed_solution(art, x);
                auto back = extract_solution(art, v);
                auto conds = check_structural_conditions(art, v);
                if (!back || *back != x || !conds.first || !conds.second) {
                    out.passed = false;
                    out.detail = "round trip fails on " + describe(normalized);
                    return out;
                }
                ++round_trips;
            }
            std::size_t j = x.size();
            bool advanced = false;
            while (j-- > 0) {
                if (x[j] < normalized.u[j]) {
                    ++x[j];
                    for (std::size_t k = j + 1; k < x.size(); ++k) x[k] = 0;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }

    int bases = 0;
    for (int i = 0; bases < cfg.random_bases; ++i) {
        SplitMix64 rng(sub_seed(cfg.seed, 8, static_cast<std::uint64_t>(i)));
        const std::size_t d = 1 + rng.below(4);
        SapQuery q;
        q.basis.assign(d, RatVec(d, Rat(0)));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < r; ++c) {
                const long num = static_cast<long>(rng.below(11)) - 5;
                q.basis[r][c] = make_rat(num, 1 + rng.below(3));
            }
            long num = static_cast<long>(rng.below(10)) - 5;
            if (num >= 0) ++num;  // nonzero diagonal
            q.basis[r][r] = make_rat(num, 1 + rng.below(3));
        }
        q.functional.assign(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j)
            q.functional[j] = Rat(static_cast<long>(rng.below(7)) - 3);
        q.functional[rng.below(d)] = Rat(1 + rng.below(3));
        q.norm = i % 2 == 0 ? Norm::Linf : Norm::L1;
        q.radius = make_rat(1 + rng.below(4), 1 + rng.below(2));
        q.node_budget = cfg.node_budget;

        {
            EnumerationResult fast = enumerate_within(q);
            std::vector<IntVec> naive = naive_enumeration(q);
            if (fast.vectors.size() != naive.size()) {
                out.passed = false;
                out.detail = "enumeration disagrees with the naive scan (size)";
                return out;
            }
            for (std::size_t k = 0; k < naive.size(); ++k) {
                if (fast.vectors[k].z != naive[k]) {
                    out.passed = false;
                    out.detail = "enumeration disagrees with the naive scan (order)";
                    return out;
                }
            }
        }
        ++bases;
    }

    out.detail = std::to_string(round_trips) + " solution round trips, " +
                 std::to_string(bases) + " random bases cross-checked";
    return out;
}

CriterionResult criterion_safety_factor(const AcceptanceConfig& cfg) {
    CriterionResult out{9, "criteria 1-4 unchanged at safety factor K=4", true, ""};
    CriterionResult c1 = criterion_solver_oracle(cfg, 4, 9, "");
    if (!c1.passed) return {9, out.name, false, "K=4 solver: " + c1.detail};
    CriterionResult c2 = criterion_counting(cfg, 4, 9, "");
    if (!c2.passed) return {9, out.name, false, "K=4 counting: " + c2.detail};
    CriterionResult c3 = criterion_l1_biconditional(cfg, 4, 9, "");
    if (!c3.passed) return {9, out.name, false, "K=4 l1: " + c3.detail};
    CriterionResult c4 = criterion_linf_surface(cfg, 4, 9, "");
    if (!c4.passed) return {9, out.name, false, "K=4 linf: " + c4.detail};
    out.detail = "criteria 1-4 re-ran identically at K=4";
    return out;
}

}  // namespace

std::vector<int> acceptance_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg) {
    switch (id) {
        case 1:
            return criterion_solver_oracle(cfg, 1, 1, "solver/oracle feasibility equivalence");
        case 2:
            return criterion_counting(cfg, 1, 2, "counting identity with sign pairs");
        case 3:
            return criterion_l1_biconditional(cfg, 1, 3, "l1 shortest norm = n iff feasible");
        case 4:
            return criterion_linf_surface(cfg, 1, 4, "linf shortest norm = 1 when surfaced");
        case 5:
            return criterion_bip_end_to_end(cfg);
        case 6:
            return criterion_gap_certificate(cfg);
        case 7:
            return criterion_diophantine(cfg);
        case 8:
            return criterion_structural(cfg);
        case 9:
            return criterion_safety_factor(cfg);
        default:
            return {id, "unknown criterion", false, "no such criterion"};
    }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int id : acceptance_criteria()) out.push_back(run_criterion(id, cfg));
    return out;
}

}  // namespace latip
