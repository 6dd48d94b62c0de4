#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latip/diophantine.hpp"
#include "latip/gen.hpp"
#include "latip/io.hpp"
#include "latip/oracle.hpp"
#include "latip/pipeline.hpp"
#include "latip/selftest.hpp"

namespace {

using latip::Int;
using latip::IntVec;
using latip::Rat;
using nlohmann::json;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string norm = "linf";
    std::uint64_t safety = 1;
    std::uint64_t node_budget = 100'000'000;
    std::string box_budget = "10000000";
    bool json_out = false;
    std::uint64_t seed = 1;
};

latip::PipelineOptions pipeline_options(const GlobalOpts& g) {
    latip::PipelineOptions opts;
    opts.norm = g.norm == "l1" ? latip::Norm::L1 : latip::Norm::Linf;
    opts.safety = Int(g.safety);
    opts.node_budget = g.node_budget;
    return opts;
}

json stats_json(const GlobalOpts& g, const latip::SolveStats& stats) {
    json s;
    s["nodes_visited"] = std::to_string(stats.nodes_visited);
    s["branches"] = std::to_string(stats.branches);
    s["probes"] = std::to_string(stats.probes);
    s["norm"] = g.norm;
    s["safety"] = std::to_string(g.safety);
    return s;
}

json vec_json(const IntVec& v) {
    json out = json::array();
    for (const Int& e : v) out.push_back(latip::int_str(e));
    return out;
}

void print_assignment(std::ostream& os, const IntVec& v) {
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << latip::int_str(v[j]);
}

int cmd_solve(const GlobalOpts& g, const std::string& file) {
    latip::ParsedInstance parsed = latip::load_instance_file(file);
    latip::SolveStats stats;
    const auto opts = pipeline_options(g);
    std::optional<latip::Assignment> x;
    if (parsed.kind == latip::ParsedInstance::Kind::Bkp)
        x = latip::solve_bkp_via_sap(*parsed.bkp, opts, &stats);
    else
        x = latip::solve_bip(*parsed.bip, opts, &stats);

    bool verified = false;
    if (x)
        verified = parsed.kind == latip::ParsedInstance::Kind::Bkp
                       ? latip::verify_bkp(*parsed.bkp, *x)
                       : latip::verify_bip(*parsed.bip, *x);
    if (g.json_out) {
        json doc;
        doc["status"] = x ? "feasible" : "infeasible";
        if (x) {
            doc["x"] = vec_json(*x);
            doc["verified"] = verified;
        }
        doc["stats"] = stats_json(g, stats);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "status: " << (x ? "feasible" : "infeasible") << "\n";
        if (x) {
            std::cout << "x: ";
            print_assignment(std::cout, *x);
            std::cout << "\nverified: " << (verified ? "true" : "false") << "\n";
        }
    }
    if (x && !verified) return kExitInputError;
    return x ? kExitFeasible : kExitInfeasible;
}

int cmd_count(const GlobalOpts& g, const std::string& file) {
    latip::ParsedInstance parsed = latip::load_instance_file(file);
    const auto opts = pipeline_options(g);
    Int count;
    std::optional<latip::SolveStats> stats;
    if (parsed.kind == latip::ParsedInstance::Kind::Bkp) {
        auto detail = latip::count_bkp_via_sap_detailed(*parsed.bkp, opts);
        count = detail.count;
        stats.emplace();
        stats->nodes_visited = detail.nodes_visited;
        stats->branches = detail.raw_short_vectors.size();
    } else {
        count = latip::count_bip_via_sap(*parsed.bip, opts);
    }
    if (g.json_out) {
        json doc;
        doc["status"] = "ok";
        doc["count"] = latip::int_str(count);
        if (stats) doc["stats"] = stats_json(g, *stats);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "count: " << latip::int_str(count) << "\n";
    }
    return count > 0 ? kExitFeasible : kExitInfeasible;
}

int cmd_optimize(const GlobalOpts& g, const std::string& file, const std::string& objective) {
    latip::ParsedInstance parsed = latip::load_instance_file(file);
    latip::BipInstance inst = parsed.kind == latip::ParsedInstance::Kind::Bip
                                  ? *parsed.bip
                                  : latip::as_bip(*parsed.bkp);
    IntVec c;
    if (!objective.empty())
        c = latip::parse_objective_arg(objective, inst.cols());
    else if (parsed.objective)
        c = *parsed.objective;
    else
        throw std::invalid_argument("optimize needs --objective or a 'c' field in the instance");

    latip::SolveStats stats;
    auto best = latip::optimize_bip(inst, c, pipeline_options(g), &stats);
    if (g.json_out) {
        json doc;
        doc["status"] = best ? "feasible" : "infeasible";
        if (best) {
            doc["x"] = vec_json(best->first);
            doc["value"] = latip::int_str(best->second);
            doc["verified"] = latip::verify_bip(inst, best->first);
        }
        doc["stats"] = stats_json(g, stats);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "status: " << (best ? "feasible" : "infeasible") << "\n";
        if (best) {
            std::cout << "x: ";
            print_assignment(std::cout, best->first);
            std::cout << "\nvalue: " << latip::int_str(best->second) << "\n";
            std::cout << "verified: "
                      << (latip::verify_bip(inst, best->first) ? "true" : "false") << "\n";
        }
    }
    return best ? kExitFeasible : kExitInfeasible;
}

json artifacts_json(const latip::ReductionArtifacts& art) {
    json doc;
    const latip::Params& p = art.params;
    json params;
    params["s0"] = latip::int_str(p.s0);
    params["s1"] = latip::int_str(p.s1);
    params["lambda"] = latip::int_str(p.lambda);
    params["gamma"] = latip::int_str(p.gamma);
    params["delta"] = latip::int_str(p.delta);
    params["u_max"] = latip::int_str(p.u_max);
    params["p"] = latip::rat_str(p.p);
    params["delta_i"] = vec_json(p.delta_i);
    params["C"] = vec_json(p.weights);
    doc["params"] = std::move(params);
    json rows = json::array();
    for (const auto& row : art.basis) {
        json r = json::array();
        for (const Rat& v : row) r.push_back(latip::rat_str(v));
        rows.push_back(std::move(r));
    }
    doc["basis"] = std::move(rows);
    json f = json::array();
    for (const Rat& v : art.functional) f.push_back(latip::rat_str(v));
    doc["subspace_functional"] = std::move(f);
    json inst;
    inst["a"] = vec_json(art.source.a);
    inst["b"] = latip::int_str(art.source.b);
    inst["u"] = vec_json(art.source.u);
    doc["instance"] = std::move(inst);
    return doc;
}

int cmd_reduce(const GlobalOpts& g, const std::string& file) {
    latip::ParsedInstance parsed = latip::load_instance_file(file);
    latip::BkpInstance bkp;
    if (parsed.kind == latip::ParsedInstance::Kind::Bkp) {
        bkp = *parsed.bkp;
    } else {
        auto [eq, trail] = latip::aggregate(*parsed.bip);
        auto pos = latip::positivize(eq);
        if (pos.kind != latip::PositivizeResult::Kind::Reduced)
            throw std::invalid_argument(
                "reduce: instance degenerates before the lattice stage (b <= 0 after "
                "positivization)");
        bkp = *pos.instance;
    }
    json branches = json::array();
    for (const latip::Branch& br : latip::enforce_small_coeffs(bkp)) {
        if (br.kind != latip::Branch::Kind::Instance) continue;
        auto [inst, trail] = latip::ensure_not_double_b(*br.instance);
        auto art = latip::build_lattice_basis(inst, latip::choose_params(inst, Int(g.safety)));
        branches.push_back(artifacts_json(art));
    }
    if (branches.empty())
        throw std::invalid_argument("reduce: no lattice-carrying branch (closed-form instance)");
    if (g.json_out) {
        json doc;
        doc["branches"] = branches;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& b : branches) {
            std::cout << "params:";
            for (const char* key : {"s0", "s1", "lambda", "gamma", "delta", "u_max", "p"})
                std::cout << " " << key << "=" << b["params"][key].get<std::string>();
            std::cout << "\nbasis:\n";
            for (const auto& row : b["basis"]) {
                std::cout << " ";
                for (const auto& v : row) std::cout << " " << v.get<std::string>();
                std::cout << "\n";
            }
            std::cout << "subspace:";
            for (const auto& v : b["subspace_functional"])
                std::cout << " " << v.get<std::string>();
            std::cout << "\n";
        }
    }
    return kExitFeasible;
}

int cmd_oracle(const GlobalOpts& g, const std::string& file, bool count, bool optimize,
               const std::string& objective) {
    latip::ParsedInstance parsed = latip::load_instance_file(file);
    latip::BipInstance inst = parsed.kind == latip::ParsedInstance::Kind::Bip
                                  ? *parsed.bip
                                  : latip::as_bip(*parsed.bkp);
    const Int box_budget = latip::parse_int(g.box_budget);
    json doc;
    int exit_code = kExitFeasible;
    if (count) {
        Int n = latip::oracle_count(inst, box_budget);
        doc["count"] = latip::int_str(n);
        if (!g.json_out) std::cout << "count: " << latip::int_str(n) << "\n";
        exit_code = n > 0 ? kExitFeasible : kExitInfeasible;
    } else if (optimize) {
        IntVec c;
        if (!objective.empty())
            c = latip::parse_objective_arg(objective, inst.cols());
        else if (parsed.objective)
            c = *parsed.objective;
        else
            throw std::invalid_argument("oracle --optimize needs an objective");
        auto best = latip::oracle_optimize(inst, c, box_budget);
        doc["status"] = best ? "feasible" : "infeasible";
        if (best) {
            doc["x"] = vec_json(best->first);
            doc["value"] = latip::int_str(best->second);
        }
        if (!g.json_out) {
            std::cout << "status: " << (best ? "feasible" : "infeasible") << "\n";
            if (best) {
                std::cout << "x: ";
                print_assignment(std::cout, best->first);
                std::cout << "\nvalue: " << latip::int_str(best->second) << "\n";
            }
        }
        exit_code = best ? kExitFeasible : kExitInfeasible;
    } else {
        auto x = latip::oracle_solve(inst, box_budget);
        doc["status"] = x ? "feasible" : "infeasible";
        if (x) doc["x"] = vec_json(*x);
        if (!g.json_out) {
            std::cout << "status: " << (x ? "feasible" : "infeasible") << "\n";
            if (x) {
                std::cout << "x: ";
                print_assignment(std::cout, *x);
                std::cout << "\n";
            }
        }
        exit_code = x ? kExitFeasible : kExitInfeasible;
    }
    if (g.json_out) std::cout << doc.dump(2) << "\n";
    return exit_code;
}

int cmd_diophantine(const GlobalOpts& g, long lambda, std::size_t n, long t, long box) {
    const latip::DioInstance inst = latip::make_dio(Int(lambda), n, Int(t));
    auto solutions = latip::dio_enumerate(inst, Int(box));
    const bool holds = latip::dio_check_lemma(inst, Int(box));
    if (g.json_out) {
        json doc;
        doc["gamma"] = latip::int_str(inst.gamma);
        doc["lemma_holds"] = holds;
        json sols = json::array();
        for (const IntVec& s : solutions) sols.push_back(vec_json(s));
        doc["solutions"] = std::move(sols);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "gamma: " << latip::int_str(inst.gamma) << "\n";
        std::cout << "solutions (" << solutions.size() << "):\n";
        for (const IntVec& s : solutions) {
            std::cout << " ";
            for (const Int& v : s) std::cout << " " << latip::int_str(v);
            std::cout << "\n";
        }
        std::cout << "lemma_holds: " << (holds ? "true" : "false") << "\n";
    }
    return holds ? kExitFeasible : kExitInfeasible;
}

int cmd_gen(const GlobalOpts& g, const std::string& kind, std::size_t n, std::size_t m,
            std::uint64_t umax, std::uint64_t amax, bool feasible) {
    if (kind == "bkp") {
        auto inst = latip::gen_bkp(g.seed, n, umax, amax, feasible);
        std::cout << latip::instance_to_json(inst) << "\n";
    } else {
        auto inst = latip::gen_bip(g.seed, m, n, amax, umax, feasible);
        latip::SplitMix64 rng(g.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
        IntVec c = latip::gen_objective(rng.next(), n, 3);
        std::cout << latip::instance_to_json(inst, &c) << "\n";
    }
    return kExitFeasible;
}

int cmd_selftest(const GlobalOpts& g, int only) {
    latip::AcceptanceConfig cfg;
    cfg.node_budget = g.node_budget;
    bool all_passed = true;
    auto report = [&](const latip::CriterionResult& r) {
        all_passed = all_passed && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << " -- " << r.detail << "\n";
    };
    if (only > 0) {
        report(latip::run_criterion(only, cfg));
    } else {
        for (int id : latip::acceptance_criteria()) report(latip::run_criterion(id, cfg));
    }
    return all_passed ? kExitFeasible : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and counter for bounded integer programs via lattice enumeration"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--norm", g.norm, "Norm for the lattice route")
        ->check(CLI::IsMember({"l1", "linf"}))
        ->capture_default_str();
    app.add_option("--safety", g.safety, "Safety factor K scaling lambda")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--node-budget", g.node_budget, "Enumeration node budget")
        ->capture_default_str();
    app.add_option("--box-budget", g.box_budget, "Oracle box-size budget")
        ->capture_default_str();
    app.add_flag("--json", g.json_out, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for gen")->capture_default_str();

    std::string file;
    auto* solve = app.add_subcommand("solve", "Solve an instance through the lattice route");
    solve->add_option("file", file, "Instance file")->required();

    auto* count = app.add_subcommand("count", "Count solutions through the lattice route");
    count->add_option("file", file, "Instance file")->required();

    std::string objective;
    auto* optimize = app.add_subcommand("optimize", "Minimize c·x over the feasible box");
    optimize->add_option("file", file, "Instance file")->required();
    optimize->add_option("--objective", objective, "Objective file or inline list c1,c2,...");

    auto* reduce = app.add_subcommand("reduce", "Emit the lattice basis and parameters");
    reduce->add_option("file", file, "Instance file")->required();

    bool oracle_count_flag = false, oracle_opt_flag = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference over the box");
    oracle->add_option("file", file, "Instance file")->required();
    oracle->add_flag("--count", oracle_count_flag, "Count instead of solve");
    oracle->add_flag("--optimize", oracle_opt_flag, "Optimize instead of solve");
    oracle->add_option("--objective", objective, "Objective file or inline list");

    long dio_lambda = 10, dio_t = 0, dio_box = 20;
    std::size_t dio_n = 2;
    auto* dio = app.add_subcommand("diophantine", "Check the bounded-solution lemma");
    dio->add_option("--lambda", dio_lambda, "lambda (|lambda| >= 2)")->required();
    dio->add_option("--n", dio_n, "n >= 1")->required();
    dio->add_option("--t", dio_t, "right-hand multiplier t")->required();
    dio->add_option("--box", dio_box, "component bound")->required();

    std::string gen_kind = "bkp";
    std::size_t gen_n = 3, gen_m = 2;
    std::uint64_t gen_umax = 4, gen_amax = 15;
    bool gen_feasible = false;
    auto* gen = app.add_subcommand("gen", "Deterministic pseudorandom instance");
    gen->add_option("--kind", gen_kind, "bkp or bip")
        ->check(CLI::IsMember({"bkp", "bip"}))
        ->capture_default_str();
    gen->add_option("--n", gen_n, "variables")->capture_default_str();
    gen->add_option("--m", gen_m, "equations (bip)")->capture_default_str();
    gen->add_option("--umax", gen_umax, "bound range")->capture_default_str();
    gen->add_option("--amax", gen_amax, "coefficient range")->capture_default_str();
    gen->add_flag("--feasible", gen_feasible, "Plant a solution");

    int selftest_only = 0;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--only", selftest_only, "Run a single criterion");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(g, file);
        if (count->parsed()) return cmd_count(g, file);
        if (optimize->parsed()) return cmd_optimize(g, file, objective);
        if (reduce->parsed()) return cmd_reduce(g, file);
        if (oracle->parsed())
            return cmd_oracle(g, file, oracle_count_flag, oracle_opt_flag, objective);
        if (dio->parsed()) return cmd_diophantine(g, dio_lambda, dio_n, dio_t, dio_box);
        if (gen->parsed()) return cmd_gen(g, gen_kind, gen_n, gen_m, gen_umax, gen_amax,
                                          gen_feasible);
        if (selftest->parsed()) return cmd_selftest(g, selftest_only);
    } catch (const latip::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
