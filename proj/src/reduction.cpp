#include "latip/reduction.hpp"

#include <stdexcept>

namespace latip {

namespace {

void require_valid(const BkpInstance& bkp, const char* where) {
    auto v = validate_instance(bkp);
    if (!v.empty()) throw std::invalid_argument(std::string(where) + ": " + v.front());
}

}  // namespace

Params choose_params(const BkpInstance& bkp, const Int& safety) {
    require_valid(bkp, "choose_params");
    if (safety < 1) throw std::invalid_argument("choose_params: safety factor must be >= 1");
    const std::size_t n = bkp.size();
    Params p;
    p.delta = 1;
    p.u_max = bkp.u[0];
    for (const Int& ui : bkp.u) {
        p.delta *= ui;
        if (ui > p.u_max) p.u_max = ui;
    }
    const Int n_int(static_cast<unsigned long>(n));
    p.s0 = n_int * n_int + 1;
    p.s1 = p.s0;
    p.lambda = safety * p.delta * n_int * n_int * n_int * p.u_max + 1;
    p.gamma = 0;
    Int pow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        p.gamma += pow;
        pow *= p.lambda;
    }
    p.delta_i.resize(n);
    p.weights.resize(n);
    Int lpow = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p.delta_i[i] = p.delta / bkp.u[i];
        p.weights[i] = p.delta_i[i] * lpow;
        lpow *= p.lambda;
    }
    p.p = make_rat(p.lambda, p.delta * n_int * p.u_max);
    if (Rat(p.s0) < p.p) p.p = Rat(p.s0);
    if (Rat(p.s1) < p.p) p.p = Rat(p.s1);
    return p;
}

ReductionArtifacts build_lattice_basis(const BkpInstance& bkp, const Params& params) {
    require_valid(bkp, "build_lattice_basis");
    const std::size_t n = bkp.size();
    if (params.delta_i.size() != n || params.weights.size() != n)
        throw std::invalid_argument("build_lattice_basis: parameters inconsistent with instance");
    const Int n_int(static_cast<unsigned long>(n));
    Int delta = 1, u_max = bkp.u[0];
    for (const Int& ui : bkp.u) {
        delta *= ui;
        if (ui > u_max) u_max = ui;
    }
    if (params.delta != delta || params.u_max != u_max ||
        params.s0 <= n_int * n_int || params.s1 <= n_int * n_int ||
        params.lambda <= delta * n_int * n_int * n_int * u_max)
        throw std::invalid_argument("build_lattice_basis: parameters inconsistent with instance");
    Int gamma = 0, pow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        gamma += pow;
        pow *= params.lambda;
    }
    if (params.gamma != gamma)
        throw std::invalid_argument("build_lattice_basis: parameters inconsistent with instance");
    const std::size_t d = 2 * n + 2;

    ReductionArtifacts art;
    art.source = bkp;
    art.params = params;
    art.basis.assign(d, RatVec(d, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        art.basis[i][i] = make_rat(1, bkp.u[i]);
        art.basis[n + 1 + i][n + 1 + i] = make_rat(1, bkp.u[i]);
    }
    for (std::size_t j = 0; j < n; ++j) art.basis[n][j] = Rat(params.s0 * bkp.a[j]);
    art.basis[n][n] = Rat(-params.s0 * bkp.b);
    const Int lambda_n = int_pow(params.lambda, static_cast<unsigned long>(n));
    for (std::size_t j = 0; j < n; ++j) {
        art.basis[d - 1][j] = Rat(params.s1 * params.weights[j]);
        art.basis[d - 1][n + 1 + j] = Rat(params.s1 * params.weights[j]);
    }
    art.basis[d - 1][n] = Rat(params.s1 * params.delta * lambda_n);
    art.basis[d - 1][d - 1] = Rat(-params.s1 * params.gamma);

    art.functional.assign(d, Rat(0));
    for (std::size_t i = 0; i < n; ++i) art.functional[i] = Rat(bkp.a[i] * bkp.u[i]);

    Rat det = 1;
    for (std::size_t i = 0; i < d; ++i) det *= art.basis[i][i];
    const Rat expected = make_rat(params.s0 * params.s1 * bkp.b * params.gamma,
                                  params.delta * params.delta);
    if (abs(det) != expected)
        throw std::logic_error("build_lattice_basis: determinant identity violated");
    return art;
}

LatticeVector embed_solution(const ReductionArtifacts& artifacts, const Assignment& x) {
    const BkpInstance& src = artifacts.source;
    if (!verify_bkp(src, x))
        throw std::invalid_argument("embed_solution: x does not solve the instance");
    const std::size_t n = src.size();
    const Params& prm = artifacts.params;

    LatticeVector v;
    v.z.assign(2 * n + 2, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
        v.z[j] = x[j];
        v.z[n + 1 + j] = src.u[j] - x[j];
    }
    v.z[n] = 1;
    // The unique last coefficient zeroing the gamma row.
    Int w = prm.delta * int_pow(prm.lambda, static_cast<unsigned long>(n));
    for (std::size_t j = 0; j < n; ++j) w += prm.weights[j] * (v.z[j] + v.z[n + 1 + j]);
    if (!mpz_divisible_p(w.get_mpz_t(), prm.gamma.get_mpz_t()))
        throw std::logic_error("embed_solution: gamma row not closeable");
    mpz_divexact(v.z.back().get_mpz_t(), w.get_mpz_t(), prm.gamma.get_mpz_t());

    v.y = forward_map(artifacts.basis, v.z);
    if (v.y[n] != 0 || v.y[2 * n + 1] != 0)
        throw std::logic_error("embed_solution: scaled rows nonzero");
    if (vector_norm(v.y, Norm::Linf) > 1 ||
        vector_norm(v.y, Norm::L1) != Rat(Int(static_cast<unsigned long>(n))))
        throw std::logic_error("embed_solution: norm profile violated");
    Rat fy = 0;
    for (std::size_t i = 0; i < v.y.size(); ++i) fy += artifacts.functional[i] * v.y[i];
    if (fy == 0) throw std::logic_error("embed_solution: embedded vector lies in S");
    return v;
}

std::pair<bool, bool> check_structural_conditions(const ReductionArtifacts& artifacts,
                                                  const LatticeVector& v) {
    const std::size_t n = artifacts.source.size();
    if (v.y.size() != 2 * n + 2 || v.z.size() != 2 * n + 2)
        throw std::invalid_argument("check_structural_conditions: dimension mismatch");
    const bool rows_zero = v.y[n] == 0 && v.y[2 * n + 1] == 0;
    bool pair_sums = true;
    for (std::size_t i = 0; i < n && pair_sums; ++i)
        pair_sums = v.y[i] + v.y[n + 1 + i] == Rat(v.z[n]);
    return {rows_zero, pair_sums};
}

std::optional<Assignment> extract_solution(const ReductionArtifacts& artifacts,
                                           const LatticeVector& v) {
    const BkpInstance& src = artifacts.source;
    const std::size_t n = src.size();
    if (v.y.size() != 2 * n + 2)
        throw std::invalid_argument("extract_solution: dimension mismatch");
    Rat fy = 0;
    for (std::size_t i = 0; i < v.y.size(); ++i) fy += artifacts.functional[i] * v.y[i];
    if (fy == 0) return std::nullopt;  // vectors inside S carry no solution

    Assignment candidate(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat xj = Rat(src.u[j]) * v.y[j];
        if (!is_integer(xj)) return std::nullopt;
        candidate[j] = xj.get_num();
    }
    if (verify_bkp(src, candidate)) return candidate;
    for (Int& c : candidate) c = -c;
    if (verify_bkp(src, candidate)) return candidate;
    return std::nullopt;
}

}  // namespace latip
