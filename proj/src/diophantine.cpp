#include "latip/diophantine.hpp"

#include <stdexcept>

namespace latip {

DioInstance make_dio(Int lambda, std::size_t n, Int t) {
    if (abs(lambda) < 2) throw std::invalid_argument("make_dio: |lambda| must be >= 2");
    if (n < 1) throw std::invalid_argument("make_dio: n must be >= 1");
    DioInstance inst;
    inst.lambda = std::move(lambda);
    inst.n = n;
    inst.t = std::move(t);
    inst.gamma = 0;
    Int pow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        inst.gamma += pow;
        pow *= inst.lambda;
    }
    return inst;
}

std::vector<IntVec> dio_enumerate(const DioInstance& inst, const Int& box, const Int& budget) {
    if (box < 1) throw std::invalid_argument("dio_enumerate: box must be positive");
    const Int width = 2 * box + 1;
    Int scan = 1;
    for (std::size_t i = 0; i <= inst.n; ++i) scan *= width;
    if (scan > budget)
        throw budget_error("dio_enumerate: scan size " + int_str(scan) + " exceeds budget " +
                           int_str(budget));

    IntVec powers(inst.n + 1);
    powers[0] = 1;
    for (std::size_t i = 1; i <= inst.n; ++i) powers[i] = powers[i - 1] * inst.lambda;
    const Int target = inst.gamma * inst.t;

    std::vector<IntVec> out;
    IntVec x(inst.n + 1, -box);
    // Lexicographic scan of the first n coordinates; the last one is solved
    // exactly from the remainder.
    IntVec prefix(inst.n + 1, Int(0));  // prefix[k] = Σ_{i<k} lambda^i x_i
    std::size_t k = 0;
    while (true) {
        if (k == inst.n) {
            const Int rest = target - prefix[k];
            if (mpz_divisible_p(rest.get_mpz_t(), powers[inst.n].get_mpz_t())) {
                Int last;
                mpz_divexact(last.get_mpz_t(), rest.get_mpz_t(), powers[inst.n].get_mpz_t());
                if (abs(last) <= box) {
                    x[inst.n] = last;
                    out.push_back(x);
                }
            }
            // backtrack to the deepest coordinate that can still advance
            while (k > 0 && x[k - 1] == box) --k;
            if (k == 0) break;
            ++x[k - 1];
            for (std::size_t j = k; j < inst.n; ++j) x[j] = -box;
            prefix[k] = prefix[k - 1] + powers[k - 1] * x[k - 1];
            continue;
        }
        prefix[k + 1] = prefix[k] + powers[k] * x[k];
        ++k;
    }
    return out;
}

std::optional<IntVec> dio_parameterize(const DioInstance& inst, const IntVec& x) {
    if (x.size() != inst.n + 1)
        throw std::invalid_argument("dio_parameterize: expected n+1 components");
    Int sum = 0, pow = 1;
    for (std::size_t i = 0; i <= inst.n; ++i) {
        sum += pow * x[i];
        pow *= inst.lambda;
    }
    if (sum != inst.gamma * inst.t) return std::nullopt;

    IntVec params(inst.n);
    Int carry = 0;  // t_{k-1}
    for (std::size_t k = 0; k < inst.n; ++k) {
        const Int num = x[k] - inst.t + carry;
        if (!mpz_divisible_p(num.get_mpz_t(), inst.lambda.get_mpz_t()))
            throw std::logic_error("dio_parameterize: triangular system not solvable");
        mpz_divexact(params[k].get_mpz_t(), num.get_mpz_t(), inst.lambda.get_mpz_t());
        carry = params[k];
    }
    if (x[inst.n] - inst.t != -params[inst.n - 1])
        throw std::logic_error("dio_parameterize: final identity violated");
    return params;
}

IntVec dio_from_parameters(const DioInstance& inst, const IntVec& params) {
    if (params.size() != inst.n)
        throw std::invalid_argument("dio_from_parameters: expected n components");
    IntVec x(inst.n + 1);
    x[0] = inst.t + inst.lambda * params[0];
    for (std::size_t k = 1; k < inst.n; ++k)
        x[k] = inst.t - params[k - 1] + inst.lambda * params[k];
    x[inst.n] = inst.t - params[inst.n - 1];
    return x;
}

bool dio_check_lemma(const DioInstance& inst, const Int& box, const Int& budget) {
    const Int bound = abs(inst.lambda) - abs(inst.t);
    for (const IntVec& x : dio_enumerate(inst, box, budget)) {
        if (!dio_parameterize(inst, x)) return false;
        bool constant = true;
        Int max_abs = 0;
        for (const Int& xi : x) {
            if (xi != inst.t) constant = false;
            if (abs(xi) > max_abs) max_abs = abs(xi);
        }
        if (!constant && max_abs < bound) return false;
    }
    return true;
}

}  // namespace latip
