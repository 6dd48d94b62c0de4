#include "latip/gen.hpp"

#include <stdexcept>

namespace latip {

BkpInstance gen_bkp(std::uint64_t seed, std::size_t n, std::uint64_t umax, std::uint64_t amax,
                    bool planted) {
    if (n == 0 || umax == 0 || amax == 0)
        throw std::invalid_argument("gen_bkp: n, umax, amax must be positive");
    SplitMix64 rng(seed);
    BkpInstance inst;
    inst.a.resize(n);
    inst.u.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        inst.a[j] = Int(1 + rng.below(amax));
        inst.u[j] = Int(1 + rng.below(umax));
    }
    if (planted) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Int b = 0;
            for (std::size_t j = 0; j < n; ++j)
                b += inst.a[j] * Int(rng.below(inst.u[j].get_ui() + 1));
            if (b >= 1) {
                inst.b = b;
                return inst;
            }
        }
        Int b = 0;  // all-zero draws exhausted; plant the corner point u
        for (std::size_t j = 0; j < n; ++j) b += inst.a[j] * inst.u[j];
        inst.b = b;
        return inst;
    }
    Int reach = 0;
    for (std::size_t j = 0; j < n; ++j) reach += inst.a[j] * inst.u[j];
    inst.b = Int(1 + rng.below(reach.get_ui() + 2));
    return inst;
}

BipInstance gen_bip(std::uint64_t seed, std::size_t m, std::size_t n, std::uint64_t coeff_abs,
                    std::uint64_t umax, bool planted) {
    if (m == 0 || n == 0 || umax == 0)
        throw std::invalid_argument("gen_bip: m, n, umax must be positive");
    SplitMix64 rng(seed);
    BipInstance inst;
    inst.A.assign(m, IntVec(n));
    inst.u.resize(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inst.A[i][j] = Int(static_cast<long>(rng.below(2 * coeff_abs + 1)) -
                               static_cast<long>(coeff_abs));
    for (std::size_t j = 0; j < n; ++j) inst.u[j] = Int(1 + rng.below(umax));
    inst.b.resize(m);
    if (planted) {
        IntVec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = Int(rng.below(inst.u[j].get_ui() + 1));
        for (std::size_t i = 0; i < m; ++i) {
            Int b = 0;
            for (std::size_t j = 0; j < n; ++j) b += inst.A[i][j] * x[j];
            inst.b[i] = b;
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            Int reach = 0;
            for (std::size_t j = 0; j < n; ++j) reach += abs(inst.A[i][j]) * inst.u[j];
            const std::uint64_t span = 2 * reach.get_ui() + 3;
            inst.b[i] = Int(static_cast<long>(rng.below(span))) - reach - 1;
        }
    }
    return inst;
}

IntVec gen_objective(std::uint64_t seed, std::size_t n, std::uint64_t cmax) {
    SplitMix64 rng(seed);
    IntVec c(n);
    for (std::size_t j = 0; j < n; ++j)
        c[j] = Int(static_cast<long>(rng.below(2 * cmax + 1)) - static_cast<long>(cmax));
    return c;
}

}  // namespace latip
