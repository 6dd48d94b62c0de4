#pragma once

#include <cstdint>

#include "latip/model.hpp"

namespace latip {

/// splitmix64: platform-independent deterministic stream for seeded instance
/// generation (std:: distributions are implementation-defined and would break
/// byte-identical output).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n = 0 yields 0.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    std::uint64_t state_;
};

/// Knapsack with a_i in [1, amax], u_i in [1, umax]; when planted, b = a·x for
/// a box point x (resampled until b >= 1), otherwise b in [1, Σa_iu_i + 2].
BkpInstance gen_bkp(std::uint64_t seed, std::size_t n, std::uint64_t umax, std::uint64_t amax,
                    bool planted);

/// Equation system with A_ij in [-coeff_abs, coeff_abs], u_i in [1, umax];
/// when planted, b = Ax for a box point x.
BipInstance gen_bip(std::uint64_t seed, std::size_t m, std::size_t n, std::uint64_t coeff_abs,
                    std::uint64_t umax, bool planted);

/// Objective with entries in [-cmax, cmax].
IntVec gen_objective(std::uint64_t seed, std::size_t n, std::uint64_t cmax);

}  // namespace latip
