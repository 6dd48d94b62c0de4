#pragma once

#include <optional>
#include <vector>

#include "latip/numeric.hpp"

namespace latip {

// Desk-scale verifier for the Diophantine structure behind the gamma row:
// x_1 + lambda·x_2 + ... + lambda^n·x_{n+1} = gamma·t has the constant
// solution (t,...,t), and every other bounded solution carries a component of
// magnitude at least |lambda| - |t|.

struct DioInstance {
    Int lambda;  // |lambda| >= 2
    std::size_t n = 1;
    Int t;
    Int gamma;   // 1 + lambda + ... + lambda^n
};

DioInstance make_dio(Int lambda, std::size_t n, Int t);

inline const Int kDefaultDioBudget = Int("10000000000");

/// All x in Z^{n+1} with |x_i| <= box satisfying the equation, sorted
/// lexicographically. The (2·box+1)^{n+1} scan size is budget-guarded.
std::vector<IntVec> dio_enumerate(const DioInstance& inst, const Int& box,
                                  const Int& budget = kDefaultDioBudget);

/// The unique triangular parameters (t_1, ..., t_n) with
///   x_1 - t = lambda·t_1,  x_k - t = -t_{k-1} + lambda·t_k,  x_{n+1} - t = -t_n.
/// Absent iff x does not satisfy the equation; solvability for solutions is a
/// checked invariant.
std::optional<IntVec> dio_parameterize(const DioInstance& inst, const IntVec& x);

/// Inverse of dio_parameterize on its range.
IntVec dio_from_parameters(const DioInstance& inst, const IntVec& params);

/// True iff every enumerated solution other than (t,...,t) has a component of
/// magnitude >= |lambda| - |t| and every enumerated solution parameterizes.
bool dio_check_lemma(const DioInstance& inst, const Int& box,
                     const Int& budget = kDefaultDioBudget);

}  // namespace latip
