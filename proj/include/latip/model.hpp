#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latip/numeric.hpp"

namespace latip {

/// Integral equation system Ax = b over the box 0 <= x <= u.
struct BipInstance {
    IntMat A;   // m x n
    IntVec b;   // length m
    IntVec u;   // length n, all entries >= 1

    std::size_t rows() const { return A.size(); }
    std::size_t cols() const { return A.empty() ? u.size() : A.front().size(); }
};

/// Single equation a·x = b with positive coefficients over the box 0 <= x <= u.
struct BkpInstance {
    IntVec a;   // length n, all entries >= 1
    Int b;      // >= 1
    IntVec u;   // length n, all entries >= 1

    std::size_t size() const { return a.size(); }
};

using Assignment = IntVec;

/// Empty result iff all type invariants hold; each entry names the field and
/// the broken constraint.
std::vector<std::string> validate_instance(const BipInstance& inst);
std::vector<std::string> validate_instance(const BkpInstance& inst);

/// Exact check of a·x = b and 0 <= x <= u. Throws on dimension mismatch.
bool verify_bkp(const BkpInstance& inst, const Assignment& x);

/// Exact check of Ax = b and 0 <= x <= u. Throws on dimension mismatch.
bool verify_bip(const BipInstance& inst, const Assignment& x);

/// One-row BIP embedding of a knapsack instance.
BipInstance as_bip(const BkpInstance& inst);

}  // namespace latip
