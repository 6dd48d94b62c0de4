#include "latip/oracle.hpp"

#include <stdexcept>

namespace latip {

namespace {

void check_scannable(const BipInstance& inst, const Int& box_budget) {
    auto violations = validate_instance(inst);
    if (!violations.empty())
        throw std::invalid_argument("oracle: invalid instance: " + violations.front());
    Int box = 1;
    for (const Int& ui : inst.u) box *= ui + 1;
    if (box > box_budget)
        throw budget_error("oracle: box size " + int_str(box) + " exceeds budget " +
                           int_str(box_budget));
}

// Advances x through the box in lexicographic order (rightmost coordinate
// fastest). Returns false once the box is exhausted.
bool next_point(Assignment& x, const IntVec& u) {
    for (std::size_t j = x.size(); j-- > 0;) {
        if (x[j] < u[j]) {
            ++x[j];
            for (std::size_t k = j + 1; k < x.size(); ++k) x[k] = 0;
            return true;
        }
    }
    return false;
}

bool satisfies(const BipInstance& inst, const Assignment& x) {
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        Int sum = 0;
        for (std::size_t j = 0; j < x.size(); ++j) sum += inst.A[i][j] * x[j];
        if (sum != inst.b[i]) return false;
    }
    return true;
}

}  // namespace

std::optional<Assignment> oracle_solve(const BipInstance& inst, const Int& box_budget) {
    check_scannable(inst, box_budget);
    Assignment x(inst.cols(), 0);
    do {
        if (satisfies(inst, x)) return x;
    } while (next_point(x, inst.u));
    return std::nullopt;
}

Int oracle_count(const BipInstance& inst, const Int& box_budget) {
    check_scannable(inst, box_budget);
    Int count = 0;
    Assignment x(inst.cols(), 0);
    do {
        if (satisfies(inst, x)) ++count;
    } while (next_point(x, inst.u));
    return count;
}

std::optional<std::pair<Assignment, Int>> oracle_optimize(const BipInstance& inst,
                                                          const IntVec& c,
                                                          const Int& box_budget) {
    if (c.size() != inst.cols())
        throw std::invalid_argument("oracle_optimize: objective length mismatch");
    check_scannable(inst, box_budget);
    std::optional<std::pair<Assignment, Int>> best;
    Assignment x(inst.cols(), 0);
    do {
        if (!satisfies(inst, x)) continue;
        Int value = 0;
        for (std::size_t j = 0; j < x.size(); ++j) value += c[j] * x[j];
        // Lex scan order means the first hit at any value is the lex-smallest.
        if (!best || value < best->second) best = {x, value};
    } while (next_point(x, inst.u));
    return best;
}

}  // namespace latip
