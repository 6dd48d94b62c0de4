#include "latip/preprocess.hpp"

#include <stdexcept>

namespace latip {

namespace {

void require_valid(const BipInstance& inst, const char* where) {
    auto v = validate_instance(inst);
    if (!v.empty()) throw std::invalid_argument(std::string(where) + ": " + v.front());
}

void require_valid(const BkpInstance& inst, const char* where) {
    auto v = validate_instance(inst);
    if (!v.empty()) throw std::invalid_argument(std::string(where) + ": " + v.front());
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

}  // namespace

std::pair<RawEquation, TransformTrail> aggregate(const BipInstance& bip) {
    require_valid(bip, "aggregate");
    RawEquation eq{bip.A[0], bip.b[0], bip.u};
    TransformTrail trail;
    for (std::size_t i = 1; i < bip.rows(); ++i) {
        Int reach = 0;  // max of |a1·x - b1| over the box
        for (std::size_t j = 0; j < eq.a.size(); ++j) reach += abs(eq.a[j]) * eq.u[j];
        reach += abs(eq.b);
        const Int m = reach + 1;
        if (m <= reach) throw std::logic_error("aggregate: multiplier not dominating");
        for (std::size_t j = 0; j < eq.a.size(); ++j) eq.a[j] += m * bip.A[i][j];
        eq.b += m * bip.b[i];
        trail.push(AggregateStep{m, i});
    }
    return {std::move(eq), std::move(trail)};
}

PositivizeResult positivize(const RawEquation& eq) {
    if (eq.a.size() != eq.u.size())
        throw std::invalid_argument("positivize: dimension mismatch");
    PositivizeResult out;
    IntVec a = eq.a;
    Int b = eq.b;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 0) {
            b += (-a[j]) * eq.u[j];
            a[j] = -a[j];
            out.trail.push(FlipColumnStep{j, eq.u[j]});
        }
    }
    IntVec kept_a, kept_u;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) {
            out.trail.push(DropZeroColumnStep{kept_a.size(), eq.u[j] + 1, Int(0)});
        } else {
            kept_a.push_back(a[j]);
            kept_u.push_back(eq.u[j]);
        }
    }
    out.reduced_dim = kept_a.size();
    if (b < 0) {
        out.kind = PositivizeResult::Kind::Infeasible;
    } else if (b == 0) {
        // Positive coefficients force every remaining variable to zero.
        out.kind = PositivizeResult::Kind::ZeroOnly;
    } else if (kept_a.empty()) {
        out.kind = PositivizeResult::Kind::Infeasible;  // empty sum cannot reach b >= 1
    } else {
        out.kind = PositivizeResult::Kind::Reduced;
        out.instance = BkpInstance{std::move(kept_a), std::move(b), std::move(kept_u)};
    }
    return out;
}

std::vector<Branch> enforce_small_coeffs(const BkpInstance& bkp) {
    require_valid(bkp, "enforce_small_coeffs");
    const std::size_t n = bkp.size();
    std::vector<Branch> out;

    // a_i = b: x_i = 1 forces all other variables to zero.
    for (std::size_t j = 0; j < n; ++j) {
        if (bkp.a[j] == bkp.b) {
            Assignment sol(n, Int(0));
            sol[j] = 1;
            Branch br;
            br.kind = Branch::Kind::Explicit;
            br.solution = sol;
            br.trail.push(BranchMarkerStep{out.size(), sol});
            out.push_back(std::move(br));
        }
    }

    Branch residual;
    residual.trail.push(BranchMarkerStep{out.size(), std::nullopt});
    IntVec kept_a, kept_u;
    for (std::size_t j = 0; j < n; ++j) {
        if (bkp.a[j] >= bkp.b) {
            residual.trail.push(FixVariableStep{kept_a.size(), Int(0)});
        } else {
            kept_a.push_back(bkp.a[j]);
            kept_u.push_back(bkp.u[j]);
        }
    }
    if (kept_a.empty()) {
        residual.kind = Branch::Kind::Infeasible;  // b >= 1 with an empty sum
    } else {
        residual.kind = Branch::Kind::Instance;
        residual.instance = BkpInstance{std::move(kept_a), bkp.b, std::move(kept_u)};
    }
    out.push_back(std::move(residual));
    return out;
}

std::pair<BkpInstance, TransformTrail> append_forced_one(const BkpInstance& bkp) {
    require_valid(bkp, "append_forced_one");
    BkpInstance cur = bkp;
    TransformTrail trail;
    while (true) {
        const std::size_t n = cur.size();
        Int u_max = cur.u[0];
        for (const Int& ui : cur.u)
            if (ui > u_max) u_max = ui;
        const Int extra = u_max * Int(n + 1) * cur.b;

        BkpInstance next = cur;
        next.a.push_back(extra);
        next.b = cur.b + extra;
        next.u.push_back(1);
        trail.push(AppendForcedOneStep{n});

        Int head_reach = dot(cur.a, cur.u);
        if (head_reach >= next.b)
            throw std::logic_error("append_forced_one: appended variable not forced to 1");
        for (const Int& ai : next.a)
            if (ai >= next.b) throw std::logic_error("append_forced_one: coefficient bound violated");

        cur = std::move(next);
        // Re-apply with one more variable in the (unreached) case Σa'u' = 2b'.
        if (dot(cur.a, cur.u) != 2 * cur.b) break;
    }
    return {std::move(cur), std::move(trail)};
}

std::pair<BkpInstance, TransformTrail> ensure_not_double_b(const BkpInstance& bkp) {
    require_valid(bkp, "ensure_not_double_b");
    if (dot(bkp.a, bkp.u) != 2 * bkp.b) return {bkp, TransformTrail{}};
    return append_forced_one(bkp);
}

Assignment pullback_solution(const TransformTrail& trail, Assignment x) {
    for (auto it = trail.steps.rbegin(); it != trail.steps.rend(); ++it) {
        std::visit(
            [&x](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, FlipColumnStep>) {
                    if (step.column >= x.size())
                        throw std::invalid_argument("pullback: flip index out of range");
                    x[step.column] = step.bound - x[step.column];
                } else if constexpr (std::is_same_v<T, DropZeroColumnStep>) {
                    if (step.column > x.size())
                        throw std::invalid_argument("pullback: drop index out of range");
                    x.insert(x.begin() + static_cast<std::ptrdiff_t>(step.column),
                             step.reinserted);
                } else if constexpr (std::is_same_v<T, FixVariableStep>) {
                    if (step.column > x.size())
                        throw std::invalid_argument("pullback: fix index out of range");
                    x.insert(x.begin() + static_cast<std::ptrdiff_t>(step.column), step.value);
                } else if constexpr (std::is_same_v<T, AppendForcedOneStep>) {
                    if (x.size() != step.index + 1)
                        throw std::invalid_argument("pullback: forced-one index mismatch");
                    if (x.back() != 1)
                        throw std::invalid_argument(
                            "pullback: not a solution of the forced-one instance");
                    x.pop_back();
                } else if constexpr (std::is_same_v<T, AppendSlackStep>) {
                    if (x.size() != step.index + 1)
                        throw std::invalid_argument("pullback: slack index mismatch");
                    x.pop_back();
                }
                // AggregateStep, BranchMarkerStep: identity on assignments.
            },
            *it);
    }
    return x;
}

Int pullback_count(const TransformTrail& trail, Int count) {
    if (count < 0) throw std::invalid_argument("pullback_count: negative count");
    for (const auto& s : trail.steps)
        if (const auto* drop = std::get_if<DropZeroColumnStep>(&s)) count *= drop->multiplicity;
    return count;
}

std::optional<std::pair<Assignment, Int>> binary_search_optimize(
    const BipInstance& bip, const IntVec& c, const FeasibilitySolver& solve) {
    require_valid(bip, "binary_search_optimize");
    if (c.size() != bip.cols())
        throw std::invalid_argument("binary_search_optimize: objective length mismatch");

    Int lo = 0, hi = 0;  // objective range over the box
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Int reach = c[j] * bip.u[j];
        if (reach < 0) lo += reach; else hi += reach;
    }

    if (lo == hi) {
        auto x = solve(bip);
        if (!x) return std::nullopt;
        Int value = dot(c, *x);
        if (value != lo) throw std::logic_error("binary_search_optimize: constant objective mismatch");
        return std::make_pair(std::move(*x), std::move(value));
    }

    const Int slack_bound = hi - lo;
    TransformTrail slack_trail;
    slack_trail.push(AppendSlackStep{bip.cols(), slack_bound});
    auto probe = [&](const Int& t) -> std::optional<Assignment> {
        BipInstance p = bip;
        for (auto& row : p.A) row.push_back(0);
        IntVec obj_row = c;
        obj_row.push_back(1);
        p.A.push_back(std::move(obj_row));
        p.b.push_back(t);
        p.u.push_back(slack_bound);
        auto x = solve(p);
        if (!x) return std::nullopt;
        return pullback_solution(slack_trail, std::move(*x));
    };

    auto witness = probe(hi);
    if (!witness) return std::nullopt;
    while (lo < hi) {
        const Int mid = floor_q(lo + hi, 2);
        if (auto x = probe(mid)) {
            witness = std::move(x);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Int value = dot(c, *witness);
    if (value != lo) throw std::logic_error("binary_search_optimize: witness value mismatch");
    return std::make_pair(std::move(*witness), std::move(value));
}

}  // namespace latip
