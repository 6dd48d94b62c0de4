#include "latip/sap.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace latip {

namespace {

void validate_query(const SapQuery& q) {
    const std::size_t d = q.basis.size();
    if (d == 0) throw std::invalid_argument("sap: empty basis");
    for (std::size_t i = 0; i < d; ++i) {
        if (q.basis[i].size() != d) throw std::invalid_argument("sap: basis not square");
        for (std::size_t j = i + 1; j < d; ++j)
            if (q.basis[i][j] != 0)
                throw std::invalid_argument("sap: basis not lower-triangular");
        if (q.basis[i][i] == 0) throw std::invalid_argument("sap: zero diagonal entry");
    }
    if (q.functional.size() != d)
        throw std::invalid_argument("sap: functional length mismatch");
    if (q.radius < 0) throw std::invalid_argument("sap: negative radius");
}

// Exact inverse of a lower-triangular matrix, used for static coordinate
// bounds |z_j| valid for every lattice vector inside the radius.
RatMat invert_lower_triangular(const RatMat& b) {
    const std::size_t d = b.size();
    RatMat inv(d, RatVec(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j) {
        inv[j][j] = Rat(1) / b[j][j];
        for (std::size_t i = j + 1; i < d; ++i) {
            Rat acc = 0;
            for (std::size_t t = j; t < i; ++t) acc += b[i][t] * inv[t][j];
            inv[i][j] = -acc / b[i][i];
        }
    }
    return inv;
}

class Enumerator {
public:
    explicit Enumerator(const SapQuery& q) : q_(q), d_(q.basis.size()) {
        scale_rows();
        compute_static_bounds();
        build_row_plans();
        cols_.resize(d_);
        for (std::size_t j = 0; j < d_; ++j)
            for (std::size_t r = j; r < d_; ++r)
                if (g_[r][j] != 0) cols_[j].emplace_back(r, g_[r][j]);
        partial_.assign(d_, Int(0));
        z_.assign(d_, Int(0));
    }

    EnumerationResult run() {
        EnumerationResult out;
        if (q_.radius == 0) return out;  // only the zero vector, which lies in M
        descend(0, Rat(0), out);
        return out;
    }

private:
    // Clears denominators per row: g[r] = basis row r times scale[r] > 0.
    void scale_rows() {
        g_.assign(d_, IntVec());
        scale_.assign(d_, Int(1));
        for (std::size_t r = 0; r < d_; ++r) {
            Int l = 1;
            for (std::size_t j = 0; j <= r; ++j) {
                Int den = q_.basis[r][j].get_den();
                Int gcd;
                mpz_gcd(gcd.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
                l = l / gcd * den;
            }
            scale_[r] = l;
            g_[r].resize(r + 1);
            for (std::size_t j = 0; j <= r; ++j) {
                Rat v = q_.basis[r][j] * l;
                g_[r][j] = v.get_num();  // exact: l is a common denominator
            }
        }
    }

    void compute_static_bounds() {
        RatMat inv = invert_lower_triangular(q_.basis);
        zmax_.assign(d_, Int(0));
        for (std::size_t j = 0; j < d_; ++j) {
            Rat reach = 0;  // bound on |z_j| over the norm ball of radius R
            if (q_.norm == Norm::Linf) {
                for (std::size_t l = 0; l <= j; ++l) reach += abs(inv[j][l]);
            } else {
                for (std::size_t l = 0; l <= j; ++l)
                    if (abs(inv[j][l]) > reach) reach = abs(inv[j][l]);
            }
            zmax_[j] = rat_floor(reach * q_.radius);
        }
    }

    // Per row: nonzero columns sorted by |coefficient| descending, with the
    // static reach |g|·zmax of each column.
    struct PlanEntry {
        std::size_t col;
        Int coeff;
        Int abs_coeff;
        Int reach;
    };

    void build_row_plans() {
        plans_.assign(d_, {});
        for (std::size_t r = 0; r < d_; ++r) {
            for (std::size_t j = 0; j <= r; ++j) {
                if (g_[r][j] == 0) continue;
                PlanEntry e{j, g_[r][j], abs(g_[r][j]), abs(g_[r][j]) * zmax_[j]};
                plans_[r].push_back(std::move(e));
            }
            std::stable_sort(plans_[r].begin(), plans_[r].end(),
                             [](const PlanEntry& a, const PlanEntry& b) {
                                 return a.abs_coeff > b.abs_coeff;
                             });
        }
    }

    void count_node(EnumerationResult& out) {
        if (++out.nodes_visited > q_.node_budget)
            throw budget_error("sap: node budget " + std::to_string(q_.node_budget) +
                               " exceeded");
    }

    // Necessary condition for any completion of the prefix to satisfy row r
    // with the unassigned |z_j| inside their static bounds. Columns are taken
    // by decreasing |coefficient|; while a coefficient dominates the reach of
    // the rest plus the norm allowance, its digit is forced and either pins
    // the target further or proves the row unreachable.
    bool row_reachable(std::size_t r, std::size_t next_depth, const Int& bound_num,
                       const Int& bound_den) const {
        const Int allow_num = bound_num * scale_[r];
        const Int& allow_den = bound_den;
        Int rest = 0;
        for (const PlanEntry& e : plans_[r])
            if (e.col >= next_depth) rest += e.reach;
        Int target = -partial_[r];
        for (const PlanEntry& e : plans_[r]) {
            if (e.col < next_depth) continue;
            rest -= e.reach;
            // Window |target - g·z| <= rest + allow has width < 1 iff
            // 2·(den·rest + num) < den·|g|.
            if (2 * (allow_den * rest + allow_num) >= allow_den * e.abs_coeff) return true;
            Int a = target, b = e.coeff;
            if (b < 0) { a = -a; b = -b; }
            const Int candidate = floor_q(2 * a + b, 2 * b);
            if (abs(candidate) > zmax_[e.col]) return false;
            target -= e.coeff * candidate;
            if (allow_den * abs(target) > allow_den * rest + allow_num) return false;
        }
        return true;
    }

    void descend(std::size_t k, const Rat& used, EnumerationResult& out) {
        const Rat budget = q_.norm == Norm::Linf ? q_.radius : Rat(q_.radius - used);
        const Int& p = budget.get_num();
        const Int& q = budget.get_den();
        const Int& g = g_[k][k];
        // |partial_k + g·z_k| <= budget·scale_k, so z_k spans one exact interval.
        Int t_lo = -p * scale_[k] - q * partial_[k];
        Int t_hi = p * scale_[k] - q * partial_[k];
        Int qg = q * g;
        Int zlo = g > 0 ? ceil_q(t_lo, qg) : ceil_q(t_hi, qg);
        Int zhi = g > 0 ? floor_q(t_hi, qg) : floor_q(t_lo, qg);
        if (zlo > zhi) return;

        for (auto& [r, grk] : cols_[k]) partial_[r] += grk * zlo;
        for (Int val = zlo;; ++val) {
            count_node(out);
            z_[k] = val;
            bool viable = true;
            Rat next_used = used;
            if (q_.norm == Norm::L1) {
                next_used += abs(make_rat(partial_[k], scale_[k]));
            }
            if (k + 1 < d_) {
                const Rat next_budget =
                    q_.norm == Norm::Linf ? q_.radius : Rat(q_.radius - next_used);
                for (std::size_t r = k + 1; r < d_ && viable; ++r)
                    viable = row_reachable(r, k + 1, next_budget.get_num(),
                                           next_budget.get_den());
                if (viable) descend(k + 1, next_used, out);
            } else {
                emit_leaf(out);
            }
            if (val == zhi) break;
            for (auto& [r, grk] : cols_[k]) partial_[r] += grk;
        }
        for (auto& [r, grk] : cols_[k]) partial_[r] -= grk * zhi;
    }

    void emit_leaf(EnumerationResult& out) {
        Rat fy = 0;
        RatVec y(d_);
        for (std::size_t r = 0; r < d_; ++r) {
            y[r] = make_rat(partial_[r], scale_[r]);
            if (q_.functional[r] != 0) fy += q_.functional[r] * y[r];
        }
        if (fy == 0) return;  // member of M
        out.vectors.push_back(LatticeVector{z_, std::move(y)});
    }

    const SapQuery& q_;
    std::size_t d_;
    IntMat g_;
    IntVec scale_;
    IntVec zmax_;
    std::vector<std::vector<PlanEntry>> plans_;
    std::vector<std::vector<std::pair<std::size_t, Int>>> cols_;
    IntVec partial_;
    IntVec z_;
};

}  // namespace

Rat vector_norm(const RatVec& y, Norm norm) {
    Rat out = 0;
    for (const Rat& v : y) {
        if (norm == Norm::L1) out += abs(v);
        else if (abs(v) > out) out = abs(v);
    }
    return out;
}

RatVec forward_map(const RatMat& basis, const IntVec& z) {
    const std::size_t d = basis.size();
    if (z.size() != d) throw std::invalid_argument("forward_map: length mismatch");
    RatVec y(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (basis[i].size() != d) throw std::invalid_argument("forward_map: basis not square");
        for (std::size_t j = 0; j < d; ++j) y[i] += basis[i][j] * z[j];
    }
    return y;
}

EnumerationResult enumerate_within(const SapQuery& q) {
    validate_query(q);
    Enumerator e(q);
    return e.run();
}

ShortestResult sap_shortest(const SapQuery& q) {
    EnumerationResult r = enumerate_within(q);
    ShortestResult out;
    out.nodes_visited = r.nodes_visited;
    for (auto& v : r.vectors) {
        Rat nv = vector_norm(v.y, q.norm);
        // Lex order of the enumeration makes the first strict minimum the
        // lex-smallest among ties.
        if (!out.vector || nv < out.norm_value) {
            out.norm_value = nv;
            out.vector = std::move(v);
        }
    }
    return out;
}

NearMinimalResult count_near_minimal(const SapQuery& q, const Rat& epsilon) {
    if (epsilon < 0) throw std::invalid_argument("count_near_minimal: negative epsilon");
    NearMinimalResult out;
    ShortestResult s = sap_shortest(q);
    out.nodes_visited = s.nodes_visited;
    if (!s.vector) return out;
    out.lambda_min = s.norm_value;
    SapQuery q2 = q;
    q2.radius = (Rat(1) + epsilon) * s.norm_value;
    EnumerationResult r2 = enumerate_within(q2);
    out.nodes_visited += r2.nodes_visited;
    out.count = Int(r2.vectors.size());
    return out;
}

}  // namespace latip
