#include <doctest.h>

#include <set>

#include "latip/gen.hpp"
#include "latip/reduction.hpp"
#include "latip/sap.hpp"

using namespace latip;

namespace {

const BkpInstance kExample{{2, 3}, 5, {2, 1}};

SapQuery example_query(Norm norm, Rat radius) {
    static const ReductionArtifacts art = build_lattice_basis(kExample, choose_params(kExample));
    SapQuery q;
    q.basis = art.basis;
    q.functional = art.functional;
    q.norm = norm;
    q.radius = std::move(radius);
    return q;
}

SapQuery infeasible_query(Norm norm, Rat radius) {
    static const BkpInstance inst{{2, 4}, 5, {3, 3}};
    static const ReductionArtifacts art = build_lattice_basis(inst, choose_params(inst));
    SapQuery q;
    q.basis = art.basis;
    q.functional = art.functional;
    q.norm = norm;
    q.radius = std::move(radius);
    return q;
}

}  // namespace

TEST_CASE("forward_map multiplies exactly") {
    const ReductionArtifacts art = build_lattice_basis(kExample, choose_params(kExample));
    CHECK(forward_map(art.basis, {0, 0, 0, 0, 0, 0}) == RatVec(6, Rat(0)));
    CHECK(forward_map(art.basis, {1, 0, 0, 0, 0, 0}) ==
          RatVec{make_rat(1, 2), 0, 10, 0, 0, 5});
    CHECK(forward_map(art.basis, {1, 1, 1, 1, 0, 2}) ==
          RatVec{make_rat(1, 2), 1, 0, make_rat(1, 2), 0, 0});
    CHECK_THROWS_AS((void)forward_map(art.basis, {1, 2}), std::invalid_argument);
}

TEST_CASE("enumerate_within finds exactly the embedded pair at radius 1") {
    EnumerationResult r = enumerate_within(example_query(Norm::Linf, 1));
    REQUIRE(r.vectors.size() == 2);
    // Lex order: the negated coefficient vector comes first.
    CHECK(r.vectors[0].z == IntVec{-1, -1, -1, -1, 0, -2});
    CHECK(r.vectors[1].z == IntVec{1, 1, 1, 1, 0, 2});
    CHECK(r.vectors[1].y == RatVec{make_rat(1, 2), 1, 0, make_rat(1, 2), 0, 0});
}

TEST_CASE("radius zero yields the empty set") {
    CHECK(enumerate_within(example_query(Norm::Linf, 0)).vectors.empty());
    CHECK(enumerate_within(example_query(Norm::L1, 0)).vectors.empty());
}

TEST_CASE("infeasible instances have an empty radius-1 slice") {
    CHECK(enumerate_within(infeasible_query(Norm::Linf, 1)).vectors.empty());
}

TEST_CASE("sap_shortest breaks ties toward the lex-smallest coefficients") {
    ShortestResult s = sap_shortest(example_query(Norm::Linf, 1));
    REQUIRE(s.vector.has_value());
    CHECK(s.norm_value == 1);
    CHECK(s.vector->z == IntVec{-1, -1, -1, -1, 0, -2});
}

TEST_CASE("sap_shortest at l1 radius n finds norm n") {
    ShortestResult s = sap_shortest(example_query(Norm::L1, 2));
    REQUIRE(s.vector.has_value());
    CHECK(s.norm_value == 2);
    CHECK(!sap_shortest(infeasible_query(Norm::L1, 2)).vector.has_value());
}

TEST_CASE("count_near_minimal counts the near-minimal slice") {
    NearMinimalResult r = count_near_minimal(example_query(Norm::Linf, 1), make_rat(2, 5));
    REQUIRE(r.lambda_min.has_value());
    CHECK(*r.lambda_min == 1);
    CHECK(r.count == 2);

    const BkpInstance surfaced{{1, 1, 12}, 14, {2, 2, 1}};
    const ReductionArtifacts art = build_lattice_basis(surfaced, choose_params(surfaced));
    SapQuery q;
    q.basis = art.basis;
    q.functional = art.functional;
    q.norm = Norm::Linf;
    q.radius = 1;
    NearMinimalResult r2 = count_near_minimal(q, 0);
    REQUIRE(r2.lambda_min.has_value());
    CHECK(*r2.lambda_min == 1);
    CHECK(r2.count == 6);  // 3 solutions in sign pairs

    NearMinimalResult r3 = count_near_minimal(infeasible_query(Norm::Linf, 1), 1);
    CHECK(!r3.lambda_min.has_value());
    CHECK(r3.count == 0);
}

TEST_CASE("reported vectors come in sign pairs") {
    for (Norm norm : {Norm::Linf, Norm::L1}) {
        EnumerationResult r =
            enumerate_within(example_query(norm, norm == Norm::Linf ? Rat(1) : Rat(2)));
        std::set<IntVec> seen;
        for (const auto& v : r.vectors) seen.insert(v.z);
        for (const auto& v : r.vectors) {
            IntVec neg = v.z;
            for (Int& c : neg) c = -c;
            CHECK(seen.count(neg) == 1);
        }
    }
}

TEST_CASE("shortest norm is monotone in the radius and stabilizes") {
    Rat prev_norm;
    bool prev_found = false;
    for (const Rat& radius : {make_rat(1, 2), Rat(1), make_rat(3, 2), Rat(2)}) {
        ShortestResult s = sap_shortest(example_query(Norm::Linf, radius));
        if (prev_found) {
            REQUIRE(s.vector.has_value());
            CHECK(s.norm_value <= prev_norm);
            CHECK(s.norm_value == 1);  // stabilized at the true minimum
        }
        if (s.vector) {
            prev_found = true;
            prev_norm = s.norm_value;
        }
    }
}

TEST_CASE("nodes_visited is deterministic") {
    EnumerationResult a = enumerate_within(example_query(Norm::Linf, 1));
    EnumerationResult b = enumerate_within(example_query(Norm::Linf, 1));
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.nodes_visited > 0);
}

TEST_CASE("node budget is enforced") {
    SapQuery q = example_query(Norm::Linf, 1);
    q.node_budget = 2;
    CHECK_THROWS_AS((void)enumerate_within(q), budget_error);
}

TEST_CASE("the zero functional excludes everything") {
    SapQuery q = example_query(Norm::Linf, 1);
    q.functional.assign(q.functional.size(), Rat(0));
    CHECK(enumerate_within(q).vectors.empty());
}

TEST_CASE("query validation rejects malformed bases") {
    SapQuery q;
    q.basis = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};  // upper entry nonzero
    q.functional = {Rat(1), Rat(0)};
    q.radius = 1;
    CHECK_THROWS_AS((void)enumerate_within(q), std::invalid_argument);

    SapQuery zero_diag;
    zero_diag.basis = {{Rat(0)}};
    zero_diag.functional = {Rat(1)};
    zero_diag.radius = 1;
    CHECK_THROWS_AS((void)enumerate_within(zero_diag), std::invalid_argument);

    SapQuery negative = example_query(Norm::Linf, 1);
    negative.radius = -1;
    CHECK_THROWS_AS((void)enumerate_within(negative), std::invalid_argument);
}

TEST_CASE("enumeration agrees with a direct scan on small random bases") {
    SplitMix64 rng(112358);
    int bases = 0;
    while (bases < 12) {
        const std::size_t d = 1 + rng.below(3);
        SapQuery q;
        q.basis.assign(d, RatVec(d, Rat(0)));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < r; ++c)
                q.basis[r][c] = make_rat(static_cast<long>(rng.below(5)) - 2, 1 + rng.below(2));
            long diag = static_cast<long>(rng.below(6)) - 3;
            if (diag >= 0) ++diag;
            q.basis[r][r] = Rat(diag);
        }
        q.functional.assign(d, Rat(0));
        q.functional[rng.below(d)] = Rat(1 + rng.below(2));
        q.norm = bases % 2 == 0 ? Norm::Linf : Norm::L1;
        q.radius = make_rat(1 + rng.below(3), 1 + rng.below(2));
        ++bases;

        EnumerationResult fast = enumerate_within(q);
        // Superset box from the triangular recurrence:
        // |z_r| <= (R + Σ_{c<r} |B_rc|·zmax_c) / |B_rr|.
        IntVec zmax(d);
        for (std::size_t r = 0; r < d; ++r) {
            Rat reach = q.radius;
            for (std::size_t c = 0; c < r; ++c) reach += abs(q.basis[r][c]) * Rat(zmax[c]);
            zmax[r] = rat_floor(reach / abs(q.basis[r][r]));
        }
        std::set<IntVec> expected;
        IntVec z(d);
        for (std::size_t j = 0; j < d; ++j) z[j] = -zmax[j];
        while (true) {
            RatVec y = forward_map(q.basis, z);
            Rat fy = 0;
            for (std::size_t i = 0; i < d; ++i) fy += q.functional[i] * y[i];
            if (fy != 0 && vector_norm(y, q.norm) <= q.radius) expected.insert(z);
            std::size_t j = d;
            bool advanced = false;
            while (j-- > 0) {
                if (z[j] < zmax[j]) {
                    ++z[j];
                    for (std::size_t k = j + 1; k < d; ++k) z[k] = -zmax[k];
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        std::set<IntVec> got;
        for (const auto& v : fast.vectors) got.insert(v.z);
        CHECK(got == expected);
    }
}
