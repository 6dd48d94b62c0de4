#include <doctest.h>

#include "latip/gen.hpp"
#include "latip/oracle.hpp"
#include "latip/preprocess.hpp"
#include "latip/reduction.hpp"

using namespace latip;

namespace {

const BkpInstance kExample{{2, 3}, 5, {2, 1}};

ReductionArtifacts example_artifacts() {
    return build_lattice_basis(kExample, choose_params(kExample));
}

}  // namespace

TEST_CASE("choose_params applies the minimal rule") {
    Params p = choose_params(kExample);
    CHECK(p.s0 == 5);
    CHECK(p.s1 == 5);
    CHECK(p.delta == 2);
    CHECK(p.u_max == 2);
    CHECK(p.lambda == 33);
    CHECK(p.gamma == 1123);
    CHECK(p.weights == IntVec{1, 66});
    CHECK(p.delta_i == IntVec{1, 2});
    CHECK(p.p == make_rat(33, 8));
}

TEST_CASE("choose_params at n = 1") {
    Params p = choose_params(BkpInstance{{1}, 1, {1}});
    CHECK(p.s0 == 2);
    CHECK(p.s1 == 2);
    CHECK(p.lambda == 2);
    CHECK(p.gamma == 3);
}

TEST_CASE("choose_params scales lambda by the safety factor") {
    Params p = choose_params(kExample, 4);
    CHECK(p.lambda == 129);
    CHECK_THROWS_AS((void)choose_params(kExample, 0), std::invalid_argument);
}

TEST_CASE("build_lattice_basis lays out the block rows") {
    ReductionArtifacts art = example_artifacts();
    REQUIRE(art.dim() == 6);
    CHECK(art.basis[2] == RatVec{10, 15, -25, 0, 0, 0});
    CHECK(art.basis[5] == RatVec{5, 330, 10890, 5, 330, -5615});
    const RatVec diag{make_rat(1, 2), 1, -25, make_rat(1, 2), 1, -5615};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(art.basis[i][i] == diag[i]);
        for (std::size_t j = i + 1; j < 6; ++j) CHECK(art.basis[i][j] == 0);
    }
    CHECK(art.functional == RatVec{4, 3, 0, 0, 0, 0});
    Rat det = 1;
    for (std::size_t i = 0; i < 6; ++i) det *= art.basis[i][i];
    CHECK(abs(det) == make_rat(140375, 4));
}

TEST_CASE("embed_solution produces the expected lattice vector") {
    ReductionArtifacts art = example_artifacts();
    LatticeVector v = embed_solution(art, {1, 1});
    CHECK(v.z == IntVec{1, 1, 1, 1, 0, 2});
    CHECK(v.y == RatVec{make_rat(1, 2), 1, 0, make_rat(1, 2), 0, 0});
    CHECK_THROWS_AS((void)embed_solution(art, {2, 1}), std::invalid_argument);
}

TEST_CASE("embed_solution on the surfaced three-variable instance") {
    const BkpInstance inst{{1, 1, 12}, 14, {2, 2, 1}};
    ReductionArtifacts art = build_lattice_basis(inst, choose_params(inst));
    LatticeVector v = embed_solution(art, {1, 1, 1});
    CHECK(v.y == RatVec{make_rat(1, 2), make_rat(1, 2), 1, 0, make_rat(1, 2), make_rat(1, 2), 0,
                        0});
    CHECK(vector_norm(v.y, Norm::L1) == 3);
}

TEST_CASE("structural conditions split as expected") {
    ReductionArtifacts art = example_artifacts();
    LatticeVector embedded = embed_solution(art, {1, 1});
    CHECK(check_structural_conditions(art, embedded) == std::pair{true, true});

    LatticeVector e1{IntVec{1, 0, 0, 0, 0, 0}, forward_map(art.basis, {1, 0, 0, 0, 0, 0})};
    CHECK(e1.y == RatVec{make_rat(1, 2), 0, 10, 0, 0, 5});
    CHECK(check_structural_conditions(art, e1).first == false);

    LatticeVector e4{IntVec{0, 0, 0, 1, 0, 0}, forward_map(art.basis, {0, 0, 0, 1, 0, 0})};
    CHECK(e4.y[5] == 5);
    CHECK(check_structural_conditions(art, e4).first == false);
}

TEST_CASE("extract_solution reads solutions off short vectors") {
    ReductionArtifacts art = example_artifacts();
    LatticeVector v{IntVec{1, 1, 1, 1, 0, 2}, forward_map(art.basis, {1, 1, 1, 1, 0, 2})};
    auto x = extract_solution(art, v);
    REQUIRE(x.has_value());
    CHECK(*x == Assignment{1, 1});

    LatticeVector neg{IntVec{-1, -1, -1, -1, 0, -2},
                      forward_map(art.basis, {-1, -1, -1, -1, 0, -2})};
    auto xneg = extract_solution(art, neg);
    REQUIRE(xneg.has_value());
    CHECK(*xneg == Assignment{1, 1});

    // f·y = 0: members of S never extract.
    LatticeVector in_s{IntVec{3, -2, 0, 0, 0, 0}, forward_map(art.basis, {3, -2, 0, 0, 0, 0})};
    Rat fy = 0;
    for (std::size_t i = 0; i < 6; ++i) fy += art.functional[i] * in_s.y[i];
    REQUIRE(fy == 0);
    CHECK(!extract_solution(art, in_s).has_value());
}

TEST_CASE("build_lattice_basis rejects tampered parameters") {
    Params p = choose_params(kExample);
    p.lambda -= 1;  // drops below the delta·n^3·u_max floor
    CHECK_THROWS_AS((void)build_lattice_basis(kExample, p), std::invalid_argument);
    Params q = choose_params(kExample);
    q.gamma += 1;
    CHECK_THROWS_AS((void)build_lattice_basis(kExample, q), std::invalid_argument);
}

TEST_CASE("every vector within linf radius 1 satisfies the structural conditions") {
    SplitMix64 rng(86420);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const BkpInstance raw = gen_bkp(rng.next(), n, 4, 12, trial % 2 == 0);
        for (const Branch& br : enforce_small_coeffs(raw)) {
            if (br.kind != Branch::Kind::Instance) continue;
            auto [inst, trail] = ensure_not_double_b(*br.instance);
            ReductionArtifacts art = build_lattice_basis(inst, choose_params(inst));
            SapQuery q;
            q.basis = art.basis;
            q.functional = art.functional;
            q.norm = Norm::Linf;
            q.radius = 1;
            for (const LatticeVector& v : enumerate_within(q).vectors) {
                auto conds = check_structural_conditions(art, v);
                CHECK(conds.first);
                CHECK(conds.second);
            }
        }
    }
}

TEST_CASE("embed/extract round trip over random feasible instances") {
    SplitMix64 rng(1597);
    int round_trips = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const BkpInstance raw = gen_bkp(rng.next(), n, 4, 12, true);
        for (const Branch& br : enforce_small_coeffs(raw)) {
            if (br.kind != Branch::Kind::Instance) continue;
            auto [inst, trail] = ensure_not_double_b(*br.instance);
            ReductionArtifacts art = build_lattice_basis(inst, choose_params(inst));
            CHECK(art.dim() == 2 * inst.size() + 2);
            auto x = oracle_solve(as_bip(inst));
            if (!x) continue;
            LatticeVector v = embed_solution(art, *x);
            CHECK(vector_norm(v.y, Norm::Linf) <= 1);
            CHECK(vector_norm(v.y, Norm::L1) ==
                  Rat(Int(static_cast<unsigned long>(inst.size()))));
            auto back = extract_solution(art, v);
            REQUIRE(back.has_value());
            CHECK(*back == *x);
            ++round_trips;
        }
    }
    CHECK(round_trips > 20);
}
