#include <doctest.h>

#include <algorithm>
#include <set>

#include "latip/diophantine.hpp"
#include "latip/gen.hpp"

using namespace latip;

TEST_CASE("make_dio computes gamma and validates inputs") {
    DioInstance inst = make_dio(10, 2, 1);
    CHECK(inst.gamma == 111);
    CHECK_THROWS_AS((void)make_dio(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_dio(10, 0, 0), std::invalid_argument);
}

TEST_CASE("dio_enumerate finds the bounded solutions") {
    DioInstance inst = make_dio(10, 2, 1);
    auto sols = dio_enumerate(inst, 11);
    auto has = [&sols](IntVec v) {
        return std::find(sols.begin(), sols.end(), v) != sols.end();
    };
    CHECK(has({1, 1, 1}));
    CHECK(has({11, 0, 1}));
    CHECK(has({1, 11, 0}));
    CHECK(has({-9, 2, 1}));
    CHECK(std::is_sorted(sols.begin(), sols.end(), lex_less));
    for (const IntVec& x : sols)
        CHECK(x[0] + 10 * x[1] + 100 * x[2] == 111);
}

TEST_CASE("dio_enumerate includes the constant solution at t = 0") {
    auto sols = dio_enumerate(make_dio(10, 2, 0), 5);
    CHECK(std::find(sols.begin(), sols.end(), IntVec{0, 0, 0}) != sols.end());
}

TEST_CASE("below the lambda threshold only the constant solution remains") {
    auto sols = dio_enumerate(make_dio(10, 2, 1), 8);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == IntVec{1, 1, 1});
}

TEST_CASE("dio_parameterize solves the triangular system") {
    DioInstance inst = make_dio(10, 2, 1);
    auto p = dio_parameterize(inst, {11, 0, 1});
    REQUIRE(p.has_value());
    CHECK(*p == IntVec{1, 0});

    auto constant = dio_parameterize(inst, {1, 1, 1});
    REQUIRE(constant.has_value());
    CHECK(*constant == IntVec{0, 0});

    CHECK(!dio_parameterize(inst, {2, 1, 1}).has_value());  // sum 112 != 111
}

TEST_CASE("dio_check_lemma holds on the reference grid") {
    CHECK(dio_check_lemma(make_dio(10, 2, 1), 20));
    CHECK(dio_check_lemma(make_dio(33, 2, 2), 66));
    CHECK(dio_check_lemma(make_dio(10, 3, 0), 20));
}

TEST_CASE("parameterization reconstructs every enumerated solution") {
    for (long lambda : {7L, 10L, -9L}) {
        for (long t : {-2L, 0L, 1L}) {
            DioInstance inst = make_dio(lambda, 2, t);
            for (const IntVec& x : dio_enumerate(inst, 2 * std::abs(lambda))) {
                auto p = dio_parameterize(inst, x);
                REQUIRE(p.has_value());
                CHECK(dio_from_parameters(inst, *p) == x);
            }
        }
    }
}

TEST_CASE("dio_enumerate agrees with a full scan at a small box") {
    DioInstance inst = make_dio(5, 2, 1);  // gamma = 31
    const long box = 7;
    std::set<IntVec> expected;
    for (long x0 = -box; x0 <= box; ++x0)
        for (long x1 = -box; x1 <= box; ++x1)
            for (long x2 = -box; x2 <= box; ++x2)
                if (x0 + 5 * x1 + 25 * x2 == 31) expected.insert(IntVec{x0, x1, x2});
    auto got = dio_enumerate(inst, box);
    CHECK(std::set<IntVec>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
}

TEST_CASE("dio_enumerate enforces the scan budget") {
    CHECK_THROWS_AS((void)dio_enumerate(make_dio(10, 2, 1), 100, 1000), budget_error);
}

TEST_CASE("lemma verification with |lambda| >= 2n across signs") {
    SplitMix64 rng(161803);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng.below(3);
        long lambda = static_cast<long>(2 * n + rng.below(8));
        if (trial % 2 == 0) lambda = -lambda;
        const long t = static_cast<long>(rng.below(5)) - 2;
        CHECK(dio_check_lemma(make_dio(lambda, n, t), 2 * std::abs(lambda)));
    }
}
