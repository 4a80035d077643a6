#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tknot/laurent.hpp"

using namespace tknot;

namespace {

LaurentPoly from_terms(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (auto [exp, c] : terms) p = p + LaurentPoly::monomial(c, exp);
    return p;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 6), exp(-4, 4), coeff(-9, 9);
    LaurentPoly p;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
        p = p + LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
    auto p = from_terms({{0, 1}, {1, -1}});
    auto q = from_terms({{0, 1}, {1, 1}});
    CHECK((p * q) == from_terms({{0, 1}, {2, -1}}));
    CHECK((p + (-p)).is_zero());
    CHECK(LaurentPoly().is_zero());
    CHECK(from_terms({{3, 2}}).shifted(-3).coeff(0) == 2);
    CHECK((p - p).is_zero());
    // Cancellation trims to a genuinely smaller support.
    auto cancel = from_terms({{0, 1}, {5, 3}}) - from_terms({{5, 3}});
    CHECK(cancel.min_exp() == 0);
    CHECK(cancel.max_exp() == 0);
}

TEST_CASE("evaluation and palindromicity") {
    auto trefoil = from_terms({{-1, 1}, {0, -1}, {1, 1}});
    CHECK(trefoil.eval_one() == 1);
    CHECK(trefoil.eval_minus_one() == -3);
    CHECK(trefoil.is_palindromic());
    CHECK_FALSE(from_terms({{0, 1}, {1, 1}}).is_palindromic());
    CHECK_FALSE(from_terms({{-1, 2}, {0, 5}, {1, 3}}).is_palindromic());
}

TEST_CASE("exact division round-trips products") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 400) {
        auto a = random_poly(rng);
        auto b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        auto prod = a * b;
        CHECK(prod.divided_exactly_by(a) == b);
        CHECK(prod.divided_exactly_by(b) == a);
    }
}

TEST_CASE("inexact division throws") {
    auto p = from_terms({{0, 1}, {1, 1}});           // 1 + t
    auto q = from_terms({{0, 1}, {1, -1}, {2, 1}});  // 1 - t + t^2
    CHECK_THROWS_AS(q.divided_exactly_by(p), internal_error);
    CHECK_THROWS_AS(from_terms({{0, 3}}).divided_exactly_by(from_terms({{0, 2}})),
                    internal_error);
}

TEST_CASE("printing follows the ascending-term format") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly::one().str() == "1");
    CHECK(from_terms({{-1, 1}, {0, -1}, {1, 1}}).str() == "t^-1 - 1 + t");
    CHECK(from_terms({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}).str() ==
          "t^-2 - t^-1 + 1 - t + t^2");
    CHECK(from_terms({{0, -2}, {3, 4}}).str() == "-2 + 4*t^3");
    CHECK(from_terms({{1, 5}}).str() == "5*t");
    CHECK(from_terms({{-1, -1}}).str() == "-t^-1");
}

TEST_CASE("overflow is detected, not wrapped") {
    auto big = LaurentPoly::monomial(1, 0);
    for (int i = 0; i < 3; ++i) big = big * big * big * big;  // 1 stays 1
    CHECK(big == LaurentPoly::one());
    auto huge = LaurentPoly::monomial(std::numeric_limits<long long>::max(), 0);
    LaurentPoly acc = huge;
    CHECK_THROWS_AS([&] {
        for (int i = 0; i < 4; ++i) acc = acc * acc;
        return acc;
    }(), internal_error);
}
