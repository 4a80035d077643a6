#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tknot/alexander.hpp"
#include "tknot/orbit.hpp"

using namespace tknot;

namespace {

LaurentPoly trefoil_poly() {
    return LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(-1, 0) +
           LaurentPoly::monomial(1, 1);
}

const char* kTwoBranch =
    "template twobranch\n"
    "branchline P\n"
    "branchline Q\n"
    "band a from P[0] to P[0] twists 0\n"
    "band b from P[1] to Q[0] twists 0\n"
    "band c from Q[0] to P[1] twists 0\n"
    "band d from Q[1] to Q[1] twists 0\n"
    "cross 2\n";

const char* kTwisted =
    "template twisted\n"
    "branchline b\n"
    "band x from b[0] to b[0] twists 0\n"
    "band y from b[1] to b[1] twists 2\n";

long long divisor_weighted_count(const std::vector<OrbitWord>& orbits, int p) {
    long long sum = 0;
    for (const auto& o : orbits)
        if (p % o.period() == 0) sum += o.period();
    return sum;
}

}  // namespace

TEST_CASE("lorenz orbit enumeration") {
    auto t = load_template("preset:lorenz");
    auto upto3 = enumerate_orbits(t, 3);
    REQUIRE(upto3.size() == 5);
    CHECK(upto3[0].str(t) == "x");
    CHECK(upto3[1].str(t) == "y");
    CHECK(upto3[2].str(t) == "x.y");
    CHECK(upto3[3].str(t) == "x.x.y");
    CHECK(upto3[4].str(t) == "x.y.y");

    CHECK(enumerate_orbits(t, 1).size() == 2);

    auto annulus = load_template("preset:annulus");
    CHECK(enumerate_orbits(annulus, 1).size() == 1);
    CHECK(enumerate_orbits(annulus, 10).size() == 1);
}

TEST_CASE("orbit words are canonical and primitive") {
    auto t = load_template("preset:lorenz");
    OrbitWord w(t, {1, 0, 0});  // y.x.x enters as x.x.y
    CHECK(w.str(t) == "x.x.y");
    CHECK(w.period() == 3);
    CHECK_THROWS_AS(OrbitWord(t, {0, 1, 0, 1}), internal_error);  // (xy)^2
}

TEST_CASE("trace formula on all fixtures") {
    for (const char* src : {kTwoBranch, kTwisted}) {
        auto t = parse_template(src);
        auto orbits = enumerate_orbits(t, 12);
        for (int p = 1; p <= 12; ++p)
            CHECK(bigint(divisor_weighted_count(orbits, p)) ==
                  transition_trace(t, p));
    }
    auto lorenz = load_template("preset:lorenz");
    auto orbits = enumerate_orbits(lorenz, 12);
    for (int p = 1; p <= 12; ++p) {
        CHECK(transition_trace(lorenz, p) == bigint(1) << p);  // tr(A^p) = 2^p
        CHECK(bigint(divisor_weighted_count(orbits, p)) ==
              transition_trace(lorenz, p));
    }
}

TEST_CASE("lorenz orbit braids: fixed points and the interleaving pair") {
    auto t = load_template("preset:lorenz");
    CHECK(orbit_braid(t, OrbitWord(t, {0})) == BraidWord(1, {}));
    CHECK(orbit_braid(t, OrbitWord(t, {1})) == BraidWord(1, {}));
    CHECK(orbit_braid(t, OrbitWord(t, {0, 1})) == BraidWord(2, {1}));
    CHECK(alexander(orbit_braid(t, OrbitWord(t, {0, 1}))) == LaurentPoly::one());
}

TEST_CASE("the trefoil orbit x.x.y.x.y") {
    auto t = load_template("preset:lorenz");
    auto braid = orbit_braid(t, OrbitWord(t, {0, 0, 1, 0, 1}));
    CHECK(braid.strands() == 5);
    CHECK(braid.length() == 6);
    CHECK(braid == BraidWord(5, {3, 2, 1, 4, 3, 2}));
    CHECK(genus_positive(braid) == 1);
    CHECK(alexander(braid) == trefoil_poly());
    auto f = factorize(braid);
    CHECK(f.factor_count() == 1);
}

TEST_CASE("twisted lorenz braids") {
    auto t = parse_template(kTwisted);
    // One strand through the twisted band alone cannot cross itself.
    CHECK(orbit_braid(t, OrbitWord(t, {0, 1})) == BraidWord(2, {1}));
    // Two strands share the y band: the full twist becomes two crossings.
    auto braid = orbit_braid(t, OrbitWord(t, {0, 1, 1}));
    CHECK(braid == BraidWord(3, {2, 2, 1, 2}));
    CHECK(factorize(braid).factor_count() == 1);
    CHECK(alexander(braid) == trefoil_poly());
    // The untwisted template keeps the same orbit unknotted.
    auto lorenz = load_template("preset:lorenz");
    auto flat = orbit_braid(lorenz, OrbitWord(lorenz, {0, 1, 1}));
    CHECK(flat == BraidWord(3, {1, 2}));
    CHECK(factorize(flat).factor_count() == 0);
}

TEST_CASE("braid construction is rotation independent") {
    auto lorenz = load_template("preset:lorenz");
    auto twisted = parse_template(kTwisted);
    auto two = parse_template(kTwoBranch);
    struct Case {
        const Template* t;
        std::vector<int> word;
    };
    std::vector<Case> cases = {
        {&lorenz, {0, 0, 1, 0, 1}},
        {&lorenz, {0, 1, 1, 0, 1, 1, 0, 1}},
        {&twisted, {0, 1, 1, 1, 0, 1}},
        {&two, {0, 1, 2, 0, 1, 3, 2}},
    };
    for (const auto& c : cases) {
        auto base = orbit_braid_cyclic(*c.t, c.word);
        auto base_factors = factorize(base).prime_factors;
        auto base_poly = alexander(base);
        for (size_t k = 1; k < c.word.size(); ++k) {
            std::vector<int> rotated;
            for (size_t i = 0; i < c.word.size(); ++i)
                rotated.push_back(c.word[(i + k) % c.word.size()]);
            auto braid = orbit_braid_cyclic(*c.t, rotated);
            CHECK(factorize(braid).prime_factors == base_factors);
            CHECK(alexander(braid) == base_poly);
        }
    }
}

TEST_CASE("census of the lorenz template to period 5") {
    auto t = load_template("preset:lorenz");
    auto result = census(t, 5);
    REQUIRE(result.records.size() == 14);  // 2+1+2+3+6 primitive orbits
    CHECK(result.stats.bound == 18);
    CHECK(result.max_factor_count == 1);

    int knotted = 0;
    for (const auto& rec : result.records) {
        CHECK(rec.braid.strands() == rec.orbit.period());
        CHECK(rec.factor_count <= 1);  // Williams: Lorenz knots are prime
        if (rec.orbit.period() <= 4) CHECK(rec.factor_count == 0);
        if (rec.genus == 0) CHECK(rec.factor_count == 0);
        if (rec.factor_count == 1) ++knotted;
        if (rec.orbit.str(t) == "x.x.y.x.y") {
            CHECK(rec.genus == 1);
            CHECK(rec.factor_count == 1);
            CHECK(rec.crossings == 6);
            CHECK(rec.alexander_poly == trefoil_poly());
        }
    }
    CHECK(knotted == 1);  // only x.x.y.x.y is knotted through period 5
}

TEST_CASE("census of the annulus") {
    auto t = load_template("preset:annulus");
    auto result = census(t, 10);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].braid == BraidWord(1, {}));
    CHECK(result.records[0].factor_count == 0);
    CHECK(result.records[0].alexander_poly == LaurentPoly::one());
    CHECK(result.max_factor_count == 0);
    CHECK(result.stats.bound == 2);
}

TEST_CASE("census respects the bound on every fixture") {
    for (const char* src : {kTwoBranch, kTwisted}) {
        auto t = parse_template(src);
        auto result = census(t, 7);
        CHECK(bigint(result.max_factor_count) <= result.stats.bound);
        for (const auto& rec : result.records) {
            CHECK(closure_info(rec.braid).is_knot);
            CHECK(rec.crossings == rec.braid.length());
        }
    }
}

TEST_CASE("parallel census output is identical to serial") {
    auto t = parse_template(kTwisted);
    auto serial = census(t, 8);
    CensusOptions opts;
    opts.jobs = 4;
    auto parallel = census(t, 8, opts);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].orbit == parallel.records[i].orbit);
        CHECK(serial.records[i].braid == parallel.records[i].braid);
        CHECK(serial.records[i].factors == parallel.records[i].factors);
        CHECK(serial.records[i].alexander_poly ==
              parallel.records[i].alexander_poly);
    }
    CHECK(serial.max_factor_count == parallel.max_factor_count);
}

TEST_CASE("orbit braid closures are the expected long cycle") {
    auto t = parse_template(kTwoBranch);
    for (const auto& orbit : enumerate_orbits(t, 6)) {
        auto braid = orbit_braid(t, orbit);
        auto info = closure_info(braid);
        CHECK(info.is_knot);
        CHECK(info.permutation.cycle_type() ==
              std::vector<int>{orbit.period()});
    }
}
