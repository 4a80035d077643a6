#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tknot/diagram.hpp"

using namespace tknot;

namespace {

bool has_single_occurrence_generator(const BraidWord& b) {
    for (int count : generator_counts(b))
        if (count == 1) return true;
    return false;
}

}  // namespace

TEST_CASE("diagram graph shape") {
    auto g = diagram_graph(parse_braid("111", 2));
    CHECK(g.vertices == 3);
    CHECK(g.edges.size() == 6);

    auto single = diagram_graph(parse_braid("1", 2));
    CHECK(single.vertices == 1);
    // Both strand positions wrap straight back: two loops.
    CHECK(single.edges.size() == 2);
    for (auto [a, b] : single.edges) CHECK(a == b);

    CHECK_THROWS_AS(diagram_graph(BraidWord(2, {})), parse_error);
    CHECK_THROWS_AS(diagram_graph(parse_braid("11", 3)), parse_error);
}

TEST_CASE("reducibility reference values") {
    CHECK_FALSE(is_reducible_diagram(parse_braid("111", 2)));
    CHECK(is_reducible_diagram(parse_braid("1", 2)));
    // The lone sigma_2 crossing is a cut vertex of the 7-crossing diagram.
    CHECK(is_reducible_diagram(parse_braid("1112333", 4)));
    CHECK_FALSE(is_reducible_diagram(parse_braid("1212", 3)));
    CHECK_FALSE(is_reducible_diagram(parse_braid("122112234343344")));
}

TEST_CASE("reducible iff some generator occurs exactly once, exhaustively") {
    // All positive words, 2 <= n <= 4, length <= 7, knot closure, every
    // generator used at least once.
    long long checked = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int len = 1; len <= 7; ++len) {
            std::vector<int> letters(len, 1);
            for (;;) {
                BraidWord b(n, letters);
                auto counts = generator_counts(b);
                bool all_used = true;
                for (int c : counts)
                    if (c == 0) all_used = false;
                if (all_used && closure_info(b).is_knot) {
                    ++checked;
                    CHECK(is_reducible_diagram(b) ==
                          has_single_occurrence_generator(b));
                }
                int i = len - 1;
                while (i >= 0 && letters[i] == n - 1) letters[i--] = 1;
                if (i < 0) break;
                ++letters[i];
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("reducible iff single occurrence, random larger samples") {
    std::mt19937 rng(42);
    int done = 0;
    while (done < 500) {
        std::uniform_int_distribution<int> strands_dist(2, 6);
        int n = strands_dist(rng);
        std::uniform_int_distribution<int> len_dist(n, 16);
        std::vector<int> letters(len_dist(rng));
        std::uniform_int_distribution<int> letter_dist(1, n - 1);
        for (auto& l : letters) l = letter_dist(rng);
        BraidWord b(n, std::move(letters));
        bool all_used = true;
        for (int c : generator_counts(b))
            if (c == 0) all_used = false;
        if (!all_used || !closure_info(b).is_knot) continue;
        ++done;
        CHECK(is_reducible_diagram(b) == has_single_occurrence_generator(b));
    }
}
