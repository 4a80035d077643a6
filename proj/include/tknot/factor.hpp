#pragma once

#include <optional>
#include <utility>

#include "tknot/braid.hpp"

namespace tknot {

// A witness that a word is decomposable: after rotating left by `rotation`,
// letters before 1-based position q are all < r and letters from q on are
// all >= r, with both parts nonempty (so 2 <= q <= length).
struct SplitPoint {
    int rotation = 0;
    int r = 0;
    int q = 0;
};

// Least (rotation, r, q) under which the word splits into a low block
// followed by a high block, or absent when no rotation admits a split —
// the word is then prime by Cromwell's criterion. Precondition: every
// generator occurs at least twice (an irreducible projection).
std::optional<SplitPoint> cyclic_decomposition(const BraidWord& b);

// Carries out a threshold split: the low block as a word in B_r and the
// high block, shifted down by r-1, as a word in B_{n-r+1}.
std::pair<BraidWord, BraidWord> split_threshold(const BraidWord& b,
                                                const SplitPoint& s);

// Removes a generator occurring exactly once (a nugatory crossing): letters
// below g as a word in B_g, letters above g shifted down by g as a word in
// B_{n-g}, order preserved within each part. g = n-1 with an empty high part
// is exactly Markov destabilization.
std::pair<BraidWord, BraidWord> split_single_occurrence(const BraidWord& b,
                                                        int g);

struct Factorization {
    // Canonical-rotation prime factors, sorted by (strands, length, letters).
    std::vector<BraidWord> prime_factors;
    int factor_count() const { return static_cast<int>(prime_factors.size()); }
    bool is_unknot() const { return prime_factors.empty(); }
};

// One recorded recursion split, for external conservation checks.
struct SplitEvent {
    enum class Kind { threshold, single_occurrence };
    Kind kind;
    BraidWord parent;
    BraidWord low;
    BraidWord high;
};

// Full prime factorization by recursive splitting: discard one-strand parts
// (unknots), remove single-occurrence generators, then split at cyclic
// decompositions until every remaining word is prime. Requires the closed
// diagram to be connected: every generator of B_n occurs, or n = 1; throws
// not_a_knot_error (naming the component count) otherwise. For knot closures
// every intermediate word is checked to close to a knot; in all cases
// component count and length - strands + 1 are conserved across every split.
Factorization factorize(const BraidWord& b);
Factorization factorize(const BraidWord& b, std::vector<SplitEvent>* trace);

}  // namespace tknot
