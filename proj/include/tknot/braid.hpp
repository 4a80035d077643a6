#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tknot/errors.hpp"

namespace tknot {

// A bijection on {0..n-1}. images[i] is where i goes.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Permutation realized by an adjacent transposition swapping i, i+1
    // (0-based i, on n elements).
    static Permutation transposition(int n, int i);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    // Apply this, then other.
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;

    int cycle_count() const;
    // Cycle lengths, sorted ascending.
    std::vector<int> cycle_type() const;
    int inversion_count() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

// A positive braid word in B_n: strand count plus letters in [1, strands-1].
// Immutable by convention once constructed; every operation returns values.
class BraidWord {
  public:
    BraidWord() : strands_(1) {}
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // Cyclic left rotation by k letters. Closure-preserving.
    BraidWord rotated(int k) const;

    // Writhe-minus-strands quantity 2g + mu - 1 used all over the
    // factoring invariants: length - strands + 1.
    int euler_defect() const { return length() - strands_ + 1; }

    bool operator==(const BraidWord&) const = default;
    // Orders by (strands, length, letters); the factor-list order.
    bool operator<(const BraidWord& other) const;

  private:
    int strands_;
    std::vector<int> letters_;
};

struct ClosureInfo {
    Permutation permutation;  // top position -> bottom position, 0-based
    int components = 0;       // cycle count
    bool is_knot = false;     // components == 1
};

// Parses either a compact digit string ("111", valid while all letters <= 9)
// or whitespace/comma-separated integers ("1 2 2 1"). A separator-free token
// is always read as compact digits. If strands is absent it is inferred as
// 1 + max letter (1 for the empty word).
BraidWord parse_braid(const std::string& text, std::optional<int> strands = {});

// Space-separated letters; the empty word prints as "".
std::string print_braid(const BraidWord& b);

ClosureInfo closure_info(const BraidWord& b);

// Lexicographically least cyclic rotation of the letters. Idempotent.
BraidWord canonical_rotation(const BraidWord& b);

// A positive permutation braid realizing `target` as its top->bottom strand
// permutation. Length equals the inversion count of target and each pair of
// strands crosses at most once. Letter order is the insertion-sort emission:
// for each k = 2..n the descending run moving position k left to its slot.
BraidWord positive_sort_braid(const Permutation& target);
// Same word as raw 1-based letters (for callers assembling larger words).
std::vector<int> positive_sort_letters(const Permutation& target);

// The positive half twist on q strands: (1)(2 1)(3 2 1)...(q-1 ... 1),
// of length q(q-1)/2, whose permutation reverses strand order.
BraidWord half_twist_word(int q);
std::vector<int> half_twist_letters(int q);

// Seifert genus of the closure of a positive braid word presenting a knot:
// (length - strands + 1) / 2. Throws not_a_knot_error otherwise.
int genus_positive(const BraidWord& b);

// Occurrence count of each generator 1..strands-1; counts[g-1] is for g.
std::vector<int> generator_counts(const BraidWord& b);

}  // namespace tknot
