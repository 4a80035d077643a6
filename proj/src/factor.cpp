#include "tknot/factor.hpp"

#include <algorithm>

namespace tknot {

std::optional<SplitPoint> cyclic_decomposition(const BraidWord& b) {
    const int n = b.strands();
    const int p = b.length();
    for (int count : generator_counts(b))
        TKNOT_CHECK(count >= 2);  // irreducible projection required

    const auto& w = b.letters();
    for (int rot = 0; rot < p; ++rot) {
        for (int r = 2; r < n; ++r) {
            // The split exists iff every low letter precedes every high
            // letter in the rotated word; q is then forced.
            int first_high = -1, last_low = -1;
            for (int i = 0; i < p; ++i) {
                int letter = w[(rot + i) % p];
                if (letter >= r) {
                    if (first_high < 0) first_high = i;
                } else {
                    last_low = i;
                }
            }
            if (first_high < 0 || last_low < 0) continue;
            if (last_low < first_high)
                return SplitPoint{rot, r, first_high + 1};
        }
    }
    return std::nullopt;
}

std::pair<BraidWord, BraidWord> split_threshold(const BraidWord& b,
                                                const SplitPoint& s) {
    const int n = b.strands();
    const int p = b.length();
    TKNOT_CHECK(s.r > 1 && s.r < n);
    TKNOT_CHECK(s.q >= 2 && s.q <= p);
    BraidWord rotated = b.rotated(s.rotation);
    std::vector<int> low, high;
    for (int i = 0; i < p; ++i) {
        int letter = rotated.letters()[i];
        if (i < s.q - 1) {
            TKNOT_CHECK(letter < s.r);
            low.push_back(letter);
        } else {
            TKNOT_CHECK(letter >= s.r);
            high.push_back(letter - (s.r - 1));
        }
    }
    return {BraidWord(s.r, std::move(low)),
            BraidWord(n - s.r + 1, std::move(high))};
}

std::pair<BraidWord, BraidWord> split_single_occurrence(const BraidWord& b,
                                                        int g) {
    const int n = b.strands();
    TKNOT_CHECK(g >= 1 && g < n);
    TKNOT_CHECK(generator_counts(b)[g - 1] == 1);
    std::vector<int> low, high;
    for (int letter : b.letters()) {
        if (letter < g)
            low.push_back(letter);
        else if (letter > g)
            high.push_back(letter - g);
    }
    return {BraidWord(g, std::move(low)), BraidWord(n - g, std::move(high))};
}

namespace {

void check_split(const BraidWord& parent, const BraidWord& low,
                 const BraidWord& high, bool single) {
    // Exact conservation across every split: length - strands + 1 is
    // additive, and component counts satisfy parent = low + high - 1
    // (the split is a connected sum along one shared strand/crossing).
    TKNOT_CHECK(parent.euler_defect() ==
                low.euler_defect() + high.euler_defect());
    if (single) {
        TKNOT_CHECK(parent.length() == low.length() + high.length() + 1);
        TKNOT_CHECK(parent.strands() == low.strands() + high.strands());
    } else {
        TKNOT_CHECK(parent.length() == low.length() + high.length());
        TKNOT_CHECK(parent.strands() == low.strands() + high.strands() - 1);
    }
    int parent_comps = closure_info(parent).components;
    int low_comps = closure_info(low).components;
    int high_comps = closure_info(high).components;
    TKNOT_CHECK(parent_comps == low_comps + high_comps - 1);
    // Strict decrease in length + strands on both children: termination.
    TKNOT_CHECK(low.length() + low.strands() <
                parent.length() + parent.strands());
    TKNOT_CHECK(high.length() + high.strands() <
                parent.length() + parent.strands());
}

void factor_recursive(const BraidWord& w, bool knot_mode,
                      std::vector<BraidWord>& out,
                      std::vector<SplitEvent>* trace) {
    if (knot_mode) TKNOT_CHECK(closure_info(w).is_knot);
    if (w.strands() == 1) return;  // unknot part, contributes nothing

    auto counts = generator_counts(w);
    for (int count : counts)
        TKNOT_CHECK(count >= 1);  // splits never disconnect the diagram

    for (int g = 1; g < w.strands(); ++g) {
        if (counts[g - 1] != 1) continue;
        auto [low, high] = split_single_occurrence(w, g);
        check_split(w, low, high, /*single=*/true);
        if (trace)
            trace->push_back({SplitEvent::Kind::single_occurrence, w, low, high});
        factor_recursive(low, knot_mode, out, trace);
        factor_recursive(high, knot_mode, out, trace);
        return;
    }

    if (auto split = cyclic_decomposition(w)) {
        auto [low, high] = split_threshold(w, *split);
        check_split(w, low, high, /*single=*/false);
        if (trace)
            trace->push_back({SplitEvent::Kind::threshold, w, low, high});
        factor_recursive(low, knot_mode, out, trace);
        factor_recursive(high, knot_mode, out, trace);
        return;
    }

    out.push_back(canonical_rotation(w));
}

}  // namespace

Factorization factorize(const BraidWord& b, std::vector<SplitEvent>* trace) {
    if (b.strands() > 1) {
        auto counts = generator_counts(b);
        for (int g = 1; g < b.strands(); ++g) {
            if (counts[g - 1] == 0) {
                int comps = closure_info(b).components;
                throw not_a_knot_error(
                    "closure has " + std::to_string(comps) +
                        " components (disconnected diagram: generator " +
                        std::to_string(g) + " never occurs)",
                    comps);
            }
        }
    }
    const bool knot_mode = closure_info(b).is_knot;
    Factorization f;
    factor_recursive(b, knot_mode, f.prime_factors, trace);
    std::sort(f.prime_factors.begin(), f.prime_factors.end());
    return f;
}

Factorization factorize(const BraidWord& b) { return factorize(b, nullptr); }

}  // namespace tknot
