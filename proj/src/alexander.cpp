#include "tknot/alexander.hpp"

#include <utility>

namespace tknot {

std::vector<LaurentPoly> reduced_burau(const BraidWord& b) {
    const int k = b.strands() - 1;
    std::vector<LaurentPoly> m(static_cast<size_t>(k) * k);
    auto at = [&](int r, int c) -> LaurentPoly& { return m[r * k + c]; };
    for (int i = 0; i < k; ++i) at(i, i) = LaurentPoly::one();

    // Right-multiply by the generator matrix for sigma_i. In the reduced
    // representation sigma_i maps basis columns
    //   e_{i-1} -> e_{i-1} + t e_i,   e_i -> -t e_i,   e_{i+1} -> e_i + e_{i+1}
    // (1-based i; absent neighbors dropped), so only three columns of the
    // running product change, each in terms of the old column i-1.
    for (int letter : b.letters()) {
        const int c = letter - 1;  // 0-based column of the -t entry
        std::vector<LaurentPoly> old_col(k);
        for (int r = 0; r < k; ++r) old_col[r] = at(r, c);
        for (int r = 0; r < k; ++r) {
            if (c - 1 >= 0) at(r, c - 1) = at(r, c - 1) + old_col[r].shifted(1);
            at(r, c) = old_col[r].shifted(1, -1);
            if (c + 1 < k) at(r, c + 1) = old_col[r] + at(r, c + 1);
        }
    }
    return m;
}

LaurentPoly laurent_det(std::vector<LaurentPoly> m, int k) {
    if (k == 0) return LaurentPoly::one();
    auto at = [&](int r, int c) -> LaurentPoly& { return m[r * k + c]; };
    // Bareiss fraction-free elimination: every intermediate entry is a true
    // minor of the input, so the divisions below are exact over Z[t, 1/t].
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (int i = 0; i + 1 < k; ++i) {
        if (at(i, i).is_zero()) {
            int pivot_row = -1;
            for (int r = i + 1; r < k; ++r)
                if (!at(r, i).is_zero()) {
                    pivot_row = r;
                    break;
                }
            if (pivot_row < 0) return LaurentPoly();  // singular
            for (int c = 0; c < k; ++c)
                std::swap(at(i, c), at(pivot_row, c));
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r) {
            for (int c = i + 1; c < k; ++c) {
                LaurentPoly num = at(r, c) * at(i, i) - at(r, i) * at(i, c);
                at(r, c) = num.divided_exactly_by(prev);
            }
            at(r, i) = LaurentPoly();
        }
        prev = at(i, i);
    }
    LaurentPoly det = at(k - 1, k - 1);
    return sign < 0 ? -det : det;
}

LaurentPoly alexander(const BraidWord& b) {
    auto info = closure_info(b);
    if (!info.is_knot)
        throw not_a_knot_error("closure has " + std::to_string(info.components) +
                                   " components; Alexander polynomial needs "
                                   "a knot",
                               info.components);
    const int n = b.strands();
    if (n == 1) return LaurentPoly::one();

    auto m = reduced_burau(b);
    const int k = n - 1;
    for (int i = 0; i < k; ++i)
        m[i * k + i] = m[i * k + i] - LaurentPoly::one();
    LaurentPoly det = laurent_det(std::move(m), k);
    TKNOT_CHECK(!det.is_zero());

    LaurentPoly cyclotomic;
    for (int i = 0; i < n; ++i)
        cyclotomic = cyclotomic + LaurentPoly::monomial(1, i);
    LaurentPoly delta = det.divided_exactly_by(cyclotomic);

    // Normalize to the centered palindromic representative with value 1
    // at t = 1.
    int span = delta.min_exp() + delta.max_exp();
    TKNOT_CHECK(span % 2 == 0);
    delta = delta.shifted(-span / 2);
    auto at_one = delta.eval_one();
    TKNOT_CHECK(at_one == 1 || at_one == -1);
    if (at_one == -1) delta = -delta;
    TKNOT_CHECK(delta.is_palindromic());
    // Knot determinant parity: |delta(-1)| is odd for every knot.
    auto det_val = delta.eval_minus_one();
    if (det_val < 0) det_val = checked_mul(det_val, -1);
    TKNOT_CHECK(det_val % 2 == 1);
    return delta;
}

}  // namespace tknot
