#include "tknot/laurent.hpp"

#include <algorithm>

namespace tknot {

using coeff_t = LaurentPoly::coeff_t;

coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw internal_error("integer overflow in Laurent arithmetic (add)");
    return out;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw internal_error("integer overflow in Laurent arithmetic (mul)");
    return out;
}

namespace {

std::string coeff_str(coeff_t v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 cannot appear: it has no positive counterpart and our checked
    // ops would have thrown building it.
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                : static_cast<unsigned __int128>(v);
    std::string digits;
    while (mag) {
        digits += char('0' + static_cast<int>(mag % 10));
        mag /= 10;
    }
    if (neg) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace

LaurentPoly LaurentPoly::constant(long long c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(long long c, int exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = exponent;
        p.coeffs_ = {static_cast<coeff_t>(c)};
    }
    return p;
}

int LaurentPoly::min_exp() const {
    TKNOT_CHECK(!is_zero());
    return lo_;
}

int LaurentPoly::max_exp() const {
    TKNOT_CHECK(!is_zero());
    return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

coeff_t LaurentPoly::coeff(int exponent) const {
    int idx = exponent - lo_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[idx];
}

void LaurentPoly::normalize() {
    size_t begin = 0, end = coeffs_.size();
    while (begin < end && coeffs_[begin] == 0) ++begin;
    while (end > begin && coeffs_[end - 1] == 0) --end;
    if (begin == end) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (begin > 0 || end < coeffs_.size()) {
        coeffs_ = std::vector<coeff_t>(coeffs_.begin() + begin,
                                       coeffs_.begin() + end);
        lo_ += static_cast<int>(begin);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    LaurentPoly out;
    out.lo_ = std::min(lo_, other.lo_);
    int hi = std::max(max_exp(), other.max_exp());
    out.coeffs_.assign(hi - out.lo_ + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[lo_ + static_cast<int>(i) - out.lo_] = coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) {
        auto& slot = out.coeffs_[other.lo_ + static_cast<int>(i) - out.lo_];
        slot = checked_add(slot, other.coeffs_[i]);
    }
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = checked_mul(c, -1);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return LaurentPoly();
    LaurentPoly out;
    out.lo_ = lo_ + other.lo_;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] = checked_add(
                out.coeffs_[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::shifted(int k, long long c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly out = *this;
    out.lo_ += k;
    if (c != 1)
        for (auto& v : out.coeffs_) v = checked_mul(v, c);
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
    TKNOT_CHECK(!divisor.is_zero());
    if (is_zero()) return LaurentPoly();
    // Long division from the top coefficient down. Works over the integers
    // exactly when the division is exact; any non-exact step throws.
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const coeff_t lead = divisor.coeffs_.back();
    while (!rem.is_zero() &&
           rem.coeffs_.size() >= divisor.coeffs_.size()) {
        coeff_t top = rem.coeffs_.back();
        if (top % lead != 0)
            throw internal_error(
                "inexact Laurent division (leading coefficient)");
        coeff_t q = top / lead;
        int shift = rem.max_exp() - divisor.max_exp();
        LaurentPoly term;
        term.lo_ = shift;
        term.coeffs_ = {q};
        quot = quot + term;
        rem = rem - divisor.shifted(shift, static_cast<long long>(q));
    }
    if (!rem.is_zero())
        throw internal_error("inexact Laurent division (nonzero remainder)");
    return quot;
}

coeff_t LaurentPoly::eval_one() const {
    coeff_t sum = 0;
    for (coeff_t c : coeffs_) sum = checked_add(sum, c);
    return sum;
}

coeff_t LaurentPoly::eval_minus_one() const {
    coeff_t sum = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int exp = lo_ + static_cast<int>(i);
        coeff_t c = (exp % 2 == 0) ? coeffs_[i] : checked_mul(coeffs_[i], -1);
        sum = checked_add(sum, c);
    }
    return sum;
}

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    if (min_exp() + max_exp() != 0) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

std::vector<std::pair<int, coeff_t>> LaurentPoly::terms() const {
    std::vector<std::pair<int, coeff_t>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(lo_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto [exp, c] : terms()) {
        bool neg = c < 0;
        coeff_t mag = neg ? checked_mul(c, -1) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string var;
        if (exp == 0)
            var = "";
        else if (exp == 1)
            var = "t";
        else
            var = "t^" + std::to_string(exp);
        if (var.empty()) {
            out += coeff_str(mag);
        } else if (mag == 1) {
            out += var;
        } else {
            out += coeff_str(mag) + "*" + var;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

}  // namespace tknot
