#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "tknot/errors.hpp"

namespace tknot {

// Exact integer Laurent polynomial in one variable t. Coefficients are
// overflow-checked 128-bit integers; any overflow throws internal_error
// rather than wrapping, so arithmetic is exact or loud.
class LaurentPoly {
  public:
    using coeff_t = __int128;

    LaurentPoly() = default;  // zero
    static LaurentPoly constant(long long c);
    static LaurentPoly monomial(long long c, int exponent);
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    coeff_t coeff(int exponent) const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly operator-() const;
    // Multiply by c * t^k.
    LaurentPoly shifted(int k, long long c = 1) const;

    // Exact division; throws internal_error when the division is not exact
    // (remainder nonzero), which signals a bug upstream.
    LaurentPoly divided_exactly_by(const LaurentPoly& divisor) const;

    // Value at t = 1 and t = -1 (exact).
    coeff_t eval_one() const;
    coeff_t eval_minus_one() const;

    // Coefficient-wise symmetry under t -> 1/t about exponent 0.
    bool is_palindromic() const;

    bool operator==(const LaurentPoly&) const = default;

    // Ascending-exponent rendering, e.g. "t^-1 - 1 + t".
    std::string str() const;

    // Nonzero (exponent, coefficient) pairs, ascending exponent.
    std::vector<std::pair<int, coeff_t>> terms() const;

  private:
    void normalize();

    // Dense coefficients for exponents lo_ .. lo_ + coeffs_.size() - 1,
    // trimmed so both ends are nonzero; empty means the zero polynomial.
    int lo_ = 0;
    std::vector<coeff_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Overflow-checked 128-bit helpers used by LaurentPoly and the Burau code.
LaurentPoly::coeff_t checked_add(LaurentPoly::coeff_t a, LaurentPoly::coeff_t b);
LaurentPoly::coeff_t checked_mul(LaurentPoly::coeff_t a, LaurentPoly::coeff_t b);

}  // namespace tknot
