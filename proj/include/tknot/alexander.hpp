#pragma once

#include "tknot/braid.hpp"
#include "tknot/laurent.hpp"

namespace tknot {

// Alexander polynomial of the knot closed from a positive braid word,
// computed as det(burau(b) - I) divided exactly by 1 + t + ... + t^{n-1}
// and normalized so that the result is palindromic about t^0 with value 1
// at t = 1. Throws not_a_knot_error when the closure is not a knot.
LaurentPoly alexander(const BraidWord& b);

// Product of the reduced Burau matrices of the word's letters, as a
// row-major (n-1) x (n-1) matrix. Exposed for tests.
std::vector<LaurentPoly> reduced_burau(const BraidWord& b);

// Fraction-free determinant (Bareiss) of a row-major k x k matrix over
// integer Laurent polynomials. Exposed for tests.
LaurentPoly laurent_det(std::vector<LaurentPoly> m, int k);

}  // namespace tknot
