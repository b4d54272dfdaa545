#pragma once

#include "opdet/bigint.hpp"
#include "opdet/exact_matrix.hpp"
#include "opdet/limits.hpp"

namespace opdet {

// Leibniz sum: sum over all n! permutations s of sgn(s) * prod_i a_{i,s(i)}.
// Throws SizeError when n exceeds max_n.
Int det_leibniz(const ExactMatrix& a, int max_n = limits::kLeibnizMaxN);

// Recursive cofactor expansion along the first remaining row.
Int det_cofactor(const ExactMatrix& a, int max_n = limits::kCofactorMaxN);

// Fraction-free (Bareiss) elimination. Every intermediate division is exact,
// so the result is the exact determinant for any dimension; no cap.
Int det_bareiss(const ExactMatrix& a);

}  // namespace opdet
