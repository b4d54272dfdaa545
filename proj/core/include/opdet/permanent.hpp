#pragma once

#include "opdet/bigint.hpp"
#include "opdet/exact_matrix.hpp"
#include "opdet/limits.hpp"

namespace opdet {

// Permanent as the unsigned Leibniz sum over all n! permutations.
Int perm_brute(const ExactMatrix& a, int max_n = limits::kPermBruteMaxN);

// Ryser's inclusion-exclusion over column subsets S:
//   perm(A) = sum_{S subset of [n]} (-1)^{n-|S|} prod_i sum_{j in S} a_{i,j}.
// For each row i the inner sum runs over the columns j in S.
Int perm_ryser(const ExactMatrix& a, int max_n = limits::kRyserMaxN);

}  // namespace opdet
