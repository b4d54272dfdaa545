#pragma once

#include "opdet/bigint.hpp"
#include "opdet/limits.hpp"

namespace opdet {

// Stirling number of the second kind, S(n,k) = k*S(n-1,k) + S(n-1,k-1).
Int stirling2(int n, int k);

// Fubini (ordered Bell) number: sum_k k! * S(n,k), the number of ordered
// partitions of an n-set.
Int fubini(int n, int max_n = limits::kFubiniMaxN);

// Alternating sum over part counts, sum_k (-1)^(n-k) k! S(n,k).
// Evaluates the sum as written; it collapses to 1 for every n >= 0.
Int stirling_alternating_identity(int n);

}  // namespace opdet
