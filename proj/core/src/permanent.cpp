#include "opdet/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "opdet/errors.hpp"

namespace opdet {

namespace {

Int perm_rec(const ExactMatrix& a, int row, std::uint32_t cols) {
  if (cols == 0) return 1;
  Int total = 0;
  for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1) {
    const int col = std::countr_zero(rest) + 1;
    const Int& entry = a.at(row, col);
    if (entry != 0) total += entry * perm_rec(a, row + 1, cols & ~(rest & -rest));
  }
  return total;
}

}  // namespace

Int perm_brute(const ExactMatrix& a, int max_n) {
  const int n = a.size();
  if (n > max_n)
    throw SizeError("perm_brute: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  return perm_rec(a, 1, all);
}

Int perm_ryser(const ExactMatrix& a, int max_n) {
  const int n = a.size();
  if (n > max_n)
    throw SizeError("perm_ryser: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));

  // Walk subsets in Gray-code order so each step toggles one column in the
  // running row sums. The empty set's product is zero and is skipped.
  std::vector<Int> row_sum(n, 0);
  std::uint64_t prev_gray = 0;
  Int total = 0;
  for (std::uint64_t t = 1; t < (1ull << n); ++t) {
    const std::uint64_t gray = t ^ (t >> 1);
    const std::uint64_t flipped = gray ^ prev_gray;
    const int col = std::countr_zero(flipped) + 1;
    if (gray & flipped) {
      for (int i = 1; i <= n; ++i) row_sum[i - 1] += a.at(i, col);
    } else {
      for (int i = 1; i <= n; ++i) row_sum[i - 1] -= a.at(i, col);
    }
    prev_gray = gray;

    Int prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (prod == 0) continue;
    const int cardinality = std::popcount(gray);
    if (((n - cardinality) & 1) == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

}  // namespace opdet
