#include "opdet/determinant.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "opdet/errors.hpp"

namespace opdet {

namespace {

void check_cap(const char* op, int n, int max_n) {
  if (n > max_n)
    throw SizeError(std::string(op) + ": n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));
}

int inversion_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv & 1;
}

// Expand along row `row`, with `cols` the bitmask of still-unused columns
// (bit c-1 for column c). The alternating sign runs over the position of
// the chosen column among the remaining ones.
Int cofactor_rec(const ExactMatrix& a, int row, std::uint32_t cols) {
  if (cols == 0) return 1;
  Int total = 0;
  int sign = 1;
  for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1) {
    const int col = std::countr_zero(rest) + 1;
    const Int& entry = a.at(row, col);
    if (entry != 0) {
      const Int sub = cofactor_rec(a, row + 1, cols & ~(rest & -rest));
      if (sign > 0)
        total += entry * sub;
      else
        total -= entry * sub;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

Int det_leibniz(const ExactMatrix& a, int max_n) {
  const int n = a.size();
  check_cap("det_leibniz", n, max_n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Int total = 0;
  do {
    Int prod = 1;
    for (int i = 1; i <= n && prod != 0; ++i) prod *= a.at(i, perm[i - 1]);
    if (prod == 0) continue;
    if (inversion_parity(perm) == 0)
      total += prod;
    else
      total -= prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Int det_cofactor(const ExactMatrix& a, int max_n) {
  const int n = a.size();
  check_cap("det_cofactor", n, max_n);
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  return cofactor_rec(a, 1, all);
}

Int det_bareiss(const ExactMatrix& a) {
  const int n = a.size();
  ExactMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 1; k < n; ++k) {
    // Any nonzero pivot works in exact arithmetic; take the first.
    int p = k;
    while (p <= n && m.at(p, k) == 0) ++p;
    if (p > n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    const Int pivot = m.at(k, k);
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = pivot;
  }
  Int det = m.at(n, n);
  return sign > 0 ? det : -det;
}

}  // namespace opdet
