#include "opdet/stirling.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "opdet/errors.hpp"

namespace opdet {

namespace {

// Row S(n, 0..n) of the triangle, computed in place.
std::vector<Int> stirling2_row(int n) {
  std::vector<Int> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row;
}

}  // namespace

Int stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("stirling2: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  return stirling2_row(n)[k];
}

Int fubini(int n, int max_n) {
  if (n < 0) throw SizeError("fubini: n must be >= 0");
  if (n > max_n)
    throw SizeError("fubini: n = " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  const auto row = stirling2_row(n);
  Int total = 0;
  Int factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    total += factorial * row[k];
  }
  return total;
}

Int stirling_alternating_identity(int n) {
  if (n < 0) throw std::invalid_argument("stirling_alternating_identity: n must be >= 0");
  const auto row = stirling2_row(n);
  Int total = 0;
  Int factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    const Int term = factorial * row[k];
    if (((n - k) & 1) == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace opdet
