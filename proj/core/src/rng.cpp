#include "opdet/rng.hpp"

#include <vector>

namespace opdet {

ExactMatrix Rng::random_matrix(int n, int lo, int hi) {
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = uniform_int(lo, hi);
  return a;
}

EndoFunction Rng::random_function(int n) {
  std::vector<int> table(n);
  for (int j = 0; j < n; ++j) table[j] = uniform_int(1, n);
  return EndoFunction(n, std::move(table));
}

EndoFunction Rng::random_acyclic_function(int n) {
  for (;;) {
    EndoFunction f = random_function(n);
    if (is_acyclic(f)) return f;
  }
}

}  // namespace opdet
