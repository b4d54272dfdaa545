#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace opdet {

// Total function f: {1..n} -> {1..n}, stored as its value table.
// Indexes the monomial a_f = prod_j a_{f(j),j} of the expansion.
class EndoFunction {
 public:
  EndoFunction(int n, std::vector<int> table);
  static EndoFunction identity(int n);

  // Text form "n: f(1) f(2) ... f(n)", e.g. "6: 1 3 2 3 6 5".
  static EndoFunction parse(std::string_view text);
  std::string to_string() const;

  int size() const { return n_; }
  int operator()(int j) const;
  const std::vector<int>& table() const { return table_; }

  auto operator<=>(const EndoFunction&) const = default;

 private:
  int n_;
  std::vector<int> table_;  // table_[j-1] = f(j), values 1-based
};

// Cycle structure of an endofunction. Fixed points count as cycles of
// length 1 here, so |D_f| = cycles.size() + non_cycle.size() and a
// bijection has non_cycle empty. (Flattening treats a fixed point the same
// way whether it is booked as a trivial cycle or as a non-cycle element:
// it stays put either way, and D_f comes out identical.)
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each rotated min-first, sorted by min
  std::vector<int> non_cycle;            // ascending
  int domain_size() const { return static_cast<int>(cycles.size() + non_cycle.size()); }
};

CycleDecomposition cycles(const EndoFunction& f);

// True iff every cycle is a fixed point: f^k(i) = i forces k = 1.
bool is_acyclic(const EndoFunction& f);

bool is_bijective(const EndoFunction& f);

struct FlattenResult {
  // The flattened function on the relabeled domain {1..|D_f|}; acyclic.
  EndoFunction function;
  // representatives[k-1] is the original element the new label k stands
  // for: the minimum of a collapsed cycle, or a non-cycle element itself.
  std::vector<int> representatives;
};

// Collapses every cycle of f to a single fixed point. The reduced domain
// D_f (one representative per cycle plus all non-cycle elements) is sorted
// ascending and relabeled to {1..|D_f|}, which makes the result canonical.
FlattenResult flatten(const EndoFunction& f);

// (-1)^(n - r) for a bijection, with r the number of cycles, fixed points
// included. Agrees with the inversion-parity sign of the permutation.
// Throws std::domain_error for non-bijections.
int sign(const EndoFunction& f);

}  // namespace opdet
