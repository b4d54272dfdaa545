#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "opdet/endofunction.hpp"

namespace opdet {

// Precedence rules p <= q of an acyclic function: p precedes q whenever some
// iterate of f sends q to p. Stored transitively closed, reflexive pairs
// omitted.
class RuleSet {
 public:
  RuleSet(int n, std::vector<std::uint64_t> ancestors);

  int ground_set_size() const { return n_; }

  // True iff the rule p <= q is present (p != q).
  bool contains(int p, int q) const;

  // Mask of all p with p <= q, q excluded.
  std::uint64_t ancestors_of(int q) const;

  // All stored pairs (p, q), grouped by q ascending, then p ascending.
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t size() const;

 private:
  int n_;
  std::vector<std::uint64_t> ancestors_;
};

// Rules of an acyclic f. Throws std::domain_error when f has a cycle of
// length >= 2 (coefficient code flattens first instead).
RuleSet rules(const EndoFunction& f);

// An acyclic function drawn as a rooted forest: fixed points are the roots
// and every other node's parent is its image.
struct RootedForest {
  int n = 0;
  std::vector<int> roots;   // ascending
  std::vector<int> parent;  // parent[q-1] = f(q), or 0 for a root
  std::vector<int> depth;   // depth[q-1], 0 at the roots
  bool is_root(int q) const { return parent[q - 1] == 0; }
};

RootedForest forest(const EndoFunction& f);

}  // namespace opdet
