#include "opdet/forest.hpp"

#include <bit>
#include <stdexcept>

namespace opdet {

RuleSet::RuleSet(int n, std::vector<std::uint64_t> ancestors)
    : n_(n), ancestors_(std::move(ancestors)) {
  if (ancestors_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("rule set: need one ancestor mask per element");
}

bool RuleSet::contains(int p, int q) const {
  if (p < 1 || p > n_ || q < 1 || q > n_) throw std::out_of_range("rule element out of range");
  return (ancestors_[q - 1] >> (p - 1)) & 1;
}

std::uint64_t RuleSet::ancestors_of(int q) const {
  if (q < 1 || q > n_) throw std::out_of_range("rule element out of range");
  return ancestors_[q - 1];
}

std::vector<std::pair<int, int>> RuleSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int q = 1; q <= n_; ++q)
    for (std::uint64_t m = ancestors_[q - 1]; m != 0; m &= m - 1)
      out.emplace_back(std::countr_zero(m) + 1, q);
  return out;
}

std::size_t RuleSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t m : ancestors_) total += std::popcount(m);
  return total;
}

RuleSet rules(const EndoFunction& f) {
  if (!is_acyclic(f)) throw std::domain_error("rules: function has a cycle; flatten it first");
  const int n = f.size();
  std::vector<std::uint64_t> ancestors(n, 0);
  for (int q = 1; q <= n; ++q) {
    int u = q;
    while (f(u) != u) {
      u = f(u);
      ancestors[q - 1] |= 1ull << (u - 1);
    }
  }
  return RuleSet(n, std::move(ancestors));
}

RootedForest forest(const EndoFunction& f) {
  if (!is_acyclic(f)) throw std::domain_error("forest: function has a cycle");
  const int n = f.size();
  RootedForest out;
  out.n = n;
  out.parent.assign(n, 0);
  out.depth.assign(n, -1);
  for (int q = 1; q <= n; ++q) {
    if (f(q) == q) {
      out.roots.push_back(q);
      out.depth[q - 1] = 0;
    } else {
      out.parent[q - 1] = f(q);
    }
  }
  for (int q = 1; q <= n; ++q) {
    if (out.depth[q - 1] >= 0) continue;
    // walk up to a node with known depth, then assign on the way back
    std::vector<int> chain;
    int u = q;
    while (out.depth[u - 1] < 0) {
      chain.push_back(u);
      u = f(u);
    }
    int d = out.depth[u - 1];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.depth[*it - 1] = ++d;
  }
  return out;
}

}  // namespace opdet
