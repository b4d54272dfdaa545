#include "opdet/ordered_partition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opdet {

namespace {

std::uint64_t full_mask(int n) { return (n >= 64) ? ~0ull : ((1ull << n) - 1); }

}  // namespace

OrderedPartition::OrderedPartition(int n, std::vector<std::uint64_t> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > limits::kGroundSetMaxN)
    throw std::invalid_argument("ordered partition: ground set size must be in [1, 63]");
  if (blocks_.empty()) throw std::invalid_argument("ordered partition: no blocks");
  std::uint64_t seen = 0;
  for (std::uint64_t b : blocks_) {
    if (b == 0) throw std::invalid_argument("ordered partition: empty block");
    if (b & seen) throw std::invalid_argument("ordered partition: blocks overlap");
    seen |= b;
  }
  if (seen != full_mask(n))
    throw std::invalid_argument("ordered partition: blocks must cover exactly {1..n}");
}

OrderedPartition OrderedPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::uint64_t> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::uint64_t m = 0;
    for (int e : block) {
      if (e < 1 || e > n) throw std::invalid_argument("ordered partition: element out of range");
      m |= 1ull << (e - 1);
    }
    masks.push_back(m);
  }
  return OrderedPartition(n, std::move(masks));
}

OrderedPartition OrderedPartition::single_block(int n) {
  return OrderedPartition(n, {full_mask(n)});
}

OrderedPartition OrderedPartition::from_assignment(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("ordered partition: empty assignment word");
  int r = 0;
  for (int v : word) r = std::max(r, v);
  std::vector<std::uint64_t> masks(r, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = word[i - 1];
    if (v < 1 || v > r) throw std::invalid_argument("ordered partition: bad block label");
    masks[v - 1] |= 1ull << (i - 1);
  }
  return OrderedPartition(n, std::move(masks));  // ctor rejects any empty label
}

std::uint64_t OrderedPartition::block_mask(int k) const {
  if (k < 1 || k > block_count()) throw std::out_of_range("block position out of range");
  return blocks_[k - 1];
}

std::vector<int> OrderedPartition::block_elements(int k) const {
  std::vector<int> out;
  for (std::uint64_t m = block_mask(k); m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int OrderedPartition::block_index(int element) const {
  if (element < 1 || element > n_) throw std::out_of_range("element out of range");
  const std::uint64_t bit = 1ull << (element - 1);
  for (int k = 0; k < block_count(); ++k)
    if (blocks_[k] & bit) return k + 1;
  throw std::logic_error("ordered partition invariant violated");  // unreachable
}

bool OrderedPartition::precequals(int i, int j) const {
  return block_index(i) <= block_index(j);
}

std::vector<std::uint64_t> OrderedPartition::prefix_unions() const {
  std::vector<std::uint64_t> out;
  out.reserve(blocks_.size());
  std::uint64_t acc = 0;
  for (std::uint64_t b : blocks_) {
    acc |= b;
    out.push_back(acc);
  }
  return out;
}

OrderedPartition OrderedPartition::merge_adjacent(int k) const {
  if (k < 1 || k >= block_count())
    throw std::out_of_range("merge position must satisfy 1 <= k < block count");
  std::vector<std::uint64_t> merged;
  merged.reserve(blocks_.size() - 1);
  for (int t = 0; t < block_count(); ++t) {
    if (t == k - 1) {
      merged.push_back(blocks_[t] | blocks_[t + 1]);
      ++t;
    } else {
      merged.push_back(blocks_[t]);
    }
  }
  return OrderedPartition(n_, std::move(merged));
}

bool OrderedPartition::is_singleton() const { return block_count() == n_; }

std::string OrderedPartition::to_string() const {
  std::ostringstream out;
  for (int k = 1; k <= block_count(); ++k) {
    if (k > 1) out << '/';
    for (int e : block_elements(k)) out << e;
  }
  return out.str();
}

std::vector<std::vector<int>> OrderedPartition::blocks_as_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (int k = 1; k <= block_count(); ++k) out.push_back(block_elements(k));
  return out;
}

SingletonPartition::SingletonPartition(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1 || n > limits::kGroundSetMaxN)
    throw std::invalid_argument("singleton partition: word length must be in [1, 63]");
  position_.assign(n, 0);
  for (int k = 1; k <= n; ++k) {
    const int e = word_[k - 1];
    if (e < 1 || e > n) throw std::invalid_argument("singleton partition: element out of range");
    if (position_[e - 1] != 0)
      throw std::invalid_argument("singleton partition: word must be a permutation");
    position_[e - 1] = k;
  }
}

SingletonPartition SingletonPartition::from_partition(const OrderedPartition& b) {
  if (!b.is_singleton())
    throw std::invalid_argument("not a singleton partition: " + b.to_string());
  std::vector<int> word;
  word.reserve(b.block_count());
  for (int k = 1; k <= b.block_count(); ++k) word.push_back(std::countr_zero(b.block_mask(k)) + 1);
  return SingletonPartition(std::move(word));
}

int SingletonPartition::element_at(int position) const {
  if (position < 1 || position > ground_set_size())
    throw std::out_of_range("position out of range");
  return word_[position - 1];
}

int SingletonPartition::position_of(int element) const {
  if (element < 1 || element > ground_set_size())
    throw std::out_of_range("element out of range");
  return position_[element - 1];
}

OrderedPartition SingletonPartition::to_partition() const {
  std::vector<std::uint64_t> masks;
  masks.reserve(word_.size());
  for (int e : word_) masks.push_back(1ull << (e - 1));
  return OrderedPartition(ground_set_size(), std::move(masks));
}

std::string SingletonPartition::to_string() const { return to_partition().to_string(); }

std::vector<OrderedPartition> lower_set_cube(const SingletonPartition& a) {
  const int n = a.ground_set_size();
  std::vector<OrderedPartition> cube;
  cube.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t merges = 0; merges < (1ull << (n - 1)); ++merges) {
    std::vector<std::uint64_t> blocks;
    std::uint64_t current = 1ull << (a.element_at(1) - 1);
    for (int t = 1; t < n; ++t) {
      const std::uint64_t next = 1ull << (a.element_at(t + 1) - 1);
      if (merges & (1ull << (t - 1))) {
        current |= next;
      } else {
        blocks.push_back(current);
        current = next;
      }
    }
    blocks.push_back(current);
    cube.emplace_back(n, std::move(blocks));
  }
  return cube;
}

}  // namespace opdet
