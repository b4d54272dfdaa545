#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "opdet/limits.hpp"

namespace opdet {

// Ordered partition of {1..n}: a sequence of disjoint nonempty blocks whose
// union is the whole ground set. Block order matters: 1/23 differs from 23/1.
//
// Each block is stored as a 64-bit element mask (element e <-> bit e-1),
// which caps the ground set at 63. Display uses the slash notation with the
// elements of a block sorted and concatenated, e.g. "13/2/4".
class OrderedPartition {
 public:
  OrderedPartition(int n, std::vector<std::uint64_t> blocks);

  static OrderedPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static OrderedPartition single_block(int n);

  // Builds the partition whose block-assignment word is `word`, i.e.
  // word[i-1] is the 1-based index of the block containing element i.
  // The word's value set must be {1..max(word)}.
  static OrderedPartition from_assignment(const std::vector<int>& word);

  int ground_set_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // 1-based block position k.
  std::uint64_t block_mask(int k) const;
  std::vector<int> block_elements(int k) const;

  // beta(i): the 1-based position of the block containing element i.
  int block_index(int element) const;

  // True iff block_index(i) <= block_index(j): i sits in an earlier block
  // than j or shares j's block.
  bool precequals(int i, int j) const;

  // Running unions of the first k blocks, k = 1..r. The last mask covers
  // the whole ground set.
  std::vector<std::uint64_t> prefix_unions() const;

  // Replaces blocks k and k+1 by their union (1 <= k < r): one covering
  // step downward in the refinement order.
  OrderedPartition merge_adjacent(int k) const;

  bool is_singleton() const;

  std::string to_string() const;
  std::vector<std::vector<int>> blocks_as_lists() const;

  auto operator<=>(const OrderedPartition&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> blocks_;
};

// Ordered partition with every block a singleton; equivalently a permutation
// word w_1 ... w_n where w_k is the sole element of block k.
class SingletonPartition {
 public:
  explicit SingletonPartition(std::vector<int> word);
  static SingletonPartition from_partition(const OrderedPartition& b);

  int ground_set_size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // Element sitting at 1-based position k.
  int element_at(int position) const;
  // Position (= block index) of an element.
  int position_of(int element) const;

  OrderedPartition to_partition() const;
  std::string to_string() const;

  auto operator<=>(const SingletonPartition&) const = default;

 private:
  std::vector<int> word_;
  std::vector<int> position_;  // position_[e-1] = index of e in word_, 1-based
};

// All ordered partitions obtainable from `a` by merging any subset of its
// n-1 adjacent-pair boundaries, i.e. all order-preserving coarsenings of a
// singleton partition. Exactly 2^(n-1) partitions, `a` itself and the
// one-block partition included. Order: by boundary subset, ascending as a
// bitmask (bit t-1 = merge the boundary between positions t and t+1).
std::vector<OrderedPartition> lower_set_cube(const SingletonPartition& a);

}  // namespace opdet
