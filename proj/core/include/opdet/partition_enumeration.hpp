#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opdet/errors.hpp"
#include "opdet/limits.hpp"
#include "opdet/ordered_partition.hpp"

namespace opdet {

namespace detail {

// Enumerates the block-assignment words of all ordered partitions of {1..n}
// in lexicographic order. A word (b_1,...,b_n) with b_i the block index of
// element i is valid iff its value set is exactly {1..max(b)}; the search
// prunes a prefix as soon as the labels still missing below the running
// maximum cannot fit into the remaining positions.
template <typename Visitor>
void enumerate_words(int n, int pos, int max_label, int missing, std::uint64_t used,
                     std::vector<int>& word, Visitor& visit) {
  if (pos == n) {
    visit(OrderedPartition::from_assignment(word));
    return;
  }
  const int remaining_after = n - pos - 1;
  for (int v = 1; v <= n; ++v) {
    int new_missing;
    if (v > max_label) {
      new_missing = missing + (v - max_label - 1);
    } else if (used & (1ull << (v - 1))) {
      new_missing = missing;
    } else {
      new_missing = missing - 1;
    }
    if (new_missing > remaining_after) continue;
    word[pos] = v;
    enumerate_words(n, pos + 1, std::max(max_label, v), new_missing, used | (1ull << (v - 1)),
                    word, visit);
  }
}

}  // namespace detail

// Calls `visit` once per ordered partition of {1..n}, in a deterministic
// order: lexicographic by block-assignment word (see detail::enumerate_words).
// For n = 3 the stream is 123, 12/3, 13/2, 1/23, 1/2/3, 1/3/2, 23/1, 2/13,
// 2/1/3, 3/12, 3/1/2, 2/3/1, 3/2/1. Throws SizeError above max_n.
template <typename Visitor>
void enumerate_ordered_partitions(int n, Visitor&& visit, int max_n = limits::kPartitionMaxN) {
  if (n < 1) throw std::invalid_argument("enumerate_ordered_partitions: n must be >= 1");
  if (n > max_n || n > limits::kGroundSetMaxN)
    throw SizeError("enumerate_ordered_partitions: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(std::min(max_n, limits::kGroundSetMaxN)));
  std::vector<int> word(n);
  detail::enumerate_words(n, 0, 0, 0, 0, word, visit);
}

std::vector<OrderedPartition> all_ordered_partitions(int n, int max_n = limits::kPartitionMaxN);

}  // namespace opdet
