#include "opdet/expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opdet/errors.hpp"
#include "opdet/forest.hpp"
#include "opdet/partition_enumeration.hpp"

namespace opdet {

Int term_for_partition(const ExactMatrix& a, const OrderedPartition& b) {
  if (a.size() != b.ground_set_size())
    throw std::invalid_argument("term_for_partition: matrix and partition dimension differ");
  Int prod = 1;
  std::uint64_t prefix = 0;
  for (int k = 1; k <= b.block_count(); ++k) {
    prefix |= b.block_mask(k);
    for (std::uint64_t cols = b.block_mask(k); cols != 0; cols &= cols - 1) {
      const int j = std::countr_zero(cols) + 1;
      Int column_sum = 0;
      for (std::uint64_t rows = prefix; rows != 0; rows &= rows - 1)
        column_sum += a.at(std::countr_zero(rows) + 1, j);
      if (column_sum == 0) return 0;
      prod *= column_sum;
    }
  }
  return prod;
}

Int det_terrible(const ExactMatrix& a, int max_n) {
  const int n = a.size();
  if (n > max_n)
    throw SizeError("det_terrible: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));
  Int total = 0;
  enumerate_ordered_partitions(
      n,
      [&](const OrderedPartition& b) {
        const Int term = term_for_partition(a, b);
        if (term == 0) return;
        if (((n - b.block_count()) & 1) == 0)
          total += term;
        else
          total -= term;
      },
      max_n);
  return total;
}

bool in_S_f(const OrderedPartition& b, const EndoFunction& f) {
  if (b.ground_set_size() != f.size())
    throw std::invalid_argument("in_S_f: partition and function dimension differ");
  for (int j = 1; j <= f.size(); ++j)
    if (!b.precequals(f(j), j)) return false;
  return true;
}

std::int64_t coefficient_direct(const EndoFunction& f, int max_n) {
  const int n = f.size();
  std::int64_t total = 0;
  enumerate_ordered_partitions(
      n,
      [&](const OrderedPartition& b) {
        if (!in_S_f(b, f)) return;
        total += ((n - b.block_count()) & 1) == 0 ? 1 : -1;
      },
      max_n);
  return total;
}

CoefficientTable::CoefficientTable(int n, std::map<EndoFunction, std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {}

std::int64_t CoefficientTable::at(const EndoFunction& f) const {
  const auto it = entries_.find(f);
  if (it == entries_.end()) throw std::out_of_range("coefficient table: unknown function");
  return it->second;
}

CoefficientTable coefficient_table(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("coefficient_table: n must be >= 1");
  if (n > max_n)
    throw SizeError("coefficient_table: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));

  // Start from all n^n functions so cancelled coefficients stay visible.
  std::map<EndoFunction, std::int64_t> table;
  std::vector<int> choice(n, 1);
  while (true) {
    table.emplace(EndoFunction(n, choice), 0);
    int pos = n - 1;
    while (pos >= 0 && choice[pos] == n) choice[pos--] = 1;
    if (pos < 0) break;
    ++choice[pos];
  }

  enumerate_ordered_partitions(
      n,
      [&](const OrderedPartition& b) {
        const std::int64_t sign = ((n - b.block_count()) & 1) == 0 ? 1 : -1;
        // Rows available to column j: the prefix union of j's block.
        const auto prefixes = b.prefix_unions();
        std::vector<std::vector<int>> rows_for_column(n);
        for (int j = 1; j <= n; ++j) {
          const std::uint64_t mask = prefixes[b.block_index(j) - 1];
          for (std::uint64_t m = mask; m != 0; m &= m - 1)
            rows_for_column[j - 1].push_back(std::countr_zero(m) + 1);
        }
        // Distribute the product of column sums: every way of picking one
        // row per column contributes sign to that function's coefficient.
        std::vector<std::size_t> idx(n, 0);
        std::vector<int> fn(n);
        while (true) {
          for (int j = 0; j < n; ++j) fn[j] = rows_for_column[j][idx[j]];
          table[EndoFunction(n, fn)] += sign;
          int pos = n - 1;
          while (pos >= 0 && idx[pos] + 1 == rows_for_column[pos].size()) idx[pos--] = 0;
          if (pos < 0) break;
          ++idx[pos];
        }
      },
      max_n);

  return CoefficientTable(n, std::move(table));
}

std::set<OrderedPartition> S_f_via_cubes(const EndoFunction& f, int max_n) {
  const int n = f.size();
  if (n > max_n)
    throw SizeError("S_f_via_cubes: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));
  const RuleSet rule_set = rules(f);  // rejects cyclic f

  std::set<OrderedPartition> result;
  std::vector<int> word(n);
  for (int i = 1; i <= n; ++i) word[i - 1] = i;
  do {
    // The word obeys the rules iff each element's ancestors all appear
    // before it.
    std::uint64_t seen = 0;
    bool consistent = true;
    for (int e : word) {
      if (rule_set.ancestors_of(e) & ~seen) {
        consistent = false;
        break;
      }
      seen |= 1ull << (e - 1);
    }
    if (!consistent) continue;
    for (auto& b : lower_set_cube(SingletonPartition(word))) result.insert(std::move(b));
  } while (std::next_permutation(word.begin(), word.end()));
  return result;
}

std::int64_t coefficient_via_flattening(const EndoFunction& f, int max_n) {
  const auto flat = flatten(f);
  const int domain_size = static_cast<int>(flat.representatives.size());
  const std::int64_t outer = ((f.size() - domain_size) & 1) == 0 ? 1 : -1;
  return outer * coefficient_direct(flat.function, max_n);
}

}  // namespace opdet
