#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "opdet/bigint.hpp"
#include "opdet/endofunction.hpp"
#include "opdet/exact_matrix.hpp"
#include "opdet/limits.hpp"
#include "opdet/ordered_partition.hpp"

namespace opdet {

// The summand of the ordered-partition determinant expansion contributed by
// one ordered partition B = (b_1,...,b_r):
//
//   prod over blocks b_k, prod over columns j in b_k,
//   of sum over rows i in the prefix union b_1 u ... u b_k, of a_{i,j}.
//
// Column indices run through the block, row indices through the prefix
// union. Throws std::invalid_argument on a dimension mismatch.
Int term_for_partition(const ExactMatrix& a, const OrderedPartition& b);

// det(A) as the signed sum of term_for_partition over all ordered
// partitions B of {1..n}, weighted by (-1)^(n-|B|). Streams the partitions;
// nothing is materialized. Agrees exactly with the classical algorithms.
Int det_terrible(const ExactMatrix& a, int max_n = limits::kPartitionMaxN);

// True iff the monomial a_f = prod_j a_{f(j),j} appears in the product for
// B, i.e. f(j) precedes-or-shares-a-block-with j for every column j.
bool in_S_f(const OrderedPartition& b, const EndoFunction& f);

// Coefficient of a_f, computed by filtering: sum of (-1)^(n-|B|) over all
// ordered partitions whose product contains a_f.
std::int64_t coefficient_direct(const EndoFunction& f, int max_n = limits::kPartitionMaxN);

// Coefficient of every one of the n^n monomials, found by symbolically
// distributing each partition's product of column sums. Functions whose
// coefficient cancels to zero are kept.
class CoefficientTable {
 public:
  CoefficientTable(int n, std::map<EndoFunction, std::int64_t> entries);

  int ground_set_size() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t at(const EndoFunction& f) const;
  const std::map<EndoFunction, std::int64_t>& entries() const { return entries_; }

 private:
  int n_;
  std::map<EndoFunction, std::int64_t> entries_;
};

CoefficientTable coefficient_table(int n, int max_n = limits::kCoefficientTableMaxN);

// S_f assembled from cube geometry instead of the membership filter: the
// union of lower_set_cube(A) over all singleton partitions A consistent
// with the rules of the (acyclic) function f. A is consistent when every
// rule p <= q puts p before q in A's word.
std::set<OrderedPartition> S_f_via_cubes(const EndoFunction& f,
                                         int max_n = limits::kPartitionMaxN);

// Coefficient through the cycle-collapsing reduction:
// (-1)^(n - |D_f|) times the coefficient of the flattened function.
std::int64_t coefficient_via_flattening(const EndoFunction& f,
                                        int max_n = limits::kPartitionMaxN);

}  // namespace opdet
