#pragma once

#include <cstdint>
#include <vector>

#include "opdet/endofunction.hpp"
#include "opdet/limits.hpp"
#include "opdet/ordered_partition.hpp"

namespace opdet {

// Lattice point attached to a singleton partition: x_i is the position of
// element i in the word, so the coordinates are a permutation of {1..n} and
// always sum to n(n+1)/2.
struct VertexPoint {
  std::vector<int> coordinates;  // coordinates[i-1] = x_i
  int coordinate(int i) const { return coordinates.at(static_cast<std::size_t>(i) - 1); }
};

VertexPoint vertex_coordinates(const SingletonPartition& a);

// x_i <= x_j for the vertex of `a`. Coincides with a.precequals(i, j):
// the half-space test and the block-order test pick out the same vertices.
bool satisfies_halfspace(const SingletonPartition& a, int i, int j);

// A set of faces of the n-permutahedron, each face identified with an
// ordered partition of {1..n}; a face's dimension is n - (block count),
// so vertices are the singleton partitions and the one-block partition is
// the full polytope.
class FaceSet {
 public:
  FaceSet(int n, std::vector<OrderedPartition> faces);  // sorts and dedups

  static FaceSet all(int n, int max_n = limits::kPartitionMaxN);

  int ground_set_size() const { return n_; }
  std::size_t size() const { return faces_.size(); }
  bool contains(const OrderedPartition& b) const;
  const std::vector<OrderedPartition>& faces() const { return faces_; }

 private:
  int n_;
  std::vector<OrderedPartition> faces_;  // sorted, unique
};

// Alternating face count: sum over the faces of (-1)^dim. The full face set
// of a permutahedron gives 1; a single cube's face set gives 0 for n >= 2.
std::int64_t euler_characteristic(const FaceSet& f);

// The faces whose ordered partitions carry the monomial of f (the in_S_f
// filter, so the combinatorial and geometric viewpoints cannot drift).
// Its Euler characteristic equals the coefficient of a_f. Acyclic f only.
FaceSet gamma_f(const EndoFunction& f, int max_n = limits::kPartitionMaxN);

}  // namespace opdet
