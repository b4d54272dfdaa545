#include "opdet/permutahedron.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "opdet/expansion.hpp"
#include "opdet/partition_enumeration.hpp"

namespace opdet {

VertexPoint vertex_coordinates(const SingletonPartition& a) {
  const int n = a.ground_set_size();
  VertexPoint p;
  p.coordinates.resize(n);
  for (int i = 1; i <= n; ++i) p.coordinates[i - 1] = a.position_of(i);
  return p;
}

bool satisfies_halfspace(const SingletonPartition& a, int i, int j) {
  return a.position_of(i) <= a.position_of(j);
}

FaceSet::FaceSet(int n, std::vector<OrderedPartition> faces) : n_(n), faces_(std::move(faces)) {
  for (const auto& b : faces_)
    if (b.ground_set_size() != n_)
      throw std::invalid_argument("face set: all faces must share the same ground set");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

FaceSet FaceSet::all(int n, int max_n) {
  std::vector<OrderedPartition> faces;
  enumerate_ordered_partitions(
      n, [&faces](const OrderedPartition& b) { faces.push_back(b); }, max_n);
  return FaceSet(n, std::move(faces));
}

bool FaceSet::contains(const OrderedPartition& b) const {
  return std::binary_search(faces_.begin(), faces_.end(), b);
}

std::int64_t euler_characteristic(const FaceSet& f) {
  std::int64_t chi = 0;
  const int n = f.ground_set_size();
  for (const auto& b : f.faces()) chi += ((n - b.block_count()) & 1) == 0 ? 1 : -1;
  return chi;
}

FaceSet gamma_f(const EndoFunction& f, int max_n) {
  if (!is_acyclic(f)) throw std::domain_error("gamma_f: function has a cycle");
  std::vector<OrderedPartition> faces;
  enumerate_ordered_partitions(
      f.size(),
      [&](const OrderedPartition& b) {
        if (in_S_f(b, f)) faces.push_back(b);
      },
      max_n);
  return FaceSet(f.size(), std::move(faces));
}

}  // namespace opdet
