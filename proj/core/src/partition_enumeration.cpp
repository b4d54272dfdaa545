#include "opdet/partition_enumeration.hpp"

namespace opdet {

std::vector<OrderedPartition> all_ordered_partitions(int n, int max_n) {
  std::vector<OrderedPartition> out;
  enumerate_ordered_partitions(
      n, [&out](const OrderedPartition& b) { out.push_back(b); }, max_n);
  return out;
}

}  // namespace opdet
