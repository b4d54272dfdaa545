#include "opdet/exports.hpp"

#include <ostream>

#include "json.hpp"
#include "opdet/forest.hpp"
#include "opdet/partition_enumeration.hpp"
#include "opdet/permutahedron.hpp"

namespace opdet {

namespace {

using nlohmann::json;

json partition_object(const OrderedPartition& b) {
  return json{{"blocks", b.blocks_as_lists()}, {"parts", b.block_count()}};
}

void dump(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

void write_partitions_text(std::ostream& out, int n, int max_n) {
  enumerate_ordered_partitions(
      n, [&out](const OrderedPartition& b) { out << b.to_string() << '\n'; }, max_n);
}

void write_partitions_json(std::ostream& out, int n, int max_n) {
  json partitions = json::array();
  enumerate_ordered_partitions(
      n, [&partitions](const OrderedPartition& b) { partitions.push_back(partition_object(b)); },
      max_n);
  dump(out, json{{"schema", 1}, {"n", n}, {"partitions", std::move(partitions)}});
}

void write_poset_dot(std::ostream& out, int n, PosetEdgeDirection direction, int max_n) {
  const auto partitions = all_ordered_partitions(n, max_n);
  out << "digraph poset {\n";
  out << "  node [shape=box];\n";
  for (const auto& b : partitions) out << "  \"" << b.to_string() << "\";\n";
  for (const auto& b : partitions) {
    for (int k = 1; k < b.block_count(); ++k) {
      const std::string coarser = b.merge_adjacent(k).to_string();
      if (direction == PosetEdgeDirection::kTowardCoarser)
        out << "  \"" << b.to_string() << "\" -> \"" << coarser << "\";\n";
      else
        out << "  \"" << coarser << "\" -> \"" << b.to_string() << "\";\n";
    }
  }
  out << "}\n";
}

void write_poset_json(std::ostream& out, int n, int max_n) {
  const auto partitions = all_ordered_partitions(n, max_n);
  json nodes = json::array();
  json edges = json::array();
  for (const auto& b : partitions) {
    json node = partition_object(b);
    node["label"] = b.to_string();
    nodes.push_back(std::move(node));
    for (int k = 1; k < b.block_count(); ++k)
      edges.push_back(json{{"from", b.to_string()}, {"to", b.merge_adjacent(k).to_string()}});
  }
  dump(out, json{{"schema", 1},
                 {"n", n},
                 {"direction", "toward_coarser"},
                 {"nodes", std::move(nodes)},
                 {"edges", std::move(edges)}});
}

void write_forest_dot(std::ostream& out, const EndoFunction& f) {
  const RootedForest trees = forest(f);
  out << "digraph forest {\n";
  for (int q = 1; q <= trees.n; ++q) out << "  " << q << ";\n";
  for (int q = 1; q <= trees.n; ++q) {
    if (trees.is_root(q))
      out << "  " << q << " -> " << q << ";\n";  // root marker, as a self-loop
    else
      out << "  " << q << " -> " << trees.parent[q - 1] << ";\n";
  }
  out << "}\n";
}

void write_polytope_dot(std::ostream& out, const EndoFunction& f, int max_n) {
  const FaceSet gamma = gamma_f(f, max_n);
  const auto partitions = all_ordered_partitions(f.size(), max_n);
  out << "digraph polytope {\n";
  out << "  label=\"chi = " << euler_characteristic(gamma) << "\";\n";
  out << "  node [shape=box];\n";
  for (const auto& b : partitions) {
    const char* style = gamma.contains(b) ? "bold" : "dashed";
    out << "  \"" << b.to_string() << "\" [style=" << style << "];\n";
  }
  for (const auto& b : partitions)
    for (int k = 1; k < b.block_count(); ++k)
      out << "  \"" << b.to_string() << "\" -> \"" << b.merge_adjacent(k).to_string() << "\";\n";
  out << "}\n";
}

void write_polytope_json(std::ostream& out, const EndoFunction& f, int max_n) {
  const FaceSet gamma = gamma_f(f, max_n);
  json faces = json::array();
  enumerate_ordered_partitions(
      f.size(),
      [&](const OrderedPartition& b) {
        json face = partition_object(b);
        face["in_gamma"] = gamma.contains(b);
        faces.push_back(std::move(face));
      },
      max_n);
  dump(out, json{{"schema", 1},
                 {"n", f.size()},
                 {"function", f.table()},
                 {"chi", euler_characteristic(gamma)},
                 {"faces", std::move(faces)}});
}

namespace {

struct CoefficientRow {
  std::string function_word;
  std::int64_t coefficient;
  bool bijective;
  int domain_size;
};

CoefficientRow coefficient_row(const EndoFunction& f, std::int64_t c) {
  std::string word;
  for (int v : f.table()) {
    if (!word.empty()) word += ' ';
    word += std::to_string(v);
  }
  return CoefficientRow{std::move(word), c, is_bijective(f), cycles(f).domain_size()};
}

}  // namespace

void write_coefficients_csv(std::ostream& out, const CoefficientTable& table) {
  out << "function,coefficient,bijective,domain_size\n";
  for (const auto& [f, c] : table.entries()) {
    const auto row = coefficient_row(f, c);
    out << row.function_word << ',' << row.coefficient << ','
        << (row.bijective ? "true" : "false") << ',' << row.domain_size << '\n';
  }
}

void write_coefficients_json(std::ostream& out, const CoefficientTable& table) {
  json rows = json::array();
  for (const auto& [f, c] : table.entries()) {
    const auto row = coefficient_row(f, c);
    rows.push_back(json{{"function", f.table()},
                        {"coefficient", row.coefficient},
                        {"bijective", row.bijective},
                        {"domain_size", row.domain_size}});
  }
  dump(out, json{{"schema", 1}, {"n", table.ground_set_size()}, {"coefficients", std::move(rows)}});
}

}  // namespace opdet
