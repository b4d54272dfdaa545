#pragma once

#include <iosfwd>

#include "opdet/endofunction.hpp"
#include "opdet/expansion.hpp"
#include "opdet/limits.hpp"

namespace opdet {

// All writers emit byte-identical output for identical inputs: partitions
// appear in enumeration order, table rows in key order. Emitted JSON
// documents carry a top-level "schema": 1 field.

enum class PosetEdgeDirection {
  kTowardCoarser,  // edge B -> merge_adjacent(B, k)
  kTowardFiner,    // reversed
};

void write_partitions_text(std::ostream& out, int n, int max_n = limits::kPartitionMaxN);
void write_partitions_json(std::ostream& out, int n, int max_n = limits::kPartitionMaxN);

void write_poset_dot(std::ostream& out, int n,
                     PosetEdgeDirection direction = PosetEdgeDirection::kTowardCoarser,
                     int max_n = limits::kPartitionMaxN);
void write_poset_json(std::ostream& out, int n, int max_n = limits::kPartitionMaxN);

// Rooted-forest drawing of an acyclic function: edge q -> f(q) for every
// non-root, roots marked with a self-loop.
void write_forest_dot(std::ostream& out, const EndoFunction& f);

// Face-by-face membership report for gamma of f, plus its Euler
// characteristic. DOT draws member faces bold and the rest dashed.
void write_polytope_dot(std::ostream& out, const EndoFunction& f,
                        int max_n = limits::kPartitionMaxN);
void write_polytope_json(std::ostream& out, const EndoFunction& f,
                         int max_n = limits::kPartitionMaxN);

// One row per function: table, coefficient, bijectivity, |D_f|.
void write_coefficients_csv(std::ostream& out, const CoefficientTable& table);
void write_coefficients_json(std::ostream& out, const CoefficientTable& table);

}  // namespace opdet
