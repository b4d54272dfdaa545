#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "opdet/bigint.hpp"

namespace opdet {

// Square matrix of exact integers.
//
// Index convention: entry (i, j) is a_ij with i the ROW and j the COLUMN,
// both 1-based. The first index always selects the row; all file formats
// and every algorithm in this library follow that orientation.
class ExactMatrix {
 public:
  // Zero matrix of dimension n (n >= 1).
  explicit ExactMatrix(int n);

  // Row-major entries, exactly n*n of them.
  ExactMatrix(int n, std::vector<Int> entries);

  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int size() const { return n_; }

  const Int& at(int row, int col) const;
  Int& at(int row, int col);

  void swap_rows(int a, int b);

  bool operator==(const ExactMatrix&) const = default;

 private:
  int n_;
  std::vector<Int> entries_;  // row-major
};

// Canonical text format: first line n, then n lines of n whitespace-separated
// decimal integers. Rejects dimension mismatches and trailing garbage.
ExactMatrix read_matrix_text(std::istream& in);

// JSON format: {"n": <int>, "entries": [[...], ...]}. Entries may be numbers
// or decimal strings (use strings for magnitudes beyond 2^53).
ExactMatrix read_matrix_json(std::istream& in);

// Dispatches on the first non-space byte: '{' selects JSON, anything else
// the text format.
ExactMatrix read_matrix(std::istream& in);
ExactMatrix read_matrix_file(const std::string& path);

std::string to_text(const ExactMatrix& a);

}  // namespace opdet
