#include "opdet/exact_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "opdet/errors.hpp"
#include "opdet/limits.hpp"

namespace opdet {

ExactMatrix::ExactMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  entries_.resize(static_cast<std::size_t>(n) * n);
}

ExactMatrix::ExactMatrix(int n, std::vector<Int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix needs exactly n*n entries");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) a.at(i, i) = 1;
  return a;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  std::vector<Int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("matrix rows must all have length n");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ExactMatrix(n, std::move(flat));
}

const Int& ExactMatrix::at(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
}

Int& ExactMatrix::at(int row, int col) {
  if (row < 1 || row > n_ || col < 1 || col > n_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
}

void ExactMatrix::swap_rows(int a, int b) {
  if (a < 1 || a > n_ || b < 1 || b > n_) throw std::out_of_range("row index out of range");
  for (int j = 1; j <= n_; ++j) std::swap(at(a, j), at(b, j));
}

namespace {

Int parse_int_token(const std::string& token) {
  try {
    return Int(token);
  } catch (const std::exception&) {
    throw ParseError("not a decimal integer: '" + token + "'");
  }
}

}  // namespace

ExactMatrix read_matrix_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("matrix text: missing dimension line");
  if (n < 1) throw ParseError("matrix text: dimension must be >= 1");
  if (n > 4096) throw ParseError("matrix text: implausible dimension");

  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  std::string token;
  for (long long k = 0; k < n * n; ++k) {
    if (!(in >> token))
      throw ParseError("matrix text: expected " + std::to_string(n * n) + " entries, got " +
                       std::to_string(k));
    entries.push_back(parse_int_token(token));
  }
  if (in >> token) throw ParseError("matrix text: trailing data after last entry");
  return ExactMatrix(static_cast<int>(n), std::move(entries));
}

ExactMatrix read_matrix_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw ParseError("matrix json: need object with fields 'n' and 'entries'");
  if (!doc["n"].is_number_integer()) throw ParseError("matrix json: 'n' must be an integer");
  const long long n = doc["n"].get<long long>();
  if (n < 1) throw ParseError("matrix json: 'n' must be >= 1");

  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw ParseError("matrix json: 'entries' must be an array of n rows");

  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("matrix json: each row must hold exactly n values");
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        entries.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        entries.push_back(parse_int_token(v.get<std::string>()));
      } else {
        throw ParseError("matrix json: entries must be integers or decimal strings");
      }
    }
  }
  return ExactMatrix(static_cast<int>(n), std::move(entries));
}

ExactMatrix read_matrix(std::istream& in) {
  int c = in.peek();
  while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return read_matrix_json(in);
  return read_matrix_text(in);
}

ExactMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return read_matrix(in);
}

std::string to_text(const ExactMatrix& a) {
  std::ostringstream out;
  out << a.size() << '\n';
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) {
      if (j > 1) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace opdet
