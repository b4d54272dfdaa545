#include "opdet/endofunction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "opdet/errors.hpp"
#include "opdet/limits.hpp"

namespace opdet {

EndoFunction::EndoFunction(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
  if (n < 1 || n > limits::kGroundSetMaxN)
    throw std::invalid_argument("endofunction: n must be in [1, 63]");
  if (table_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("endofunction: table must have n values");
  for (int v : table_)
    if (v < 1 || v > n) throw std::invalid_argument("endofunction: value out of range");
}

EndoFunction EndoFunction::identity(int n) {
  std::vector<int> table(n);
  for (int j = 1; j <= n; ++j) table[j - 1] = j;
  return EndoFunction(n, std::move(table));
}

EndoFunction EndoFunction::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  char colon = 0;
  if (!(in >> n >> colon) || colon != ':')
    throw ParseError("endofunction: expected \"n: v1 v2 ... vn\"");
  if (n < 1 || n > limits::kGroundSetMaxN) throw ParseError("endofunction: n out of range");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n));
  long long v = 0;
  while (in >> v) {
    if (v < 1 || v > n) throw ParseError("endofunction: value out of range");
    table.push_back(static_cast<int>(v));
  }
  if (!in.eof()) throw ParseError("endofunction: non-numeric token in table");
  if (table.size() != static_cast<std::size_t>(n))
    throw ParseError("endofunction: expected " + std::to_string(n) + " values, got " +
                     std::to_string(table.size()));
  return EndoFunction(static_cast<int>(n), std::move(table));
}

std::string EndoFunction::to_string() const {
  std::ostringstream out;
  out << n_ << ':';
  for (int v : table_) out << ' ' << v;
  return out.str();
}

int EndoFunction::operator()(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("endofunction argument out of range");
  return table_[j - 1];
}

CycleDecomposition cycles(const EndoFunction& f) {
  const int n = f.size();
  // 0 = unvisited, 1 = on the current walk, 2 = settled
  std::vector<int> state(n + 1, 0);
  std::vector<bool> on_cycle(n + 1, false);
  CycleDecomposition out;

  for (int start = 1; start <= n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int u = start;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = f(u);
    }
    if (state[u] == 1) {
      // Walked into our own path: the suffix from u is a new cycle.
      auto entry = std::find(path.begin(), path.end(), u);
      std::vector<int> cycle(entry, path.end());
      const auto min_it = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), min_it, cycle.end());
      for (int v : cycle) on_cycle[v] = true;
      out.cycles.push_back(std::move(cycle));
    }
    for (int v : path) state[v] = 2;
  }

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int v = 1; v <= n; ++v)
    if (!on_cycle[v]) out.non_cycle.push_back(v);
  return out;
}

bool is_acyclic(const EndoFunction& f) {
  const auto dec = cycles(f);
  return std::all_of(dec.cycles.begin(), dec.cycles.end(),
                     [](const auto& c) { return c.size() == 1; });
}

bool is_bijective(const EndoFunction& f) {
  std::vector<bool> hit(f.size() + 1, false);
  for (int v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FlattenResult flatten(const EndoFunction& f) {
  const int n = f.size();
  const auto dec = cycles(f);

  // cycle_rep[v] = the minimum of v's cycle, or 0 when v is on no cycle.
  std::vector<int> cycle_rep(n + 1, 0);
  for (const auto& cycle : dec.cycles)
    for (int v : cycle) cycle_rep[v] = cycle.front();

  std::vector<int> representatives;
  representatives.reserve(dec.cycles.size() + dec.non_cycle.size());
  for (const auto& cycle : dec.cycles) representatives.push_back(cycle.front());
  representatives.insert(representatives.end(), dec.non_cycle.begin(), dec.non_cycle.end());
  std::sort(representatives.begin(), representatives.end());

  std::vector<int> new_label(n + 1, 0);
  for (std::size_t k = 0; k < representatives.size(); ++k)
    new_label[representatives[k]] = static_cast<int>(k) + 1;

  std::vector<int> table(representatives.size());
  for (std::size_t k = 0; k < representatives.size(); ++k) {
    const int x = representatives[k];
    if (cycle_rep[x] != 0) {
      table[k] = static_cast<int>(k) + 1;  // collapsed cycle: a fixed point
    } else {
      const int y = f(x);
      table[k] = new_label[cycle_rep[y] != 0 ? cycle_rep[y] : y];
    }
  }
  return FlattenResult{EndoFunction(static_cast<int>(representatives.size()), std::move(table)),
                       std::move(representatives)};
}

int sign(const EndoFunction& f) {
  if (!is_bijective(f)) throw std::domain_error("sign: function is not a bijection");
  const int r = static_cast<int>(cycles(f).cycles.size());
  return ((f.size() - r) & 1) == 0 ? 1 : -1;
}

}  // namespace opdet
