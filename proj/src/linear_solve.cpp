#include "ggr/linear_solve.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ggr {

namespace {

struct SparseRow {
  std::map<std::size_t, Rational> entries; // column -> coefficient
  Rational rhs;
};

// row -= factor * pivot, dropping cancelled entries.
void eliminate(SparseRow &row, const SparseRow &pivot, const Rational &factor) {
  for (const auto &[col, v] : pivot.entries) {
    auto [it, inserted] = row.entries.try_emplace(col, -(factor * v));
    if (!inserted) {
      it->second -= factor * v;
      if (it->second.is_zero())
        row.entries.erase(it);
    }
  }
  row.rhs -= factor * pivot.rhs;
}

} // namespace

std::optional<std::vector<Rational>> solve_in_span(const std::vector<LaurentPoly> &columns,
                                                   const LaurentPoly &target) {
  std::map<Exponent, SparseRow> rows;
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto &[e, c] : columns[col].terms())
      rows[e].entries.emplace(col, c);
  for (const auto &[e, c] : target.terms())
    rows[e].rhs = c;

  // Echelon rows keyed by pivot column; each pivot row is normalized to a
  // leading coefficient of one and only has entries at columns >= its pivot.
  std::unordered_map<std::size_t, SparseRow> pivots;
  for (auto &[e, row] : rows) {
    SparseRow work = std::move(row);
    auto it = work.entries.begin();
    while (it != work.entries.end()) {
      auto found = pivots.find(it->first);
      if (found == pivots.end()) {
        ++it;
        continue;
      }
      std::size_t col = it->first;
      Rational factor = it->second;
      eliminate(work, found->second, factor);
      it = work.entries.upper_bound(col);
    }
    if (work.entries.empty()) {
      if (!work.rhs.is_zero())
        return std::nullopt;
      continue;
    }
    Rational lead = work.entries.begin()->second;
    for (auto &[col, v] : work.entries)
      v /= lead;
    work.rhs /= lead;
    std::size_t pivot_col = work.entries.begin()->first;
    pivots.emplace(pivot_col, std::move(work));
  }

  // Back substitution from the rightmost pivot; free columns stay zero.
  std::vector<Rational> x(columns.size(), Rational(0));
  std::vector<std::size_t> order;
  order.reserve(pivots.size());
  for (const auto &[col, _] : pivots)
    order.push_back(col);
  std::sort(order.rbegin(), order.rend());
  for (std::size_t col : order) {
    const SparseRow &row = pivots.at(col);
    Rational value = row.rhs;
    for (const auto &[c, v] : row.entries)
      if (c != col)
        value -= v * x[c];
    x[col] = value;
  }
  return x;
}

} // namespace ggr
