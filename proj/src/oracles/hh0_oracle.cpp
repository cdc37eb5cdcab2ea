#include "compres/oracles/hh0_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace compres::oracles {

namespace {

bool canonical(const WeylWord& w) {
  if (w.length() <= 1) return true;
  return w.length() % 2 == 0 && *w.first() == Letter::S;
}

std::size_t support_size(const std::vector<LaurentQ>& row) {
  return static_cast<std::size_t>(
      std::count_if(row.begin(), row.end(), [](const LaurentQ& c) { return !c.is_zero(); }));
}

// row <- p * row - row[c] * pivot, or the division-free unit version.
// Returns the factor row was multiplied by.
LaurentQ eliminate(std::vector<LaurentQ>& row, const std::vector<LaurentQ>& pivot, int c) {
  const LaurentQ& p = pivot[c];
  if (row[c].is_zero()) return LaurentQ(1);
  if (p.is_unit()) {
    const LaurentQ factor = divide_exact(row[c], p);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!pivot[j].is_zero()) row[j] -= factor * pivot[j];
    return LaurentQ(1);
  }
  const LaurentQ a = row[c];
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = p * row[j] - a * pivot[j];
  return p;
}

}  // namespace

HH0Oracle::HH0Oracle(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("oracle cutoff must be nonnegative");
  const int top = cutoff + 2;
  columns_.push_back(WeylWord::identity());
  for (int len = 1; len <= top; ++len) {
    columns_.emplace_back(Letter::S, len);
    columns_.emplace_back(Letter::T, len);
  }

  std::vector<Row> rows;
  for (const WeylWord& x : columns_)
    for (const WeylWord& y : columns_) {
      if (x.length() + y.length() > top || !(x < y)) continue;
      HeckeElement bx = HeckeElement::basis(x);
      HeckeElement by = HeckeElement::basis(y);
      HeckeElement c = t_mul(bx, by) - t_mul(by, bx);
      if (c.is_zero()) continue;
      rows.push_back(to_row(c));
      ++commutators_;
    }

  std::vector<int> order;
  for (int j = 0; j < static_cast<int>(columns_.size()); ++j)
    if (!canonical(columns_[j])) order.push_back(j);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return columns_[a].length() > columns_[b].length();
  });

  for (int c : order) {
    auto best = rows.end();
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if ((*it)[c].is_zero()) continue;
      if (best == rows.end()) {
        best = it;
        continue;
      }
      const bool unit = (*it)[c].is_unit();
      const bool best_unit = (*best)[c].is_unit();
      if (unit != best_unit ? unit : support_size(*it) < support_size(*best)) best = it;
    }
    if (best == rows.end()) continue;
    Pivot pivot{c, std::move(*best)};
    rows.erase(best);
    for (Row& r : rows) eliminate(r, pivot.row, c);
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Row& r) { return support_size(r) == 0; }),
               rows.end());
    pivots_.push_back(std::move(pivot));
  }
}

int HH0Oracle::column_of(const WeylWord& w) const {
  if (w.length() > cutoff_ + 2) throw std::out_of_range("word longer than the oracle truncation");
  if (w.is_identity()) return 0;
  return 2 * w.length() - 1 + (*w.first() == Letter::T ? 1 : 0);
}

HH0Oracle::Row HH0Oracle::to_row(const HeckeElement& a) const {
  Row row(columns_.size());
  for (const auto& [w, c] : a.terms()) row[column_of(w)] += c;
  return row;
}

ScaledClass HH0Oracle::classify(const HeckeElement& a) const {
  Row row = to_row(a);
  LaurentQ scale(1);
  for (const Pivot& p : pivots_) scale *= eliminate(row, p.row, p.column);

  HH0Class out;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (row[j].is_zero()) continue;
    const WeylWord& w = columns_[j];
    if (!canonical(w))
      throw std::runtime_error("column " + w.str() + " survived commutator elimination");
    if (w.is_identity())
      out.add_e(0, row[j]);
    else if (w.length() == 1)
      *w.first() == Letter::S ? out.add_s(row[j]) : out.add_t(row[j]);
    else
      out.add_e(w.length() / 2, row[j]);
  }
  return {scale, out};
}

bool HH0Oracle::agrees(const ScaledClass& oracle, const HH0Class& candidate) {
  return hh0_scale(oracle.scale, candidate) == oracle.scaled;
}

}  // namespace compres::oracles
