#include "compres/linalg.hpp"

#include <algorithm>

#include <stdexcept>

namespace compres::linalg {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  auto hint = y.begin();
  for (const auto& [i, xi] : x) {
    hint = y.lower_bound(i);
    if (hint != y.end() && hint->first == i) {
      hint->second += a * xi;
      if (hint->second == 0) hint = y.erase(hint);
    } else {
      hint = y.emplace_hint(hint, i, a * xi);
    }
  }
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  SparseVector out;
  if (a == 0) return out;
  for (const auto& [i, v] : x) out.emplace_hint(out.end(), i, v * a);
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [j, v] : x) {
    if (j < 0 || j >= num_cols()) throw std::out_of_range("vector index outside matrix domain");
    axpy(out, v, cols[j]);
  }
  return out;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.num_cols() != b.rows) throw std::invalid_argument("matrix shapes do not compose");
  SparseMatrix out{a.rows, {}};
  out.cols.reserve(b.cols.size());
  for (const auto& col : b.cols) out.cols.push_back(a.apply(col));
  return out;
}

SparseMatrix identity_matrix(int n) {
  SparseMatrix out{n, std::vector<SparseVector>(n)};
  for (int i = 0; i < n; ++i) out.cols[i].emplace(i, 1);
  return out;
}

namespace {
SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  if (a.rows != b.rows || a.num_cols() != b.num_cols())
    throw std::invalid_argument("matrix shapes differ");
  SparseMatrix out = a;
  for (int j = 0; j < a.num_cols(); ++j) axpy(out.cols[j], sign, b.cols[j]);
  return out;
}
}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, -1); }

bool is_zero(const SparseMatrix& m) {
  for (const auto& c : m.cols)
    if (!c.empty()) return false;
  return true;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols;
}

Echelon::Reduction Echelon::reduce(const SparseVector& v) const {
  Reduction red{v, {}};
  SparseVector& r = red.residual;
  auto it = r.begin();
  while (it != r.end()) {
    auto pr = pivot_row_.find(it->first);
    if (pr == pivot_row_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational a = it->second;
    const Row& row = rows_[pr->second];
    axpy(r, -a, row.v);
    if (track_) axpy(red.combination, a, row.combo);
    it = r.upper_bound(col);
  }
  return red;
}

bool Echelon::insert(const SparseVector& v, std::optional<int> tag, SparseVector* dependency) {
  Reduction red = reduce(v);
  SparseVector combo;
  if (track_) {
    combo = scaled(red.combination, -1);
    if (tag) axpy(combo, 1, SparseVector{{*tag, Rational(1)}});
  }
  if (red.residual.empty()) {
    if (dependency) *dependency = std::move(combo);
    return false;
  }
  const int pivot = red.residual.begin()->first;
  const Rational inv = 1 / Rational(red.residual.begin()->second);
  Row row{scaled(red.residual, inv), track_ ? scaled(combo, inv) : SparseVector{}};
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

int rank(const SparseMatrix& m) {
  // Eliminate along the shorter side, sparsest vectors first.
  std::vector<SparseVector> vectors;
  int dim = m.rows;
  if (m.rows < m.num_cols()) {
    vectors.resize(m.rows);
    for (int j = 0; j < m.num_cols(); ++j)
      for (const auto& [i, x] : m.cols[j]) vectors[i].emplace_hint(vectors[i].end(), j, x);
    dim = m.num_cols();
  } else {
    vectors = m.cols;
  }
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
  const int bound = std::min(m.rows, m.num_cols());
  Echelon e(dim);
  for (const auto& v : vectors) {
    if (e.rank() == bound) break;
    e.insert(v);
  }
  return e.rank();
}

std::vector<SparseVector> kernel(const SparseMatrix& m) {
  Echelon e(m.rows, true);
  std::vector<SparseVector> out;
  for (int j = 0; j < m.num_cols(); ++j) {
    SparseVector dep;
    if (!e.insert(m.cols[j], j, &dep)) out.push_back(std::move(dep));
  }
  return out;
}

Homology::Homology(const SparseMatrix& in, const SparseMatrix& out)
    : out_(out), quotient_(out.num_cols(), true) {
  if (in.rows != out.num_cols()) throw std::invalid_argument("homology: shapes do not match");
  for (const auto& c : in.cols) quotient_.insert(c);
  dim_boundaries_ = quotient_.rank();
  auto cycles = kernel(out);
  dim_cycles_ = static_cast<int>(cycles.size());
  for (auto& z : cycles) {
    if (quotient_.insert(z, static_cast<int>(reps_.size()))) reps_.push_back(std::move(z));
  }
}

std::vector<Rational> Homology::coordinates(const SparseVector& cycle) const {
  if (!out_.apply(cycle).empty()) throw std::invalid_argument("vector is not a cycle");
  auto red = quotient_.reduce(cycle);
  if (!red.residual.empty()) throw std::logic_error("cycle outside cycles + boundaries span");
  std::vector<Rational> coords(reps_.size());
  for (const auto& [k, v] : red.combination) coords.at(k) = v;
  return coords;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : data)
    if (v != 0) return false;
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("dense shapes do not compose");
  DenseMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("dense shapes differ");
  DenseMatrix out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

int rank(const DenseMatrix& m) {
  SparseMatrix s{m.rows, std::vector<SparseVector>(m.cols)};
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) s.cols[j].emplace(i, m.at(i, j));
  return rank(s);
}

DenseMatrix induced_map(const Homology& source, const Homology& target, const SparseMatrix& f) {
  DenseMatrix out(target.dim(), source.dim());
  for (int j = 0; j < source.dim(); ++j) {
    auto coords = target.coordinates(f.apply(source.representatives()[j]));
    for (int i = 0; i < target.dim(); ++i) out.at(i, j) = coords[i];
  }
  return out;
}

}  // namespace compres::linalg
