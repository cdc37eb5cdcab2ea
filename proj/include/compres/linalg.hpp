#pragma once

// Exact sparse linear algebra over Q.
//
// Everything is built from one primitive, an incrementally grown row-echelon
// basis of a subspace.  Optionally every stored row remembers which inserted
// generators it is a combination of, which yields kernels and coordinates
// with respect to a chosen spanning set.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "compres/laurent.hpp"

namespace compres::linalg {

// Sparse vector: column index -> nonzero rational.
using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a x
SparseVector scaled(const SparseVector& x, const Rational& a);

// Column-sparse matrix: cols[j] is the image of the j-th source basis vector.
struct SparseMatrix {
  int rows = 0;
  std::vector<SparseVector> cols;

  int num_cols() const { return static_cast<int>(cols.size()); }
  SparseVector apply(const SparseVector& x) const;
};

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);  // a after b
SparseMatrix identity_matrix(int n);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);
bool operator==(const SparseMatrix& a, const SparseMatrix& b);

class Echelon {
public:
  explicit Echelon(int dim, bool track = false) : dim_(dim), track_(track) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  struct Reduction {
    SparseVector residual;
    // v - residual = sum combination[k] * generator_k (tracking only).
    SparseVector combination;
  };
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

  // Inserts v as generator number `tag` (tracking uses e_tag, or nothing when
  // tag is nullopt).  Returns true when v enlarged the span; otherwise, with
  // tracking on, `dependency` receives e_tag - combination, a relation among
  // the generators.
  bool insert(const SparseVector& v, std::optional<int> tag = std::nullopt,
              SparseVector* dependency = nullptr);

private:
  struct Row {
    SparseVector v;  // leading entry 1 at `pivot`
    SparseVector combo;
  };
  int dim_;
  bool track_;
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivot_row_;
};

int rank(const SparseMatrix& m);
std::vector<SparseVector> kernel(const SparseMatrix& m);

// Homology of  X --in--> Y --out--> Z  at Y.
class Homology {
public:
  Homology(const SparseMatrix& in, const SparseMatrix& out);

  int dim() const { return static_cast<int>(reps_.size()); }
  int dim_cycles() const { return dim_cycles_; }
  int dim_boundaries() const { return dim_boundaries_; }
  const std::vector<SparseVector>& representatives() const { return reps_; }

  // Coordinates of the class of a cycle; throws if `cycle` is not a cycle.
  std::vector<Rational> coordinates(const SparseVector& cycle) const;

private:
  SparseMatrix out_;
  int dim_cycles_ = 0;
  int dim_boundaries_ = 0;
  std::vector<SparseVector> reps_;
  Echelon quotient_;
};

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  Rational& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  bool is_zero() const;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
int rank(const DenseMatrix& m);

// Matrix of the map induced on homology by a chain map f: Y -> Y'.
// Rows index target classes, columns source classes.
DenseMatrix induced_map(const Homology& source, const Homology& target, const SparseMatrix& f);

}  // namespace compres::linalg
