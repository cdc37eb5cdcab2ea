#pragma once

// Hochschild and cyclic homology of finite-dimensional unital algebras given
// by structure constants.
//
// Two chain models are used.  ChainMatrixStack holds the full precyclic
// module C_p = A^{(x)(p+1)} with its face maps, cyclic operator and the
// derived b, B; it is where the simplicial identities are checked.  Homology
// is computed on the normalized mixed complex (C-bar, b, B), whose total
// complex computes HC and whose b-homology is HH.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "compres/laurent.hpp"
#include "compres/linalg.hpp"

namespace compres::engine {

using Coeffs = std::vector<Rational>;

struct AlgebraSpec {
  std::string name;
  int dim = 0;
  // products[i * dim + j] is the coefficient vector of e_i e_j.
  std::vector<Coeffs> products;
  std::optional<Coeffs> unit;
  // Set for group algebras of Z/m (basis element k is g^k).
  std::optional<int> group_order;

  const Coeffs& product(int i, int j) const { return products[i * dim + j]; }
  Coeffs multiply(const Coeffs& x, const Coeffs& y) const;
};

class AlgebraError : public std::runtime_error {
public:
  enum class Kind { NotAssociative, NoUnit, Malformed };
  AlgebraError(Kind kind, const std::string& what, std::array<int, 3> witness = {-1, -1, -1})
      : std::runtime_error(what), kind_(kind), witness_(witness) {}
  Kind kind() const { return kind_; }
  // (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), for NotAssociative.
  std::array<int, 3> witness() const { return witness_; }

private:
  Kind kind_;
  std::array<int, 3> witness_;
};

class TooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

// Largest allowed dim^(N+1).
inline constexpr long long kMaxChainBasis = 100'000;

// Validates shape, associativity on all basis triples and two-sided unit.
AlgebraSpec load_algebra(AlgebraSpec spec);

AlgebraSpec ground_field();
AlgebraSpec dual_numbers();
AlgebraSpec group_algebra(int m);
// Basis e11, e12, e22.
AlgebraSpec upper_triangular_2x2();
// Ground field, dual numbers, Z/m for 2 <= m <= 6, upper triangular.
std::vector<AlgebraSpec> builtin_specs();

// JSON file format:
//   {"name": "...", "dim": 2, "unit": ["1", "0"],
//    "products": [{"i": 0, "j": 1, "value": ["0", "1"]}, ...]}
// Coefficients are integers or "p/q" strings; omitted products are zero.
AlgebraSpec parse_algebra_json(const std::string& text);
AlgebraSpec read_algebra_file(const std::string& path);

struct ChainMatrixStack {
  int cutoff = 0;
  int dim = 0;
  std::vector<int> chain_dims;                           // C_0 .. C_N
  std::vector<std::vector<linalg::SparseMatrix>> faces;  // faces[p][i]: C_p -> C_{p-1}
  std::vector<linalg::SparseMatrix> cyclic;              // unsigned rotation on C_p
  std::vector<linalg::SparseMatrix> b;                   // b[p]: C_p -> C_{p-1}, p >= 1
  std::vector<linalg::SparseMatrix> connes;              // connes[p]: C_p -> C_{p+1}, p < N
};

ChainMatrixStack build_chain_stack(const AlgebraSpec& spec, int cutoff);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};
// Simplicial and cyclic identities, b^2 = 0, B^2 = 0, bB + Bb = 0.
std::vector<IdentityCheck> check_stack_identities(const ChainMatrixStack& stack);

struct ExactnessNode {
  std::string name;  // e.g. "HH_2", "HC_3 (I -> S)"
  int dim = 0;
  int rank_in = 0;
  int rank_out = 0;
  bool composite_zero = false;
  bool exact = false;
};

struct HomologyReport {
  std::string algebra;
  int cutoff = 0;
  std::vector<int> hh_dims;  // HH_0 .. HH_N
  std::vector<int> hc_dims;  // HC_0 .. HC_N
  std::vector<linalg::DenseMatrix> map_i;  // I_n: HH_n -> HC_n
  std::vector<linalg::DenseMatrix> map_s;  // S_n: HC_n -> HC_{n-2} (empty for n < 2)
  std::vector<linalg::DenseMatrix> map_b;  // B_n: HC_{n-1} -> HH_n (empty for n = 0)
  std::vector<ExactnessNode> nodes;
  bool exact = false;
};

// Normalized mixed complex of a unital algebra up to degree N + 1, enough
// for exact HH_n and HC_n with n <= N.
class MixedComplex {
public:
  MixedComplex(const AlgebraSpec& spec, int cutoff);

  int cutoff() const { return cutoff_; }
  const AlgebraSpec& rebased() const { return rebased_; }
  int normalized_dim(int n) const { return bar_dims_[n]; }
  int total_dim(int n) const { return tot_dims_[n]; }
  // Offset of the C-bar_{n-2k} summand inside Tot_n.
  int total_offset(int n, int k) const { return tot_offsets_[n][k]; }

  const linalg::SparseMatrix& bar_b(int n) const { return bar_b_[n]; }
  const linalg::SparseMatrix& bar_B(int n) const { return bar_B_[n]; }
  const linalg::SparseMatrix& total_d(int n) const { return tot_d_[n]; }

  const linalg::Homology& hh(int n) const { return hh_[n]; }
  const linalg::Homology& hc(int n) const { return hc_[n]; }

  // Normalized basis tuple of index `idx` in degree n (first entry in
  // 0..dim-1, the rest in 1..dim-1, w.r.t. the rebased basis).
  std::vector<int> bar_tuple(int n, int idx) const;

  linalg::SparseMatrix inclusion(int n) const;      // C-bar_n -> Tot_n
  linalg::SparseMatrix periodicity(int n) const;    // Tot_n -> Tot_{n-2}
  linalg::SparseMatrix connecting(int n) const;     // Tot_{n-1} -> C-bar_n

  HomologyReport report() const;

private:
  int bar_index(int n, const std::vector<int>& tuple) const;

  AlgebraSpec rebased_;
  int cutoff_;
  std::vector<int> bar_dims_;
  std::vector<int> tot_dims_;
  std::vector<std::vector<int>> tot_offsets_;
  std::vector<linalg::SparseMatrix> bar_b_;  // bar_b_[n]: C-bar_n -> C-bar_{n-1}; n = 0 is the zero map
  std::vector<linalg::SparseMatrix> bar_B_;  // bar_B_[n]: C-bar_n -> C-bar_{n+1}
  std::vector<linalg::SparseMatrix> tot_d_;  // tot_d_[n]: Tot_n -> Tot_{n-1}
  std::vector<linalg::Homology> hh_;
  std::vector<linalg::Homology> hc_;
};

// Re-expresses the algebra in a basis whose first element is the unit.
AlgebraSpec rebase_unit_first(const AlgebraSpec& spec);

struct HochschildResult {
  std::string algebra;
  std::vector<int> dims;
  std::vector<std::vector<linalg::SparseVector>> representatives;  // normalized chains
};

HochschildResult compute_hochschild(const AlgebraSpec& spec, int cutoff);
HomologyReport compute_cyclic(const AlgebraSpec& spec, int cutoff);

// A function on Z/m, indexed by group element.
using ClassFunction = std::vector<Rational>;
ClassFunction indicator(int m, const std::vector<int>& elements);

// Diagonal action f(g_0, ..., g_p) -> F(g_0 ... g_p) f(g_0, ..., g_p) on
// C_p for p = 0 .. stack.cutoff.  Requires a group algebra.
std::vector<linalg::SparseMatrix> class_function_action(const AlgebraSpec& spec,
                                                        const ClassFunction& f,
                                                        const ChainMatrixStack& stack);
// True when every action matrix commutes with every face map, the cyclic
// operator, b and B.
bool action_commutes(const ChainMatrixStack& stack, const std::vector<linalg::SparseMatrix>& action);

// The same action on Tot_n of the normalized mixed complex.
linalg::SparseMatrix class_function_total(const MixedComplex& mc, const ClassFunction& f, int n);

struct CommutatorCheck {
  std::string name;
  bool square_zero = false;
};

struct SbiCheck {
  std::vector<ExactnessNode> nodes;
  bool exact = false;
  std::vector<CommutatorCheck> commutators;
  bool pass = false;
};

// Exactness of the SBI sequence at every computed node and, for each
// idempotent class function e, [e, F]^2 = 0 on HH_n and HC_n, n <= N.
SbiCheck sbi_exactness_check(const MixedComplex& mc, const std::vector<ClassFunction>& idempotents,
                             const ClassFunction& f);

}  // namespace compres::engine
