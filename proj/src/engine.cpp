#include "compres/engine.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace compres::engine {

using linalg::DenseMatrix;
using linalg::SparseMatrix;
using linalg::SparseVector;

Coeffs AlgebraSpec::multiply(const Coeffs& x, const Coeffs& y) const {
  Coeffs out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      const Coeffs& p = product(i, j);
      for (int k = 0; k < dim; ++k)
        if (p[k] != 0) out[k] += xy * p[k];
    }
  }
  return out;
}

namespace {

Coeffs basis_vector(int dim, int i) {
  Coeffs v(dim);
  v[i] = 1;
  return v;
}

std::string triple_str(int i, int j, int k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

}  // namespace

AlgebraSpec load_algebra(AlgebraSpec spec) {
  using Kind = AlgebraError::Kind;
  if (spec.dim < 1) throw AlgebraError(Kind::Malformed, "algebra dimension must be positive");
  if (spec.products.size() != static_cast<size_t>(spec.dim) * spec.dim)
    throw AlgebraError(Kind::Malformed, "structure constant table has the wrong size");
  for (const auto& p : spec.products)
    if (static_cast<int>(p.size()) != spec.dim)
      throw AlgebraError(Kind::Malformed, "product vector has the wrong length");

  const int d = spec.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Coeffs left = spec.multiply(spec.product(i, j), basis_vector(d, k));
        Coeffs right = spec.multiply(basis_vector(d, i), spec.product(j, k));
        if (left != right)
          throw AlgebraError(Kind::NotAssociative,
                             "structure constants are not associative at " + triple_str(i, j, k),
                             {i, j, k});
      }

  if (!spec.unit) throw AlgebraError(Kind::NoUnit, "algebra has no unit (nonunital algebras are not supported)");
  if (static_cast<int>(spec.unit->size()) != d)
    throw AlgebraError(Kind::Malformed, "unit vector has the wrong length");
  for (int i = 0; i < d; ++i) {
    Coeffs e = basis_vector(d, i);
    if (spec.multiply(*spec.unit, e) != e || spec.multiply(e, *spec.unit) != e)
      throw AlgebraError(Kind::NoUnit,
                         "unit vector is not a two-sided identity on e_" + std::to_string(i));
  }
  return spec;
}

AlgebraSpec ground_field() {
  return load_algebra({"ground field", 1, {{Rational(1)}}, Coeffs{Rational(1)}, std::nullopt});
}

AlgebraSpec dual_numbers() {
  // Basis 1, x with x^2 = 0.
  AlgebraSpec s{"dual numbers", 2, {}, Coeffs{1, 0}, std::nullopt};
  s.products = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
  return load_algebra(std::move(s));
}

AlgebraSpec group_algebra(int m) {
  if (m < 1) throw std::invalid_argument("group_algebra requires m >= 1");
  AlgebraSpec s{"Z/" + std::to_string(m), m, {}, basis_vector(m, 0), m};
  s.products.reserve(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.products.push_back(basis_vector(m, (i + j) % m));
  return load_algebra(std::move(s));
}

AlgebraSpec upper_triangular_2x2() {
  // e11 = 0, e12 = 1, e22 = 2.
  AlgebraSpec s{"upper triangular 2x2", 3, {}, Coeffs{1, 0, 1}, std::nullopt};
  s.products.assign(9, Coeffs(3));
  auto set = [&](int i, int j, int k) { s.products[i * 3 + j][k] = 1; };
  set(0, 0, 0);  // e11 e11 = e11
  set(0, 1, 1);  // e11 e12 = e12
  set(1, 2, 1);  // e12 e22 = e12
  set(2, 2, 2);  // e22 e22 = e22
  return load_algebra(std::move(s));
}

std::vector<AlgebraSpec> builtin_specs() {
  std::vector<AlgebraSpec> out{ground_field(), dual_numbers()};
  for (int m = 2; m <= 6; ++m) out.push_back(group_algebra(m));
  out.push_back(upper_triangular_2x2());
  return out;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw AlgebraError(AlgebraError::Kind::Malformed, "coefficient must be an integer or a \"p/q\" string");
}

Coeffs json_coeffs(const nlohmann::json& v, int dim) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw AlgebraError(AlgebraError::Kind::Malformed,
                       "coefficient vector must be an array of length " + std::to_string(dim));
  Coeffs out;
  for (const auto& x : v) out.push_back(json_rational(x));
  return out;
}

}  // namespace

AlgebraSpec parse_algebra_json(const std::string& text) {
  using Kind = AlgebraError::Kind;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw AlgebraError(Kind::Malformed, std::string("algebra file is not valid JSON: ") + e.what());
  }
  try {
    AlgebraSpec s;
    s.name = j.value("name", std::string("custom"));
    s.dim = j.at("dim").get<int>();
    if (s.dim < 1) throw AlgebraError(Kind::Malformed, "algebra dimension must be positive");
    s.products.assign(static_cast<size_t>(s.dim) * s.dim, Coeffs(s.dim));
    if (j.contains("unit") && !j.at("unit").is_null()) s.unit = json_coeffs(j.at("unit"), s.dim);
    for (const auto& entry : j.value("products", nlohmann::json::array())) {
      int a = entry.at("i").get<int>();
      int b = entry.at("j").get<int>();
      if (a < 0 || a >= s.dim || b < 0 || b >= s.dim)
        throw AlgebraError(Kind::Malformed, "product index out of range");
      s.products[a * s.dim + b] = json_coeffs(entry.at("value"), s.dim);
    }
    return load_algebra(std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(Kind::Malformed, std::string("malformed algebra file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw AlgebraError(Kind::Malformed, e.what());
  }
}

AlgebraSpec read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(AlgebraError::Kind::Malformed, "cannot open algebra file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

namespace {

long long checked_power(int base, int exponent) {
  long long out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    if (out > kMaxChainBasis) return out;
  }
  return out;
}

void guard_size(const AlgebraSpec& spec, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("degree cutoff must be nonnegative");
  if (checked_power(spec.dim, cutoff + 1) > kMaxChainBasis)
    throw TooLarge("dim^(N+1) exceeds " + std::to_string(kMaxChainBasis) + " for " + spec.name);
}

// Unnormalized tuples: index = sum a_k dim^k.
std::vector<int> decode(int idx, int dim, int length) {
  std::vector<int> t(length);
  for (int k = 0; k < length; ++k) {
    t[k] = idx % dim;
    idx /= dim;
  }
  return t;
}

int encode(const std::vector<int>& t, int dim) {
  int idx = 0;
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) idx = idx * dim + t[k];
  return idx;
}

int int_power(int base, int exponent) {
  int out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

SparseMatrix scalar_multiple(const SparseMatrix& m, const Rational& c) {
  SparseMatrix out{m.rows, {}};
  for (const auto& col : m.cols) out.cols.push_back(linalg::scaled(col, c));
  return out;
}

}  // namespace

ChainMatrixStack build_chain_stack(const AlgebraSpec& spec, int cutoff) {
  guard_size(spec, cutoff);
  if (!spec.unit) throw AlgebraError(AlgebraError::Kind::NoUnit, "chain stack needs a unital algebra");
  const int d = spec.dim;
  ChainMatrixStack st;
  st.cutoff = cutoff;
  st.dim = d;
  for (int p = 0; p <= cutoff; ++p) st.chain_dims.push_back(int_power(d, p + 1));

  st.faces.resize(cutoff + 1);
  st.cyclic.resize(cutoff + 1);
  st.b.resize(cutoff + 1);
  for (int p = 0; p <= cutoff; ++p) {
    const int n = st.chain_dims[p];
    SparseMatrix rot{n, std::vector<SparseVector>(n)};
    for (int idx = 0; idx < n; ++idx) {
      auto t = decode(idx, d, p + 1);
      std::vector<int> r(p + 1);
      r[0] = t[p];
      for (int k = 0; k < p; ++k) r[k + 1] = t[k];
      rot.cols[idx].emplace(encode(r, d), 1);
    }
    st.cyclic[p] = std::move(rot);
    if (p == 0) continue;

    const int target = st.chain_dims[p - 1];
    st.faces[p].assign(p + 1, SparseMatrix{target, std::vector<SparseVector>(n)});
    for (int idx = 0; idx < n; ++idx) {
      auto t = decode(idx, d, p + 1);
      for (int i = 0; i <= p; ++i) {
        const Coeffs& prod = i < p ? spec.product(t[i], t[i + 1]) : spec.product(t[p], t[0]);
        std::vector<int> f;
        f.reserve(p);
        if (i < p) {
          f.assign(t.begin(), t.begin() + i);
          f.push_back(0);
          f.insert(f.end(), t.begin() + i + 2, t.end());
        } else {
          f.assign(t.begin(), t.begin() + p);
        }
        for (int k = 0; k < d; ++k) {
          if (prod[k] == 0) continue;
          f[i < p ? i : 0] = k;
          linalg::axpy(st.faces[p][i].cols[idx], prod[k], SparseVector{{encode(f, d), Rational(1)}});
        }
      }
    }
    SparseMatrix bp{target, std::vector<SparseVector>(n)};
    for (int i = 0; i <= p; ++i) bp = i % 2 == 0 ? bp + st.faces[p][i] : bp - st.faces[p][i];
    st.b[p] = std::move(bp);
  }

  // B = (1 - t) s N with t = (-1)^p tau and s the extra degeneracy a -> 1 (x) a.
  auto signed_t = [&](int p) { return scalar_multiple(st.cyclic[p], p % 2 == 0 ? 1 : -1); };
  st.connes.resize(cutoff);
  for (int p = 0; p < cutoff; ++p) {
    const int n = st.chain_dims[p];
    const int up = st.chain_dims[p + 1];
    SparseMatrix norm = linalg::identity_matrix(n);
    SparseMatrix power = linalg::identity_matrix(n);
    const SparseMatrix t = signed_t(p);
    for (int i = 1; i <= p; ++i) {
      power = linalg::compose(t, power);
      norm = norm + power;
    }
    SparseMatrix extra{up, std::vector<SparseVector>(n)};
    for (int idx = 0; idx < n; ++idx) {
      for (int k = 0; k < d; ++k) {
        if ((*spec.unit)[k] == 0) continue;
        // Prepending entry k shifts the existing tuple up one digit.
        extra.cols[idx].emplace(k + d * idx, (*spec.unit)[k]);
      }
    }
    SparseMatrix one_minus_t = linalg::identity_matrix(up) - signed_t(p + 1);
    st.connes[p] = linalg::compose(one_minus_t, linalg::compose(extra, norm));
  }
  return st;
}

std::vector<IdentityCheck> check_stack_identities(const ChainMatrixStack& st) {
  std::vector<IdentityCheck> out;
  const int N = st.cutoff;
  bool simplicial = true;
  for (int p = 2; p <= N; ++p)
    for (int j = 1; j <= p; ++j)
      for (int i = 0; i < j; ++i)
        if (!(linalg::compose(st.faces[p - 1][i], st.faces[p][j]) ==
              linalg::compose(st.faces[p - 1][j - 1], st.faces[p][i])))
          simplicial = false;
  out.push_back({"d_i d_j = d_{j-1} d_i (i < j)", simplicial});

  bool periodic = true;
  for (int p = 0; p <= N; ++p) {
    SparseMatrix power = linalg::identity_matrix(st.chain_dims[p]);
    for (int i = 0; i <= p; ++i) power = linalg::compose(st.cyclic[p], power);
    if (!(power == linalg::identity_matrix(st.chain_dims[p]))) periodic = false;
  }
  out.push_back({"t^(p+1) = 1", periodic});

  bool cyclic = true;
  for (int p = 1; p <= N; ++p) {
    if (!(linalg::compose(st.faces[p][0], st.cyclic[p]) == st.faces[p][p])) cyclic = false;
    for (int i = 1; i <= p; ++i)
      if (!(linalg::compose(st.faces[p][i], st.cyclic[p]) ==
            linalg::compose(st.cyclic[p - 1], st.faces[p][i - 1])))
        cyclic = false;
  }
  out.push_back({"d_0 t = d_p, d_i t = t d_{i-1}", cyclic});

  bool bb = true;
  for (int p = 2; p <= N; ++p)
    if (!linalg::is_zero(linalg::compose(st.b[p - 1], st.b[p]))) bb = false;
  out.push_back({"b^2 = 0", bb});

  bool BB = true;
  for (int p = 0; p + 2 <= N; ++p)
    if (!linalg::is_zero(linalg::compose(st.connes[p + 1], st.connes[p]))) BB = false;
  out.push_back({"B^2 = 0", BB});

  bool mixed = true;
  for (int p = 0; p + 1 <= N; ++p) {
    SparseMatrix lhs = linalg::compose(st.b[p + 1], st.connes[p]);
    if (p >= 1) lhs = lhs + linalg::compose(st.connes[p - 1], st.b[p]);
    if (!linalg::is_zero(lhs)) mixed = false;
  }
  out.push_back({"bB + Bb = 0", mixed});
  return out;
}

AlgebraSpec rebase_unit_first(const AlgebraSpec& spec) {
  if (!spec.unit) throw AlgebraError(AlgebraError::Kind::NoUnit, "rebasing needs a unit");
  const int d = spec.dim;
  const Coeffs& u = *spec.unit;
  int pivot = 0;
  while (pivot < d && u[pivot] == 0) ++pivot;
  if (pivot == d) throw AlgebraError(AlgebraError::Kind::NoUnit, "unit vector is zero");

  // New basis: f_0 = u, then the old e_j for j != pivot in order.
  std::vector<int> old_of_new{pivot};
  for (int j = 0; j < d; ++j)
    if (j != pivot) old_of_new.push_back(j);
  auto to_old = [&](int a) { return a == 0 ? u : basis_vector(d, old_of_new[a]); };
  auto to_new = [&](const Coeffs& v) {
    Coeffs out(d);
    out[0] = v[pivot] / u[pivot];
    for (int a = 1; a < d; ++a) out[a] = v[old_of_new[a]] - out[0] * u[old_of_new[a]];
    return out;
  };

  AlgebraSpec out{spec.name, d, {}, basis_vector(d, 0), spec.group_order};
  out.products.reserve(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.products.push_back(to_new(spec.multiply(to_old(a), to_old(b))));
  return out;
}

MixedComplex::MixedComplex(const AlgebraSpec& spec, int cutoff)
    : rebased_(rebase_unit_first(spec)), cutoff_(cutoff) {
  guard_size(spec, cutoff);
  const int d = rebased_.dim;
  const int top = cutoff + 1;
  for (int n = 0; n <= top; ++n) bar_dims_.push_back(d * int_power(d - 1, n));

  // Normalized boundary.
  bar_b_.resize(top + 1);
  bar_b_[0] = SparseMatrix{0, std::vector<SparseVector>(bar_dims_[0])};
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m{bar_dims_[n - 1], std::vector<SparseVector>(bar_dims_[n])};
    for (int idx = 0; idx < bar_dims_[n]; ++idx) {
      auto t = bar_tuple(n, idx);
      SparseVector& col = m.cols[idx];
      for (int i = 0; i <= n; ++i) {
        const Coeffs& prod = i < n ? rebased_.product(t[i], t[i + 1]) : rebased_.product(t[n], t[0]);
        std::vector<int> f;
        const int slot = i < n ? i : 0;
        if (i < n) {
          f.assign(t.begin(), t.begin() + i);
          f.push_back(0);
          f.insert(f.end(), t.begin() + i + 2, t.end());
        } else {
          f.assign(t.begin(), t.begin() + n);
        }
        const Rational sign = i % 2 == 0 ? 1 : -1;
        for (int k = 0; k < d; ++k) {
          if (prod[k] == 0 || (slot >= 1 && k == 0)) continue;
          f[slot] = k;
          linalg::axpy(col, Rational(sign * prod[k]), SparseVector{{bar_index(n - 1, f), Rational(1)}});
        }
      }
    }
    bar_b_[n] = std::move(m);
  }

  // Normalized Connes operator.
  bar_B_.resize(top);
  for (int n = 0; n < top; ++n) {
    SparseMatrix m{bar_dims_[n + 1], std::vector<SparseVector>(bar_dims_[n])};
    for (int idx = 0; idx < bar_dims_[n]; ++idx) {
      auto t = bar_tuple(n, idx);
      if (t[0] == 0) continue;  // a_0 lands in a degenerate slot
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f{0};
        for (int k = 0; k <= n; ++k) f.push_back(t[(i + k) % (n + 1)]);
        const Rational sign = (n * i) % 2 == 0 ? 1 : -1;
        linalg::axpy(m.cols[idx], sign, SparseVector{{bar_index(n + 1, f), Rational(1)}});
      }
    }
    bar_B_[n] = std::move(m);
  }

  // Total complex of the mixed complex.
  tot_offsets_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    int offset = 0;
    for (int k = 0; 2 * k <= n; ++k) {
      tot_offsets_[n].push_back(offset);
      offset += bar_dims_[n - 2 * k];
    }
    tot_dims_.push_back(offset);
  }
  tot_d_.resize(top + 1);
  tot_d_[0] = SparseMatrix{0, std::vector<SparseVector>(tot_dims_[0])};
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m{tot_dims_[n - 1], std::vector<SparseVector>(tot_dims_[n])};
    for (int k = 0; 2 * k <= n; ++k) {
      const int deg = n - 2 * k;
      for (int idx = 0; idx < bar_dims_[deg]; ++idx) {
        SparseVector& col = m.cols[tot_offsets_[n][k] + idx];
        if (deg >= 1) {
          for (const auto& [r, v] : bar_b_[deg].cols[idx]) col.emplace(tot_offsets_[n - 1][k] + r, v);
        }
        if (k >= 1) {
          for (const auto& [r, v] : bar_B_[deg].cols[idx])
            linalg::axpy(col, v, SparseVector{{tot_offsets_[n - 1][k - 1] + r, Rational(1)}});
        }
      }
    }
    tot_d_[n] = std::move(m);
  }

  for (int n = 0; n <= cutoff; ++n) {
    hh_.emplace_back(bar_b_[n + 1], bar_b_[n]);
    hc_.emplace_back(tot_d_[n + 1], tot_d_[n]);
  }
}

std::vector<int> MixedComplex::bar_tuple(int n, int idx) const {
  const int d = rebased_.dim;
  std::vector<int> t(n + 1);
  t[0] = idx % d;
  idx /= d;
  for (int k = 1; k <= n; ++k) {
    t[k] = idx % (d - 1) + 1;
    idx /= (d - 1);
  }
  return t;
}

int MixedComplex::bar_index(int n, const std::vector<int>& t) const {
  const int d = rebased_.dim;
  int idx = 0;
  for (int k = n; k >= 1; --k) idx = idx * (d - 1) + (t[k] - 1);
  return idx * d + t[0];
}

SparseMatrix MixedComplex::inclusion(int n) const {
  SparseMatrix m{tot_dims_[n], std::vector<SparseVector>(bar_dims_[n])};
  for (int j = 0; j < bar_dims_[n]; ++j) m.cols[j].emplace(tot_offsets_[n][0] + j, 1);
  return m;
}

SparseMatrix MixedComplex::periodicity(int n) const {
  SparseMatrix m{n >= 2 ? tot_dims_[n - 2] : 0, std::vector<SparseVector>(tot_dims_[n])};
  for (int k = 1; 2 * k <= n; ++k)
    for (int j = 0; j < bar_dims_[n - 2 * k]; ++j)
      m.cols[tot_offsets_[n][k] + j].emplace(tot_offsets_[n - 2][k - 1] + j, 1);
  return m;
}

SparseMatrix MixedComplex::connecting(int n) const {
  SparseMatrix m{bar_dims_[n], std::vector<SparseVector>(n >= 1 ? tot_dims_[n - 1] : 0)};
  if (n == 0) return m;
  for (int j = 0; j < bar_dims_[n - 1]; ++j) m.cols[tot_offsets_[n - 1][0] + j] = bar_B_[n - 1].cols[j];
  return m;
}

namespace {

ExactnessNode exactness(std::string name, int dim, const DenseMatrix& in, const DenseMatrix& out) {
  ExactnessNode node;
  node.name = std::move(name);
  node.dim = dim;
  node.rank_in = linalg::rank(in);
  node.rank_out = linalg::rank(out);
  node.composite_zero = (out * in).is_zero();
  node.exact = node.composite_zero && node.rank_in + node.rank_out == dim;
  return node;
}

}  // namespace

HomologyReport MixedComplex::report() const {
  HomologyReport rep;
  rep.algebra = rebased_.name;
  rep.cutoff = cutoff_;
  const int N = cutoff_;
  for (int n = 0; n <= N; ++n) {
    rep.hh_dims.push_back(hh_[n].dim());
    rep.hc_dims.push_back(hc_[n].dim());
    rep.map_i.push_back(linalg::induced_map(hh_[n], hc_[n], inclusion(n)));
    rep.map_s.push_back(n >= 2 ? linalg::induced_map(hc_[n], hc_[n - 2], periodicity(n))
                               : DenseMatrix(0, hc_[n].dim()));
    rep.map_b.push_back(n >= 1 ? linalg::induced_map(hc_[n - 1], hh_[n], connecting(n))
                               : DenseMatrix(hh_[0].dim(), 0));
  }
  rep.exact = true;
  for (int n = 0; n <= N; ++n) {
    rep.nodes.push_back(exactness("HH_" + std::to_string(n) + " (B -> I)", rep.hh_dims[n],
                                  rep.map_b[n], rep.map_i[n]));
    rep.nodes.push_back(exactness("HC_" + std::to_string(n) + " (I -> S)", rep.hc_dims[n],
                                  rep.map_i[n], rep.map_s[n]));
    if (n + 2 <= N)
      rep.nodes.push_back(exactness("HC_" + std::to_string(n) + " (S -> B)", rep.hc_dims[n],
                                    rep.map_s[n + 2], rep.map_b[n + 1]));
  }
  for (const auto& node : rep.nodes) rep.exact = rep.exact && node.exact;
  return rep;
}

HochschildResult compute_hochschild(const AlgebraSpec& spec, int cutoff) {
  MixedComplex mc(spec, cutoff);
  HochschildResult out;
  out.algebra = spec.name;
  for (int n = 0; n <= cutoff; ++n) {
    out.dims.push_back(mc.hh(n).dim());
    out.representatives.push_back(mc.hh(n).representatives());
  }
  return out;
}

HomologyReport compute_cyclic(const AlgebraSpec& spec, int cutoff) {
  return MixedComplex(spec, cutoff).report();
}

ClassFunction indicator(int m, const std::vector<int>& elements) {
  ClassFunction f(m);
  for (int g : elements) f.at(((g % m) + m) % m) = 1;
  return f;
}

namespace {

void require_group(const AlgebraSpec& spec, const ClassFunction& f) {
  if (!spec.group_order)
    throw std::invalid_argument("class function action requires a group algebra");
  if (static_cast<int>(f.size()) != *spec.group_order)
    throw std::invalid_argument("class function has the wrong number of values");
}

}  // namespace

std::vector<SparseMatrix> class_function_action(const AlgebraSpec& spec, const ClassFunction& f,
                                                const ChainMatrixStack& stack) {
  require_group(spec, f);
  const int m = *spec.group_order;
  std::vector<SparseMatrix> out;
  for (int p = 0; p <= stack.cutoff; ++p) {
    const int n = stack.chain_dims[p];
    SparseMatrix a{n, std::vector<SparseVector>(n)};
    for (int idx = 0; idx < n; ++idx) {
      int sum = 0;
      for (int g : decode(idx, m, p + 1)) sum += g;
      if (f[sum % m] != 0) a.cols[idx].emplace(idx, f[sum % m]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool action_commutes(const ChainMatrixStack& st, const std::vector<SparseMatrix>& action) {
  for (int p = 0; p <= st.cutoff; ++p) {
    if (!(linalg::compose(action[p], st.cyclic[p]) == linalg::compose(st.cyclic[p], action[p])))
      return false;
    if (p >= 1) {
      for (const auto& face : st.faces[p])
        if (!(linalg::compose(action[p - 1], face) == linalg::compose(face, action[p]))) return false;
      if (!(linalg::compose(action[p - 1], st.b[p]) == linalg::compose(st.b[p], action[p])))
        return false;
    }
    if (p < st.cutoff &&
        !(linalg::compose(action[p + 1], st.connes[p]) == linalg::compose(st.connes[p], action[p])))
      return false;
  }
  return true;
}

namespace {

SparseMatrix class_function_bar(const MixedComplex& mc, const ClassFunction& f, int n) {
  const int m = static_cast<int>(f.size());
  SparseMatrix a{mc.normalized_dim(n), std::vector<SparseVector>(mc.normalized_dim(n))};
  for (int idx = 0; idx < mc.normalized_dim(n); ++idx) {
    int sum = 0;
    for (int g : mc.bar_tuple(n, idx)) sum += g;
    if (f[sum % m] != 0) a.cols[idx].emplace(idx, f[sum % m]);
  }
  return a;
}

void require_identity_rebase(const MixedComplex& mc, const ClassFunction& f) {
  const AlgebraSpec& spec = mc.rebased();
  require_group(spec, f);
  // Group algebras come with the unit as basis element 0, so rebasing is the
  // identity and normalized tuples are tuples of group elements.
  const int m = *spec.group_order;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (spec.product(i, j) != basis_vector(m, (i + j) % m))
        throw std::invalid_argument("class function action requires the standard group basis");
}

}  // namespace

SparseMatrix class_function_total(const MixedComplex& mc, const ClassFunction& f, int n) {
  require_identity_rebase(mc, f);
  SparseMatrix a{mc.total_dim(n), std::vector<SparseVector>(mc.total_dim(n))};
  for (int k = 0; 2 * k <= n; ++k) {
    SparseMatrix block = class_function_bar(mc, f, n - 2 * k);
    for (int j = 0; j < block.num_cols(); ++j)
      for (const auto& [r, v] : block.cols[j]) a.cols[mc.total_offset(n, k) + j].emplace(mc.total_offset(n, k) + r, v);
  }
  return a;
}

SbiCheck sbi_exactness_check(const MixedComplex& mc, const std::vector<ClassFunction>& idempotents,
                             const ClassFunction& f) {
  SbiCheck out;
  HomologyReport rep = mc.report();
  out.nodes = rep.nodes;
  out.exact = rep.exact;
  out.pass = rep.exact;
  require_identity_rebase(mc, f);
  for (size_t e_idx = 0; e_idx < idempotents.size(); ++e_idx) {
    const ClassFunction& e = idempotents[e_idx];
    bool idempotent = e.size() == f.size();
    for (const auto& v : e) idempotent = idempotent && v * v == v;
    for (int n = 0; n <= mc.cutoff(); ++n) {
      bool ok = idempotent;
      if (ok) {
        DenseMatrix ehc = linalg::induced_map(mc.hc(n), mc.hc(n), class_function_total(mc, e, n));
        DenseMatrix fhc = linalg::induced_map(mc.hc(n), mc.hc(n), class_function_total(mc, f, n));
        DenseMatrix chc = ehc * fhc - fhc * ehc;
        DenseMatrix ehh = linalg::induced_map(mc.hh(n), mc.hh(n), class_function_bar(mc, e, n));
        DenseMatrix fhh = linalg::induced_map(mc.hh(n), mc.hh(n), class_function_bar(mc, f, n));
        DenseMatrix chh = ehh * fhh - fhh * ehh;
        ok = (chc * chc).is_zero() && (chh * chh).is_zero();
      }
      out.commutators.push_back(
          {"[e" + std::to_string(e_idx) + ", F]^2 = 0 in degree " + std::to_string(n), ok});
      out.pass = out.pass && ok;
    }
  }
  return out;
}

}  // namespace compres::engine
