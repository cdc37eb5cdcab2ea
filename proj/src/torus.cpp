#include "compres/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "compres/linalg.hpp"

namespace compres::torus {

namespace {

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
  return out;
}

bool is_zero_vec(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

Vec total(const Tuple& t, int rank) {
  Vec s(rank, 0);
  for (const auto& v : t)
    for (int j = 0; j < rank; ++j) s[j] += v[j];
  return s;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

LatticeChain::LatticeChain(int rank, int degree) : rank_(rank), degree_(degree) {
  if (rank < 1) throw std::invalid_argument("lattice rank must be positive");
  if (degree < 0) throw std::invalid_argument("chain degree must be nonnegative");
}

LatticeChain LatticeChain::term(int rank, Tuple entries, const Rational& c) {
  if (entries.empty()) throw std::invalid_argument("chain term needs at least one entry");
  LatticeChain out(rank, static_cast<int>(entries.size()) - 1);
  out.add_term(entries, c);
  return out;
}

LatticeChain LatticeChain::from_function(const MultiLaurent& f) {
  LatticeChain out(f.rank(), 0);
  for (const auto& [e, c] : f.terms()) out.add_term({e}, c);
  return out;
}

void LatticeChain::add_term(const Tuple& entries, const Rational& c) {
  if (static_cast<int>(entries.size()) != degree_ + 1)
    throw std::invalid_argument("chain term has the wrong number of entries");
  for (const auto& v : entries)
    if (static_cast<int>(v.size()) != rank_)
      throw std::invalid_argument("exponent vector length does not match rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(entries, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LatticeChain& LatticeChain::operator+=(const LatticeChain& other) {
  if (other.rank_ != rank_ || other.degree_ != degree_)
    throw std::invalid_argument("adding chains of different shape");
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

LatticeChain& LatticeChain::operator-=(const LatticeChain& other) {
  if (other.rank_ != rank_ || other.degree_ != degree_)
    throw std::invalid_argument("subtracting chains of different shape");
  for (const auto& [t, c] : other.terms_) add_term(t, Rational(-c));
  return *this;
}

LatticeChain operator*(const Rational& c, const LatticeChain& x) {
  LatticeChain out(x.rank_, x.degree_);
  for (const auto& [t, v] : x.terms_) out.add_term(t, Rational(c * v));
  return out;
}

TorusForm::TorusForm(int rank, int degree) : rank_(rank), degree_(degree) {
  if (rank < 1) throw std::invalid_argument("torus rank must be positive");
  if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
}

TorusForm TorusForm::term(int rank, Vec exponent, std::vector<int> indices, const Rational& c) {
  TorusForm out(rank, static_cast<int>(indices.size()));
  out.add_term(exponent, indices, c);
  return out;
}

void TorusForm::add_term(const Vec& exponent, const std::vector<int>& indices, const Rational& c) {
  if (static_cast<int>(exponent.size()) != rank_)
    throw std::invalid_argument("exponent vector length does not match rank");
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("index set size does not match form degree");
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= rank_) throw std::invalid_argument("index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{exponent, indices}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TorusForm& TorusForm::operator+=(const TorusForm& other) {
  if (other.rank_ != rank_ || other.degree_ != degree_)
    throw std::invalid_argument("adding forms of different shape");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

TorusForm& TorusForm::operator-=(const TorusForm& other) {
  if (other.rank_ != rank_ || other.degree_ != degree_)
    throw std::invalid_argument("subtracting forms of different shape");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, Rational(-c));
  return *this;
}

TorusForm operator*(const Rational& c, const TorusForm& x) {
  TorusForm out(x.rank_, x.degree_);
  for (const auto& [k, v] : x.terms_) out.add_term(k.first, k.second, Rational(c * v));
  return out;
}

LatticeChain hochschild_b(const LatticeChain& c) {
  const int p = c.degree();
  if (p < 1) throw std::invalid_argument("hochschild_b requires degree >= 1");
  LatticeChain out(c.rank(), p - 1);
  for (const auto& [t, v] : c.terms()) {
    for (int i = 0; i < p; ++i) {
      Tuple face;
      face.reserve(p);
      for (int k = 0; k < i; ++k) face.push_back(t[k]);
      face.push_back(add(t[i], t[i + 1]));
      for (int k = i + 2; k <= p; ++k) face.push_back(t[k]);
      out.add_term(face, i % 2 == 0 ? v : Rational(-v));
    }
    Tuple wrap;
    wrap.reserve(p);
    wrap.push_back(add(t[p], t[0]));
    for (int k = 1; k < p; ++k) wrap.push_back(t[k]);
    out.add_term(wrap, p % 2 == 0 ? v : Rational(-v));
  }
  return out;
}

LatticeChain cyclic_t(const LatticeChain& c) {
  const int p = c.degree();
  LatticeChain out(c.rank(), p);
  for (const auto& [t, v] : c.terms()) {
    Tuple rotated;
    rotated.reserve(p + 1);
    rotated.push_back(t[p]);
    for (int k = 0; k < p; ++k) rotated.push_back(t[k]);
    out.add_term(rotated, p % 2 == 0 ? v : Rational(-v));
  }
  return out;
}

LatticeChain normalize(const LatticeChain& c) {
  LatticeChain out(c.rank(), c.degree());
  for (const auto& [t, v] : c.terms()) {
    bool degenerate = std::any_of(t.begin() + 1, t.end(), is_zero_vec);
    if (!degenerate) out.add_term(t, v);
  }
  return out;
}

LatticeChain connes_B(const LatticeChain& c) {
  const int p = c.degree();
  LatticeChain out(c.rank(), p + 1);
  LatticeChain rotated = c;
  const Vec zero(c.rank(), 0);
  for (int i = 0; i <= p; ++i) {
    for (const auto& [t, v] : rotated.terms()) {
      Tuple inserted;
      inserted.reserve(p + 2);
      inserted.push_back(zero);
      inserted.insert(inserted.end(), t.begin(), t.end());
      out.add_term(inserted, v);
    }
    rotated = cyclic_t(rotated);
  }
  return normalize(out);
}

TorusForm hkr(const LatticeChain& c) {
  const int p = c.degree();
  const int r = c.rank();
  TorusForm out(r, p);
  if (p > r) return out;
  const Rational inv_fact = 1 / factorial(p);
  for (const auto& [t, v] : c.terms()) {
    const Vec exponent = total(t, r);
    // Expand dlog-coefficients of df_1 ^ ... ^ df_p over distinct index choices.
    std::vector<int> chosen;
    std::vector<bool> used(r, false);
    auto expand = [&](auto&& self, int i, Rational coeff) -> void {
      if (coeff == 0) return;
      if (i > p) {
        std::vector<int> sorted = chosen;
        int inversions = 0;
        for (int a = 0; a < p; ++a)
          for (int b = a + 1; b < p; ++b)
            if (chosen[a] > chosen[b]) ++inversions;
        std::sort(sorted.begin(), sorted.end());
        out.add_term(exponent, sorted, inversions % 2 == 0 ? coeff : Rational(-coeff));
        return;
      }
      for (int j = 0; j < r; ++j) {
        if (used[j] || t[i][j] == 0) continue;
        used[j] = true;
        chosen.push_back(j);
        self(self, i + 1, Rational(coeff * t[i][j]));
        chosen.pop_back();
        used[j] = false;
      }
    };
    expand(expand, 1, Rational(v * inv_fact));
  }
  return out;
}

TorusForm pi0(const TorusForm& f) {
  TorusForm out(f.rank(), f.degree());
  for (const auto& [k, c] : f.terms())
    if (is_zero_vec(k.first)) out.add_term(k.first, k.second, c);
  return out;
}

TorusForm de_rham_d(const TorusForm& f) {
  const int r = f.rank();
  TorusForm out(r, f.degree() + 1);
  if (f.degree() + 1 > r) return out;
  for (const auto& [k, c] : f.terms()) {
    const auto& [a, indices] = k;
    for (int j = 0; j < r; ++j) {
      if (a[j] == 0 || std::find(indices.begin(), indices.end(), j) != indices.end()) continue;
      int before = 0;
      for (int i : indices)
        if (i < j) ++before;
      std::vector<int> merged = indices;
      merged.insert(std::lower_bound(merged.begin(), merged.end(), j), j);
      Rational coeff = c * a[j];
      out.add_term(a, merged, before % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return out;
}

LatticeChain class_action(bool indicator_of_zero, const LatticeChain& c) {
  if (!indicator_of_zero) return c;
  LatticeChain out(c.rank(), c.degree());
  for (const auto& [t, v] : c.terms())
    if (is_zero_vec(total(t, c.rank()))) out.add_term(t, v);
  return out;
}

std::vector<Tuple> windowed_tuples(int rank, int window, int degree) {
  const int side = 2 * window + 1;
  const int slots = rank * (degree + 1);
  long long count = 1;
  for (int i = 0; i < slots; ++i) {
    count *= side;
    if (count > 50'000'000) throw std::length_error("windowed chain space too large");
  }
  std::vector<Tuple> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> digits(slots, 0);
  for (long long n = 0; n < count; ++n) {
    Tuple t(degree + 1, Vec(rank));
    for (int s = 0; s < slots; ++s) t[s / rank][s % rank] = digits[s] - window;
    out.push_back(std::move(t));
    for (int s = slots - 1; s >= 0; --s) {
      if (++digits[s] < side) break;
      digits[s] = 0;
    }
  }
  return out;
}

namespace {

// Assigns consecutive indices to tuples as they are first seen.
struct TupleIndex {
  std::map<Tuple, int> index;
  int get(const Tuple& t) {
    auto [it, inserted] = index.try_emplace(t, static_cast<int>(index.size()));
    return it->second;
  }
};

linalg::SparseVector to_sparse(const LatticeChain& c, TupleIndex& idx) {
  linalg::SparseVector v;
  for (const auto& [t, x] : c.terms()) v.emplace(idx.get(t), x);
  return v;
}

std::map<Vec, std::vector<Tuple>> by_total(const std::vector<Tuple>& tuples, int rank) {
  std::map<Vec, std::vector<Tuple>> out;
  for (const auto& t : tuples) out[total(t, rank)].push_back(t);
  return out;
}

}  // namespace

SquareReport homology_square_check(int rank, int window, int degree) {
  if (rank < 1 || window < 1 || degree < 0 || degree > rank)
    throw std::invalid_argument("homology_square_check: need rank >= 1, window >= 1, 0 <= degree <= rank");
  SquareReport rep;
  rep.rank = rank;
  rep.window = window;
  rep.degree = degree;
  rep.square_commutes = true;
  rep.pi0_kills_B = true;
  rep.hkr_kills_boundaries = true;

  // Invariant p-forms are indexed by their index set.
  std::map<std::vector<int>, int> invariant_index;
  linalg::Echelon invariant_span(1 << rank);
  auto invariant_vector = [&](const TorusForm& f) {
    linalg::SparseVector v;
    for (const auto& [k, c] : f.terms()) {
      auto [it, _] = invariant_index.try_emplace(k.second, static_cast<int>(invariant_index.size()));
      v.emplace(it->second, c);
    }
    return v;
  };

  // Cycles, graded by total exponent (b preserves it).
  const auto grades = by_total(windowed_tuples(rank, window, degree), rank);
  for (const auto& [grade, basis] : grades) {
    std::vector<LatticeChain> cycles;
    if (degree == 0) {
      for (const auto& t : basis) cycles.push_back(LatticeChain::term(rank, t));
    } else {
      TupleIndex target;
      linalg::SparseMatrix b_mat;
      for (const auto& t : basis)
        b_mat.cols.push_back(to_sparse(hochschild_b(LatticeChain::term(rank, t)), target));
      b_mat.rows = static_cast<int>(target.index.size());
      for (const auto& z : linalg::kernel(b_mat)) {
        LatticeChain chain(rank, degree);
        for (const auto& [j, x] : z) chain.add_term(basis[j], x);
        cycles.push_back(std::move(chain));
      }
    }
    rep.dim_cycles += static_cast<int>(cycles.size());
    for (const auto& z : cycles) {
      const TorusForm form = hkr(z);
      const TorusForm projected = pi0(form);
      if (hkr(class_action(true, z)) != projected) rep.square_commutes = false;
      if (!pi0(hkr(connes_B(normalize(z)))).is_zero()) rep.pi0_kills_B = false;
      invariant_span.insert(invariant_vector(projected));
    }
  }
  rep.dim_invariant = invariant_span.rank();

  // Boundaries landing inside the window: dim(b(C_{p+1}^w) cap C_p^w)
  //   = rank(b) - rank(b followed by projection onto out-of-window tuples).
  auto in_window = [&](const Tuple& t) {
    for (const auto& v : t)
      for (int x : v)
        if (x < -window || x > window) return false;
    return true;
  };
  const auto higher = by_total(windowed_tuples(rank, window, degree + 1), rank);
  for (const auto& [grade, basis] : higher) {
    if (!grades.count(grade)) {
      // No windowed p-chains in this grade; still check hkr o b == 0.
      for (const auto& t : basis)
        if (!hkr(hochschild_b(LatticeChain::term(rank, t))).is_zero()) rep.hkr_kills_boundaries = false;
      continue;
    }
    TupleIndex target;
    linalg::SparseMatrix full;
    linalg::SparseMatrix outside;
    for (const auto& t : basis) {
      LatticeChain bt = hochschild_b(LatticeChain::term(rank, t));
      if (!hkr(bt).is_zero()) rep.hkr_kills_boundaries = false;
      linalg::SparseVector v = to_sparse(bt, target);
      linalg::SparseVector v_out;
      for (const auto& [tt, x] : bt.terms())
        if (!in_window(tt)) v_out.emplace(target.get(tt), x);
      full.cols.push_back(std::move(v));
      outside.cols.push_back(std::move(v_out));
    }
    full.rows = outside.rows = static_cast<int>(target.index.size());
    rep.dim_boundaries += linalg::rank(full) - linalg::rank(outside);
  }

  // hkr o B versus d o hkr on normalized windowed chains.
  rep.b_to_d_consistent = true;
  std::optional<Rational> constant;
  bool all_zero = true;
  for (const auto& t : windowed_tuples(rank, window, degree)) {
    LatticeChain x = normalize(LatticeChain::term(rank, t));
    if (x.is_zero()) continue;
    const TorusForm lhs = hkr(connes_B(x));
    const TorusForm rhs = de_rham_d(hkr(x));
    if (!lhs.is_zero() || !rhs.is_zero()) all_zero = false;
    if (!constant && !rhs.is_zero()) {
      const auto& [key, value] = *rhs.terms().begin();
      auto it = lhs.terms().find(key);
      constant = it == lhs.terms().end() ? Rational(0) : Rational(it->second / value);
    }
    if (constant) {
      if (lhs != (*constant) * rhs) rep.b_to_d_consistent = false;
    } else if (!lhs.is_zero()) {
      rep.b_to_d_consistent = false;
    }
  }
  if (!all_zero) {
    rep.b_to_d_constant = constant;
    if (!constant || *constant == 0) rep.b_to_d_consistent = false;
  }

  rep.pass = rep.square_commutes && rep.hkr_kills_boundaries && rep.pi0_kills_B &&
             rep.b_to_d_consistent;
  return rep;
}

std::string render(const LatticeChain& c) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [t, v] : c.terms()) {
    std::ostringstream token;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) token << "(x)";
      token << "L^(";
      for (size_t j = 0; j < t[i].size(); ++j) token << (j ? "," : "") << t[i][j];
      token << ")";
    }
    terms.emplace_back(LaurentQ(v), token.str());
  }
  return render_combination(terms);
}

std::string render(const TorusForm& f) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [k, v] : f.terms()) {
    std::ostringstream token;
    token << "L^(";
    for (size_t j = 0; j < k.first.size(); ++j) token << (j ? "," : "") << k.first[j];
    token << ")";
    for (int i : k.second) token << "*dlog" << (i + 1);
    terms.emplace_back(LaurentQ(v), token.str());
  }
  return render_combination(terms);
}

}  // namespace compres::torus
