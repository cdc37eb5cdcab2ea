#include "compres/suites.hpp"

#include <functional>
#include <map>

#include "compres/hh0.hpp"
#include "compres/oracles/bruhat_subwords.hpp"
#include "compres/oracles/engine_dims.hpp"
#include "compres/oracles/hh0_oracle.hpp"
#include "compres/oracles/rpoly_recursion.hpp"
#include "compres/spectral.hpp"
#include "compres/torus.hpp"

namespace compres::verify {

void SuiteConfig::validate() const {
  if (nmax < 1) throw ConfigError("--nmax must be positive");
  if (lmax < 1) throw ConfigError("--lmax must be positive");
  if (oracle_cutoff < 1) throw ConfigError("--oracle-cutoff must be positive");
  if (window < 1) throw ConfigError("--window must be positive");
  if (engine_cutoff < 2) throw ConfigError("engine cutoff must be at least 2");
  if (random_pairs < 1 || random_length < 0) throw ConfigError("random sampling sizes must be positive");
  if (ranks.empty()) throw ConfigError("at least one torus rank is required");
  for (int r : ranks) {
    if (r < 1 || r > 3) throw ConfigError("--rank must be 1, 2 or 3");
    if (degree && (*degree < 0 || *degree > r))
      throw ConfigError("--degree must lie in 0..rank");
    const int top = degree ? *degree : r;
    double chains = 1;
    for (int k = 0; k < r * (top + 1); ++k) chains *= 2.0 * window + 1;
    if (chains > kMaxTorusChains)
      throw ConfigError("torus truncation too large: rank " + std::to_string(r) + ", window " +
                        std::to_string(window) + ", degree " + std::to_string(top));
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke",      "rpoly",     "hh0",   "clozel",
                                              "commutator", "geomlemma", "torus", "engine"};
  return names;
}

namespace {

std::string str(int n) { return std::to_string(n); }
std::string str(bool b) { return b ? "true" : "false"; }

Case make_case(std::string id, std::string anchor, Params params, std::string expected,
               std::string actual) {
  const bool pass = expected == actual;
  return {std::move(id), std::move(anchor), std::move(params), std::move(expected), std::move(actual), pass};
}

template <class T>
Case equal_case(std::string id, std::string anchor, Params params, const T& expected, const T& actual) {
  Case c{std::move(id), std::move(anchor), std::move(params), render(expected), render(actual), expected == actual};
  return c;
}

// Counts failures of `check` over a sweep; the first failure is reported.
struct Sweep {
  int total = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
  Case to_case(std::string id, std::string anchor, Params params) const {
    params.emplace_back("checked", str(total));
    std::string actual = failed == 0 ? "all hold" : str(failed) + " failures, first: " + first_failure;
    return {std::move(id), std::move(anchor), std::move(params), "all hold", actual, failed == 0};
  }
};

std::vector<WeylWord> words_up_to(int max_length) {
  std::vector<WeylWord> out{WeylWord::identity()};
  for (int len = 1; len <= max_length; ++len) {
    out.emplace_back(Letter::S, len);
    out.emplace_back(Letter::T, len);
  }
  return out;
}

HeckeElement basis(const std::string& word) { return HeckeElement::basis(parse_word(word)); }

}  // namespace

HeckeElement random_element(Rng& rng, int max_length) {
  HeckeElement a;
  const int terms = 1 + rng.below(3);
  for (int i = 0; i < terms; ++i) {
    const int len = rng.below(max_length + 1);
    const Letter first = rng.below(2) == 0 ? Letter::S : Letter::T;
    LaurentQ c;
    const int monomials = 1 + rng.below(2);
    for (int k = 0; k < monomials; ++k) {
      int v = rng.between(-3, 2);
      if (v >= 0) ++v;
      c.add_term(rng.between(-2, 2), Rational(v));
    }
    a.add_term(len == 0 ? WeylWord{} : WeylWord{first, len}, c);
  }
  return a;
}

Report hecke_suite(const SuiteConfig& cfg) {
  Report r{"hecke", cfg.seed, {}};
  const char* quad = "quadratic relation T_s^2 = (q-1)T_s + q";
  const char* braid = "T_w T_w' = T_ww' when lengths add";
  r.add(equal_case("ts_squared", quad, {}, parse_hecke("(q-1)*T[s] + q*T[e]"), t_mul(basis("s"), basis("s"))));
  r.add(equal_case("tt_squared", quad, {}, parse_hecke("(q-1)*T[t] + q*T[e]"), t_mul(basis("t"), basis("t"))));
  r.add(equal_case("ts_tt", braid, {}, basis("st"), t_mul(basis("s"), basis("t"))));
  r.add(equal_case("inverse_s", "inverse of a generator from the quadratic relation", {},
                   parse_hecke("q^-1*T[s] - (1 - q^-1)*T[e]"), t_inverse(parse_word("s"))));
  r.add(equal_case("inverse_ts", "inverse of a generator from the quadratic relation", {},
                   parse_hecke("q^-2*T[st] - (q^-1 - q^-2)*T[s] - (q^-1 - q^-2)*T[t] + (1 - q^-1)*(1 - q^-1)*T[e]"),
                   t_inverse(parse_word("ts"))));

  Rng rng(cfg.seed);
  Sweep assoc;
  for (int i = 0; i < 100; ++i) {
    HeckeElement a = random_element(rng, 6), b = random_element(rng, 6), c = random_element(rng, 6);
    assoc.record(t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c)),
                 [&] { return "(" + render(a) + ", " + render(b) + ", " + render(c) + ")"; });
  }
  r.add(assoc.to_case("associativity", "Hecke algebra is associative", {{"triples", "100"}, {"max_length", "6"}}));

  Sweep unit;
  for (int i = 0; i < 50; ++i) {
    HeckeElement a = random_element(rng, 6);
    unit.record(t_mul(basis("e"), a) == a && t_mul(a, basis("e")) == a, [&] { return render(a); });
  }
  r.add(unit.to_case("unit", "T_e is the unit", {{"samples", "50"}}));

  Sweep inverse;
  for (const WeylWord& w : words_up_to(20))
    inverse.record(t_mul(HeckeElement::basis(w), t_inverse(w)) == basis("e") &&
                       t_mul(t_inverse(w), HeckeElement::basis(w)) == basis("e"),
                   [&] { return w.str(); });
  r.add(inverse.to_case("inverse_contract", "T_w is invertible", {{"max_length", "20"}}));

  Sweep special;
  for (const WeylWord& x : words_up_to(6))
    for (const WeylWord& y : words_up_to(6)) {
      auto values = specialize_q1(t_mul(HeckeElement::basis(x), HeckeElement::basis(y)));
      special.record(values == std::map<WeylWord, Rational>{{x * y, Rational(1)}},
                     [&] { return x.str() + " * " + y.str(); });
    }
  r.add(special.to_case("specialize_q1", "q = 1 recovers the group algebra of W", {{"max_length", "6"}}));

  Sweep words;
  const auto small = words_up_to(5);
  for (const WeylWord& x : small)
    for (const WeylWord& y : small) {
      const WeylWord xy = x * y;
      const int sum = x.length() + y.length();
      words.record(xy.length() <= sum && (sum - xy.length()) % 2 == 0 && x * x.inverse() == WeylWord{} &&
                       lengths_add(x, y) == (xy.length() == sum),
                   [&] { return x.str() + " * " + y.str(); });
      for (const WeylWord& z : small)
        words.record((x * y) * z == x * (y * z), [&] { return x.str() + " * " + y.str() + " * " + z.str(); });
    }
  r.add(words.to_case("weyl_group_laws", "infinite dihedral group", {{"max_length", "5"}}));

  Sweep bruhat;
  for (const WeylWord& w : words_up_to(10)) {
    const auto below = oracles::subword_products(w);
    for (const WeylWord& x : words_up_to(10))
      bruhat.record(bruhat_leq(x, w) == (below.count(x) > 0), [&] { return x.str() + " <= " + w.str(); });
  }
  r.add(bruhat.to_case("bruhat_subwords", "Bruhat order by the subword property", {{"max_length", "10"}}));
  return r;
}

Report rpoly_suite(const SuiteConfig& cfg) {
  Report r{"rpoly", cfg.seed, {}};
  const char* anchor = "R-polynomials from the inverse of T_w";
  r.add(equal_case("r_e_st", anchor, {}, parse_laurent("(q-1)*(q-1)"),
                   r_polynomial(WeylWord{}, parse_word("st"))));
  r.add(equal_case("r_s_st", anchor, {}, parse_laurent("q-1"), r_polynomial(parse_word("s"), parse_word("st"))));
  oracles::RPolyRecursion recursion;
  for (const WeylWord& w : words_up_to(cfg.lmax)) {
    Sweep sweep;
    for (const WeylWord& x : words_up_to(cfg.lmax)) {
      const LaurentQ value = r_polynomial(x, w);
      const bool below = bruhat_leq(x, w);
      bool ok = value == recursion.left(x, w) && value == recursion.right(x, w);
      if (below) {
        ok = ok && !value.is_zero() && value.min_degree() >= 0 &&
             value.max_degree() == w.length() - x.length();
      } else {
        ok = ok && value.is_zero();
      }
      sweep.record(ok, [&] { return "x=" + x.str() + ": " + render(value); });
    }
    r.add(sweep.to_case("r_" + w.str(), "extraction agrees with the descent recursion",
                        {{"w", w.str()}, {"max_length", str(cfg.lmax)}}));
  }
  return r;
}

Report hh0_suite(const SuiteConfig& cfg) {
  Report r{"hh0", cfg.seed, {}};
  const char* basis_anchor = "HH0 basis T_s, T_t, T_(st)^n";
  r.add(equal_case("reduce_ts", basis_anchor, {}, parse_hh0("[E(1)]"), reduce_to_hh0(basis("ts"))));
  r.add(equal_case("reduce_sts", basis_anchor, {}, parse_hh0("(q-1)*[E(1)] + q*[Tt]"), reduce_to_hh0(basis("sts"))));
  r.add(equal_case("reduce_commutator", basis_anchor, {}, HH0Class{},
                   reduce_to_hh0(t_mul(basis("s"), basis("t")) - t_mul(basis("t"), basis("s")))));

  Sweep fixed;
  fixed.record(reduce_to_hh0(basis("s")) == HH0Class::ts(), [] { return std::string("s"); });
  fixed.record(reduce_to_hh0(basis("t")) == HH0Class::tt(), [] { return std::string("t"); });
  for (int n = 0; n <= cfg.nmax; ++n)
    fixed.record(reduce_to_hh0(HeckeElement::basis(WeylWord::st_power(n))) == HH0Class::e_n(n),
                 [n] { return "(st)^" + str(n); });
  r.add(fixed.to_case("basis_fixed_points", basis_anchor, {{"nmax", str(cfg.nmax)}}));

  Rng rng(cfg.seed);
  Sweep trace;
  Sweep linear;
  for (int i = 0; i < cfg.random_pairs; ++i) {
    HeckeElement a = random_element(rng, cfg.random_length);
    HeckeElement b = random_element(rng, cfg.random_length);
    trace.record(reduce_to_hh0(t_mul(a, b)) == reduce_to_hh0(t_mul(b, a)),
                 [&] { return "(" + render(a) + ", " + render(b) + ")"; });
    const LaurentQ c = LaurentQ::q_power(rng.between(-2, 2)) * LaurentQ(rng.between(1, 3));
    linear.record(reduce_to_hh0(c * a - b) == hh0_scale(c, reduce_to_hh0(a)) - reduce_to_hh0(b),
                  [&] { return "(" + render(a) + ", " + render(b) + ")"; });
  }
  r.add(trace.to_case("trace_property", "HH0 is the quotient by commutators",
                      {{"pairs", str(cfg.random_pairs)}, {"max_length", str(cfg.random_length)}}));
  r.add(linear.to_case("linearity", "HH0 is the quotient by commutators", {{"pairs", str(cfg.random_pairs)}}));

  const oracles::HH0Oracle oracle(cfg.oracle_cutoff);
  for (const WeylWord& w : words_up_to(cfg.oracle_cutoff)) {
    const HeckeElement a = HeckeElement::basis(w);
    const HH0Class mine = reduce_to_hh0(a);
    const oracles::ScaledClass expected = oracle.classify(a);
    const bool ok = oracles::HH0Oracle::agrees(expected, mine);
    std::string exp_text = render(expected.scaled);
    if (!(expected.scale == LaurentQ(1))) exp_text = "(" + exp_text + ") / (" + render(expected.scale) + ")";
    Case c{"oracle_" + w.str(), basis_anchor,
           {{"w", w.str()}, {"cutoff", str(cfg.oracle_cutoff)}},
           ok ? render(mine) : exp_text, render(mine), ok};
    r.add(std::move(c));
  }
  return r;
}

Report clozel_suite(const SuiteConfig& cfg) {
  Report r{"clozel", cfg.seed, {}};
  const char* anchor = "1_Gc + opind chi_M pres = 1 on HH0";
  auto check = [&](const std::string& id, const HH0Class& input, const HH0Class& expected) {
    const HH0Class once = one_gc(input);
    const HH0Class twice = one_gc(once);
    const bool ok = once == expected && twice == once;
    Case c{id, anchor, {{"class", render(input)}}, render(expected) + " (idempotent)",
           render(once) + (twice == once ? " (idempotent)" : " (not idempotent: " + render(twice) + ")"), ok};
    r.add(std::move(c));
  };
  check("one_gc_ts", HH0Class::ts(), HH0Class::ts());
  check("one_gc_tt", HH0Class::tt(), HH0Class::tt());
  check("one_gc_e0", HH0Class::e_n(0), HH0Class::e_n(0));
  for (int n = 1; n <= cfg.nmax; ++n) check("one_gc_e" + str(n), HH0Class::e_n(n), HH0Class{});
  return r;
}

Report commutator_suite(const SuiteConfig& cfg) {
  Report r{"commutator", cfg.seed, {}};
  const char* prop = "Iwahori commutator R_1,(st)^n / (q^n (q-1)) (q - 1 - T_s - T_t)";
  const char* alt = "1_Gc pind - pind 1_Mc = (pind - opind) chi_M";
  for (int n = -5; n <= cfg.nmax; ++n) {
    const HH0Class direct = commutator_direct(n);
    r.add(equal_case("closed_form_n" + str(n), prop, {{"n", str(n)}}, commutator_closed_form(n), direct));
    r.add(equal_case("alternative_form_n" + str(n), alt, {{"n", str(n)}}, commutator_via_chi(n), direct));
  }
  for (int n = 1; n <= cfg.nmax; ++n)
    r.add(equal_case("r_identity_n" + str(n), "R_1,(st)^n = (q-1)(q^(2n-1) - q^(2n-2) + ... - 1)", {{"n", str(n)}},
                     r_identity_closed_form(n), r_polynomial(WeylWord{}, WeylWord::st_power(n))));
  return r;
}

Report geomlemma_suite(const SuiteConfig& cfg) {
  Report r{"geomlemma", cfg.seed, {}};
  const char* anchor = "pres pind = 1 + Ad_w on HH0";
  r.add(equal_case("pind_l1", "pind(lambda) = q T_ts^-1", {},
                   parse_hh0("q^-1*[E(1)] - (1 - q^-1)*[Ts] - (1 - q^-1)*[Tt] + (q-1)*(q-1)*q^-1*[E(0)]"),
                   pind_map(LambdaElement::power(1))));
  r.add(equal_case("pind_lminus1", "pind(lambda) = q T_ts^-1", {}, parse_hh0("q^-1*[E(1)]"),
                   pind_map(LambdaElement::power(-1))));
  r.add(equal_case("opind_l2", "opind(lambda) = q^-1 T_st", {}, parse_hh0("q^-2*[E(2)]"),
                   opind_map(LambdaElement::power(2))));
  r.add(equal_case("pres_e2", "pres(T_(st)^n) = q^n (lambda^n + lambda^-n)", {}, parse_lambda("q^2*L^2 + q^2*L^-2"),
                   pres_map(HH0Class::e_n(2))));
  r.add(equal_case("pres_e0", "pres(T_(st)^n) = q^n (lambda^n + lambda^-n)", {}, parse_lambda("2*L^0"),
                   pres_map(HH0Class::e_n(0))));
  for (int n = -cfg.nmax; n <= cfg.nmax; ++n) {
    const LambdaElement x = LambdaElement::power(n);
    const LambdaElement expected = LambdaElement::power(n) + LambdaElement::power(-n);
    r.add(equal_case("pres_pind_n" + str(n), anchor, {{"n", str(n)}}, expected, pres_map(pind_map(x))));
    r.add(equal_case("pres_opind_n" + str(n), anchor, {{"n", str(n)}}, expected, pres_map(opind_map(x))));
  }
  Sweep hom;
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      const LambdaElement a = LambdaElement::power(m), b = LambdaElement::power(n);
      const LambdaElement ab = LambdaElement::power(m + n);
      hom.record(t_mul(pind_image(a), pind_image(b)) == pind_image(ab),
                 [&] { return "pind m=" + str(m) + " n=" + str(n); });
      hom.record(t_mul(opind_image(a), opind_image(b)) == opind_image(ab),
                 [&] { return "opind m=" + str(m) + " n=" + str(n); });
    }
  r.add(hom.to_case("homomorphism", "pind and opind are algebra homomorphisms", {{"range", "-6..6"}}));
  return r;
}

namespace {

int binomial(int n, int k) {
  int out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

Report torus_suite(const SuiteConfig& cfg) {
  Report r{"torus", cfg.seed, {}};
  for (int rank : cfg.ranks) {
    std::vector<int> degrees;
    if (cfg.degree)
      degrees.push_back(*cfg.degree);
    else
      for (int p = 0; p <= rank; ++p) degrees.push_back(p);

    for (int p : degrees) {
      Params params{{"rank", str(rank)}, {"window", str(cfg.window)}, {"degree", str(p)}};
      Sweep chain;
      for (const auto& tuple : torus::windowed_tuples(rank, cfg.window, p)) {
        const torus::LatticeChain x = torus::LatticeChain::term(rank, tuple);
        const torus::LatticeChain nx = torus::normalize(x);
        auto describe = [&] { return torus::render(x); };
        if (p >= 2) chain.record(torus::hochschild_b(torus::hochschild_b(x)).is_zero(), describe);
        chain.record(torus::connes_B(torus::connes_B(nx)).is_zero(), describe);
        // On normalized chains b is followed by dropping degenerate terms.
        const torus::LatticeChain bB = torus::normalize(torus::hochschild_b(torus::connes_B(nx)));
        if (p >= 1)
          chain.record((bB + torus::connes_B(torus::normalize(torus::hochschild_b(nx)))).is_zero(), describe);
        else
          chain.record(bB.is_zero(), describe);
        const torus::LatticeChain fx = torus::class_action(true, x);
        if (p >= 1)
          chain.record(torus::class_action(true, torus::hochschild_b(x)) == torus::hochschild_b(fx), describe);
        chain.record(torus::class_action(true, torus::cyclic_t(x)) == torus::cyclic_t(fx), describe);
        chain.record(torus::class_action(true, torus::connes_B(nx)) == torus::connes_B(torus::class_action(true, nx)),
                     describe);
      }
      r.add(chain.to_case("chain_identities_r" + str(rank) + "_p" + str(p),
                          "b^2 = 0, B^2 = 0, bB + Bb = 0, F commutes with b, t, B", params));

      const torus::SquareReport sq = torus::homology_square_check(rank, cfg.window, p);
      Params full = params;
      full.emplace_back("dim_cycles", str(sq.dim_cycles));
      full.emplace_back("dim_boundaries", str(sq.dim_boundaries));
      full.emplace_back("dim_invariant", str(sq.dim_invariant));
      full.emplace_back("c_p", sq.b_to_d_constant ? render_rational(*sq.b_to_d_constant) : "n/a");
      const bool constant_ok = p == rank ? sq.b_to_d_consistent
                                         : sq.b_to_d_consistent && sq.b_to_d_constant && *sq.b_to_d_constant != 0;
      const std::string c_text = p == rank ? "hkr B = d hkr = 0" : "c_p nonzero";
      const std::string expected = "pass, invariant dim " + str(binomial(rank, p)) + ", " + c_text;
      std::string actual = std::string(sq.pass ? "pass" : "fail") + ", invariant dim " + str(sq.dim_invariant) +
                           ", " + (constant_ok ? c_text : "c_p check failed");
      if (!sq.pass)
        actual += " (square " + str(sq.square_commutes) + ", hkr b " + str(sq.hkr_kills_boundaries) + ", pi0 B " +
                  str(sq.pi0_kills_B) + ", B vs d " + str(sq.b_to_d_consistent) + ")";
      Case c{"square_r" + str(rank) + "_p" + str(p), "HKR square with projection onto invariant forms",
             std::move(full), expected, actual,
             sq.pass && sq.dim_invariant == binomial(rank, p) && constant_ok};
      if (c.pass) c.actual = c.expected;
      r.add(std::move(c));
    }
  }
  return r;
}

namespace {

std::string dims_text(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) out += (i ? " " : "") + str(dims[i]);
  return out;
}

std::vector<engine::AlgebraSpec> default_specs() {
  return {engine::ground_field(), engine::dual_numbers(), engine::group_algebra(2), engine::group_algebra(3),
          engine::group_algebra(4), engine::upper_triangular_2x2()};
}

}  // namespace

Report engine_suite(const SuiteConfig& cfg) {
  Report r{"engine", cfg.seed, {}};
  const int N = cfg.engine_cutoff;
  const auto specs = cfg.specs.empty() ? default_specs() : cfg.specs;
  for (const auto& spec : specs) {
    const std::string tag = spec.name;
    Params params{{"algebra", tag}, {"cutoff", str(N)}};

    const engine::ChainMatrixStack stack = engine::build_chain_stack(spec, N);
    std::string failed;
    for (const auto& check : engine::check_stack_identities(stack))
      if (!check.holds) failed += (failed.empty() ? "" : "; ") + check.name;
    r.add(make_case("identities " + tag, "precyclic module structure maps", params, "all hold",
                    failed.empty() ? "all hold" : "fail: " + failed));

    const engine::MixedComplex mc(spec, N);
    const engine::HomologyReport rep = mc.report();
    const auto expected = oracles::hand_derived_dims(spec.name, N);
    if (expected) {
      r.add(make_case("hh " + tag, "Hochschild homology dimensions", params, dims_text(expected->hh),
                      dims_text(rep.hh_dims)));
      if (expected->hc)
        r.add(make_case("hc " + tag, "cyclic homology dimensions", params, dims_text(*expected->hc),
                        dims_text(rep.hc_dims)));
    }
    r.add(make_case("hc0 " + tag, "HC_0 = HH_0", params, str(rep.hh_dims[0]), str(rep.hc_dims[0])));

    std::string inexact;
    for (const auto& node : rep.nodes)
      if (!node.exact) inexact += (inexact.empty() ? "" : "; ") + node.name;
    Params sbi_params = params;
    sbi_params.emplace_back("nodes", str(static_cast<int>(rep.nodes.size())));
    r.add(make_case("sbi " + tag, "SBI sequence", sbi_params, "exact", inexact.empty() ? "exact" : "inexact at " + inexact));

    if (!spec.group_order) continue;
    const int m = *spec.group_order;
    const engine::ClassFunction f = engine::indicator(m, {0});
    const engine::ClassFunction one(m, Rational(1));
    const auto action = engine::class_function_action(spec, f, stack);
    const auto identity = engine::class_function_action(spec, one, stack);
    bool identity_ok = true;
    bool idempotent = true;
    for (int p = 0; p <= N; ++p) {
      identity_ok = identity_ok && identity[p] == linalg::identity_matrix(stack.chain_dims[p]);
      idempotent = idempotent && linalg::compose(action[p], action[p]) == action[p];
    }
    r.add(make_case("class_action " + tag, "F(g_0...g_n) f(g_0,...,g_n) is a chain map", params,
                    "commutes with d_i, t, b, B; F=1 acts as 1; 1_e idempotent",
                    std::string(engine::action_commutes(stack, action) ? "commutes with d_i, t, b, B"
                                                                        : "does not commute") +
                        (identity_ok ? "; F=1 acts as 1" : "; F=1 not identity") +
                        (idempotent ? "; 1_e idempotent" : "; 1_e not idempotent")));

    std::vector<engine::ClassFunction> idempotents{f, one};
    if (m % 2 == 0) {
      std::vector<int> evens;
      for (int g = 0; g < m; g += 2) evens.push_back(g);
      idempotents.push_back(engine::indicator(m, evens));
    }
    const engine::SbiCheck sbi = engine::sbi_exactness_check(mc, idempotents, f);
    int bad = 0;
    for (const auto& c : sbi.commutators) bad += c.square_zero ? 0 : 1;
    Params cparams = params;
    cparams.emplace_back("idempotents", str(static_cast<int>(idempotents.size())));
    r.add(make_case("commutator_square " + tag, "[e, 1_Gc]^2 = 0", cparams, "0 failures",
                    str(bad) + " failures"));
  }
  return r;
}

Report run_suite(const std::string& target, const SuiteConfig& config) {
  config.validate();
  static const std::map<std::string, Report (*)(const SuiteConfig&)> suites{
      {"hecke", hecke_suite},           {"rpoly", rpoly_suite},       {"hh0", hh0_suite},
      {"clozel", clozel_suite},         {"commutator", commutator_suite}, {"geomlemma", geomlemma_suite},
      {"torus", torus_suite},           {"engine", engine_suite}};
  if (target == "all") {
    Report all{"all", config.seed, {}};
    for (const auto& name : suite_names()) {
      Report part = suites.at(name)(config);
      for (auto& c : part.cases) c.id = name + "." + c.id;
      all.append(part);
    }
    return all;
  }
  auto it = suites.find(target);
  if (it == suites.end()) throw ConfigError("unknown verification target '" + target + "'");
  return it->second(config);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("range must look like a..b, got '" + text + "'");
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw ConfigError("bad range bound '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ConfigError("bad range bound '" + s + "'");
    }
  };
  const int a = number(text.substr(0, dots));
  const int b = number(text.substr(dots + 2));
  if (a > b) throw ConfigError("empty range '" + text + "'");
  return {a, b};
}

Table make_table(const std::string& target, int from, int to) {
  Table t;
  if (target == "rpoly") {
    t.title = "R_{1,(st)^n}";
    t.columns = {"n", "R", "closed_form"};
    for (int n = std::max(from, 0); n <= to; ++n)
      t.rows.push_back({str(n), render(r_polynomial(WeylWord{}, WeylWord::st_power(n))),
                        n >= 1 ? render(r_identity_closed_form(n)) : "1"});
  } else if (target == "commutator") {
    t.title = "1_Gc pind(L^n) - pind 1_Mc(L^n)";
    t.columns = {"n", "commutator"};
    for (int n = from; n <= to; ++n) t.rows.push_back({str(n), render(commutator_direct(n))});
  } else if (target == "pres") {
    t.title = "pres([E(n)])";
    t.columns = {"n", "pres"};
    for (int n = std::max(from, 0); n <= to; ++n) t.rows.push_back({str(n), render(pres_map(HH0Class::e_n(n)))});
  } else {
    throw ConfigError("unknown table '" + target + "' (expected rpoly, commutator or pres)");
  }
  return t;
}

}  // namespace compres::verify
