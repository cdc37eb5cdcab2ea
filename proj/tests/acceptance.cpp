// Acceptance run: one line per criterion, exact comparisons, pinned limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "compres/engine.hpp"
#include "compres/suites.hpp"

using namespace compres;
using namespace compres::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Report()> run;
};

struct Outcome {
  bool pass = false;
  double seconds = 0;
};

Outcome evaluate(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  std::string error;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = error.empty() && !r.cases.empty() && r.pass() && secs < c.limit_seconds;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << r.cases.size()
            << " cases, " << timing << "]\n";
  if (!error.empty()) std::cout << "    error: " << error << "\n";
  for (const auto& k : r.cases)
    if (!k.pass) std::cout << "    failed " << k.id << ": expected " << k.expected << ", got " << k.actual << "\n";
  std::cout.flush();
  return {ok, secs};
}

SuiteConfig base() {
  SuiteConfig c;
  c.nmax = 20;
  c.lmax = 14;
  c.oracle_cutoff = 8;
  c.random_pairs = 500;
  c.random_length = 8;
  c.seed = 20240917;
  c.ranks = {1, 2};
  c.window = 2;
  c.engine_cutoff = 4;
  c.specs = {engine::ground_field(),    engine::dual_numbers(),    engine::group_algebra(1),
             engine::group_algebra(2),  engine::group_algebra(3),  engine::group_algebra(4),
             engine::upper_triangular_2x2()};
  return c;
}

// Requires every case in `r` to pass and `count` cases to have been produced.
Report expect_count(Report r, std::size_t count) {
  if (r.cases.size() != count)
    r.add({"case_count", "coverage", {}, std::to_string(count), std::to_string(r.cases.size()), false});
  return r;
}

}  // namespace

int main() {
  const SuiteConfig cfg = base();
  const std::vector<Criterion> criteria{
      {1, "compact restriction plus opind chi_M pres is the identity on the HH0 basis, n <= 20", 5.0,
       [&] { return expect_count(clozel_suite(cfg), static_cast<std::size_t>(cfg.nmax) + 3); }},
      {2, "Iwahori commutator closed form for -5 <= n <= 20 and R_1,(st)^n for 1 <= n <= 20", 30.0,
       [&] { return commutator_suite(cfg); }},
      {3, "R-polynomials up to length 14: extraction equals recursion, Bruhat vanishing, degree law", 30.0,
       [&] { return rpoly_suite(cfg); }},
      {4, "HH0 trace property on 500 seeded pairs and oracle agreement up to length 8", 60.0,
       [&] { return hh0_suite(cfg); }},
      {5, "pres pind = pres opind = L^n + L^-n for |n| <= 20", 10.0, [&] { return geomlemma_suite(cfg); }},
      {6, "torus square for r in {1, 2}, window 2, all p <= r", 60.0,
       [&] { return expect_count(torus_suite(cfg), 2 * (2 + 3)); }},
      {7, "HH/HC dimensions, SBI exactness and class action at N = 4", 120.0,
       [&] { return engine_suite(cfg); }},
  };

  bool all = true;
  bool six = false;
  bool seven = false;
  for (const auto& c : criteria) {
    const Outcome o = evaluate(c);
    all = all && o.pass;
    if (c.number == 6) six = o.pass;
    if (c.number == 7) seven = o.pass;
  }
  const bool eight = six && seven;
  std::cout << (eight ? "PASS" : "FAIL")
            << " criterion 8: higher homology covered only through the torus and finite-dimensional instances"
               " (criteria 6 and 7); the p-adic statements are out of scope\n";
  all = all && eight;
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
  return all ? 0 : 1;
}
