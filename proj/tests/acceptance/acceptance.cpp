// One PASS/FAIL line per acceptance criterion, with detail lines for anything
// that does not match. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rees/adjoint.hpp"
#include "rees/cli.hpp"
#include "rees/crosscheck.hpp"
#include "rees/families.hpp"
#include "rees/text.hpp"
#include "rees/verify.hpp"

using namespace rees;
using euclid::Int;
using euclid::PairData;
using poly::Bidegree;
using poly::ModuleElement;

namespace {

using Clock = std::chrono::steady_clock;

PairData pair(Int d, Int u) { return PairData::make(euclid::validate(d, u)); }

std::vector<std::pair<Int, Int>> coprime_pairs(Int dmax, Int umin = 1) {
  std::vector<std::pair<Int, Int>> out;
  for (Int d = 3; d <= dmax; ++d)
    for (Int u = umin; 2 * u < d; ++u)
      if (std::gcd(d, u) == 1) out.emplace_back(d, u);
  return out;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects detail lines for one criterion.
struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> notes;
  bool ok = true;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Runs fn(i) for i in [0, n) on a few threads; fn must only touch slot i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  const unsigned k = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string pair_text(Int d, Int u) {
  return "(" + std::to_string(d) + "," + std::to_string(u) + ")";
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "rees");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(int(argv.size()), argv.data(), out, err);
  return out.str();
}

std::vector<Bidegree> expand(const std::map<Bidegree, int>& m) {
  std::vector<Bidegree> out;
  for (const auto& [b, k] : m)
    for (int i = 0; i < k; ++i) out.push_back(b);
  return out;
}

std::string bideg_list(const std::vector<Bidegree>& v) {
  std::string s;
  for (const auto& b : v) s += "(" + std::to_string(b.t) + "," + std::to_string(b.x) + ")";
  return s;
}

struct LabelledLine {
  Int n, k;
  const char* text;
};

// Compares listed first syzygies against the computed family, label by label.
void compare_level_one(Criterion& c, const PairData& pd, const std::vector<LabelledLine>& golden) {
  const auto order = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  const auto f1 = families::f1_family(pd, f0);
  const auto labels = poly::default_labels(f0.elements.size());
  c.check(f1.elements.size() == golden.size(),
          "level 1 count " + std::to_string(f1.elements.size()) + " vs listed " +
              std::to_string(golden.size()));
  for (const auto& g : golden) {
    const std::string name = "s" + poly::pair_label(g.n, g.k);
    ModuleElement listed;
    try {
      listed = poly::parse_module_element(g.text, labels);
    } catch (const std::exception& e) {
      c.check(false, name + " listed text does not parse: " + e.what());
      continue;
    }
    std::size_t idx = 0;
    try {
      idx = f1.index_of(g.n, g.k);
    } catch (const Error&) {
      c.check(false, name + " has no computed counterpart");
      continue;
    }
    const auto& mine = f1.elements[idx];
    if (mine == listed) continue;
    const bool syz = listed.apply(f0.elements).is_zero();
    c.check(false, name + " listed " + g.text + " | computed " +
                       poly::to_string(mine, order, labels) +
                       (syz ? "" : " | listed element is not a syzygy of F0"));
  }
}

// Content comparison for listed second syzygies; labels of the elements are ignored.
void compare_level_two(Criterion& c, const PairData& pd, const std::vector<const char*>& golden) {
  const auto order = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  const auto f1 = families::f1_family(pd, f0);
  const auto f2 = families::f2_family(pd, f1);
  const auto labels = f1.text_labels();
  c.check(f2.elements.size() == golden.size(),
          "level 2 count " + std::to_string(f2.elements.size()) + " vs listed " +
              std::to_string(golden.size()));
  std::vector<bool> used(f2.elements.size(), false);
  for (const char* text : golden) {
    ModuleElement listed;
    try {
      listed = poly::parse_module_element(text, labels);
    } catch (const std::exception& e) {
      c.check(false, std::string("listed ") + text + " is not an element of S^" +
                         std::to_string(labels.size()) + " (" + e.what() + ")");
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < f2.elements.size() && !found; ++i)
      if (!used[i] && f2.elements[i] == listed) used[i] = found = true;
    if (!found)
      c.check(false, std::string("listed ") + text + " not among computed" +
                         (listed.apply(f1.elements).is_zero() ? "" : "; it is not a syzygy of F1"));
  }
  for (std::size_t i = 0; i < f2.elements.size(); ++i)
    if (!used[i])
      c.note("unmatched computed s" + f2.text_labels()[i] + " = " +
             poly::to_string(f2.elements[i], order, labels));
}

Criterion c1() {
  Criterion c{1, "golden (10,3) generators"};
  const auto t0 = Clock::now();
  int code = 0;
  const std::string out = run_cli({"generators", "10", "3", "--format", "text"}, code);
  const double secs = seconds_since(t0);
  const std::string golden =
      "T0^7*X2-T1^7*X1\n"
      "T0^4*X0*X2-T1^4*X1^2\n"
      "T0^3*X1-T1^3*X0\n"
      "T0^2*X1^4-T1^2*X0^3*X2\n"
      "T0*X1^7-T1*X0^5*X2^2\n"
      "T0*X0^2*X2-T1*X1^3\n"
      "X0^7*X2^3-X1^10\n";
  c.check(code == 0, "exit code " + std::to_string(code));
  c.check(out == golden, "output differs:\n" + out);
  c.check(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return c;
}

Criterion c2() {
  Criterion c{2, "golden (10,3) syzygies"};
  const auto t0 = Clock::now();
  const auto pd = pair(10, 3);
  compare_level_one(c, pd,
                    {{1, 2, "X0*e1-T0^3*e2-T1^4*X1*e3"},
                     {1, 3, "X1*e1-T0^4*X2*e3-T1^3*e2"},
                     {2, 3, "X1*e2-T0*X0*X2*e3-T1^3*e6"},
                     {2, 6, "X0*e2-T0^3*e6-T1*X1^2*e3"},
                     {3, 4, "X1^3*e3-T0*e4-T1^2*X0*e6"},
                     {3, 6, "X0^2*X2*e3-T0^2*X1*e6-T1*e4"},
                     {4, 5, "X1^3*e4-T0*e5-T1*X0^3*X2*e6"},
                     {4, 6, "X0^2*X2*e4-T0*X1^4*e6-T1*e5"},
                     {5, 6, "X0^2*X2*e5-X1^7*e6+T1*e7"},
                     {6, 7, "X0^5*X2^2*e6-T0*e7+X1^3*e5"}});
  compare_level_two(c, pd,
                    {"X1*e{1,2}-X0*e{1,3}+T0^3*e{2,3}-T1^3*e{2,6}",
                     "X0*e{2,3}-X1*e{2,6}+T0*e{3,6}-T1*e{3,4}",
                     "X0^2*X2*e{3,4}-X1^3*e{3,6}+T0*e{4,6}-T1*e{4,5}",
                     "X0^2*X2*e{4,5}-X1^3*e{4,6}+T0*e{5,6}-T1*e{5,7}"});
  const double secs = seconds_since(t0);
  c.check(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return c;
}

Criterion c3() {
  Criterion c{3, "golden (10,3) twists"};
  const auto t = families::betti_numbers(pair(10, 3));
  const std::vector<Bidegree> f1 = {{0, 10}, {1, 3}, {1, 7}, {2, 4}, {3, 1}, {4, 2}, {7, 1}};
  const std::vector<Bidegree> f2 = {{1, 10}, {1, 10}, {2, 7}, {2, 7}, {3, 4},
                                    {3, 4},  {4, 3},  {4, 3}, {7, 2}, {7, 2}};
  const std::vector<Bidegree> f3 = {{2, 10}, {3, 7}, {4, 4}, {7, 3}};
  c.check(expand(t[1]) == f1, "F1 " + bideg_list(expand(t[1])));
  c.check(expand(t[2]) == f2, "F2 " + bideg_list(expand(t[2])));
  c.check(expand(t[3]) == f3, "F3 " + bideg_list(expand(t[3])));
  return c;
}

Criterion c4() {
  Criterion c{4, "golden (14,3) sequences, generators, syzygies"};
  const auto pd = pair(14, 3);
  c.check(pd.euclid.a_seq == std::vector<Int>{11, 3, 2, 1, 0}, "a " + join(pd.euclid.a_seq));
  c.check(pd.euclid.q_seq == std::vector<Int>{3, 1, 2}, "q_m " + join(pd.euclid.q_seq));
  c.check(pd.sers.m_seq() == std::vector<Int>{1, 4, 5, 7, 8}, "m " + join(pd.sers.m_seq()));
  c.check(pd.euclid.p == 4 && pd.q() == 6, "p, q");
  const std::vector<std::pair<Int, Int>> bc = {{11, 3}, {8, 3}, {5, 3}, {3, 2},
                                               {2, 1},  {1, 1}, {1, 0}};
  for (Int n = 1; n <= 7; ++n)
    c.check(std::pair<Int, Int>{pd.sers.b(n), pd.sers.c(n)} == bc[n - 1],
            "SERS row " + std::to_string(n));
  const std::vector<euclid::Quad> quads = {{0, 1, 1, 0},  {-1, 1, 1, 0},  {-2, 1, 1, 0},
                                           {1, 0, -3, 1}, {-3, 1, 4, -1}, {-7, 2, 4, -1},
                                           {4, -1, -11, 3}};
  c.check(pd.sers.quads() == quads, "extended SERS differs");

  const auto order = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  const std::vector<std::string> gens = {
      "T0^11*X2-T1^11*X1",  "T0^8*X0*X2-T1^8*X1^2",   "T0^5*X0^2*X2-T1^5*X1^3",
      "T0^3*X1-T1^3*X0",    "T0^2*X0^3*X2-T1^2*X1^4", "T0*X0^7*X2^2-T1*X1^9",
      "T0*X1^5-T1*X0^4*X2", "X1^14-X0^11*X2^3"};
  c.check(f0.elements.size() == gens.size(), "generator count");
  for (std::size_t i = 0; i < std::min(gens.size(), f0.elements.size()); ++i) {
    const auto s = poly::to_string(f0.elements[i], order);
    c.check(s == gens[i], "F" + std::to_string(i + 1) + " " + s + " vs " + gens[i]);
  }
  const std::vector<Bidegree> bidegs = {{11, 1}, {8, 2}, {5, 3}, {3, 1},
                                        {2, 4},  {1, 9}, {1, 5}, {0, 14}};
  c.check(f0.bidegrees == bidegs, "bidegrees " + bideg_list(f0.bidegrees));

  compare_level_one(c, pd,
                    {{1, 2, "X0*e1-T0^3*e2-T1^8*X1*e4"},
                     {1, 4, "X1*e1-T0^8*X2*e4-T1^3*e2"},
                     {2, 3, "X0*e2-T0^3*e3-T1^5*X1^2*e4"},
                     {2, 4, "X1*e2-T0^5*X0*X2*e4-T1^3*e3"},
                     {3, 4, "X1*e3-T0^2*X0^2*X2*e4-T1^3*e5"},
                     {3, 5, "X0*e3-T0^3*e5-T1^2*X1^3*e4"},
                     {4, 5, "X0^3*X2*e4-T0*X1*e5-T1^2*e7"},
                     {4, 7, "X1^4*e4-T0^2*e7-T1*X0*e5"},
                     {5, 6, "X0^4*X2*e5-T0*e6-T1*X1^4*e7"},
                     {5, 7, "X1^5*e5-T0*X0^3*X2*e7-T1*e6"},
                     {6, 7, "X1^5*e6-X0^7*X2^2*e7-T1*e8"},
                     {7, 8, "X1^9*e7-T0*e8-X0^4*X2*e6"}});
  compare_level_two(c, pd,
                    {"X1*e{1,2}-X0*e{1,4}+T0^3*e{2,4}-T1^3*e{2,3}",
                     "X1*e{2,3}-X0*e{2,4}+T0^3*e{3,4}-T1^3*e{3,5}",
                     "X0*e{3,4}-X1*e{3,5}+T0^2*e{4,5}-T1^2*e{4,7}",
                     "X1^4*e{4,5}-X0^3*X2*e{4,7}+T0*e{5,7}-T1*e{5,6}",
                     "X1^5*e{5,6}-X0^4*X2*e{5,7}+T0*e{6,7}-T1*e{6,8}"});
  return c;
}

Criterion c5() {
  Criterion c{5, "oracle equivalence sweep, d <= 30"};
  const auto t0 = Clock::now();
  const auto pairs = coprime_pairs(30);
  // the definition gives 138 pairs; the quoted count of 87 matches no reading of it
  c.note("coprime pairs with u < d/2, d <= 30: " + std::to_string(pairs.size()));
  std::vector<std::vector<std::string>> failures(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [d, u] = pairs[i];
    try {
      const auto pd = pair(d, u);
      const auto f0 = families::f0_family(pd);
      const auto order = families::base_order(pd);
      if (!poly::is_reduced_groebner(f0.elements, order))
        failures[i].push_back("f0 not a reduced basis");
      for (const auto& [name, ok] : crosscheck::oracle_report(pd).checks)
        if (!ok) failures[i].push_back(name);
    } catch (const std::exception& e) {
      failures[i].push_back(e.what());
    }
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!failures[i].empty()) {
      ++bad;
      c.check(false, pair_text(pairs[i].first, pairs[i].second) + " " + join(failures[i]));
    }
  const double secs = seconds_since(t0);
  c.note(std::to_string(pairs.size() - bad) + "/" + std::to_string(pairs.size()) +
         " pairs clean in " + std::to_string(secs) + " s");
  c.check(secs < 600, "runtime over 10 minutes");
  return c;
}

Criterion c6() {
  Criterion c{6, "resolution sanity sweep, d <= 40"};
  const auto pairs = coprime_pairs(40);
  std::vector<std::vector<std::string>> failures(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [d, u] = pairs[i];
    auto& f = failures[i];
    try {
      const auto pd = pair(d, u);
      const auto r = families::resolution(pd);
      const std::size_t q = std::size_t(pd.q());
      if (r.ranks() != std::array<std::size_t, 4>{1, q + 2, 2 * q, q - 1}) f.push_back("ranks");
      const auto g0 = poly::as_rank_one(r.phi1);
      for (const auto& col : r.phi2)
        if (!col.apply(r.phi1).is_zero()) {
          f.push_back("Phi1 Phi2 != 0");
          break;
        }
      for (const auto& col : r.phi3)
        if (!col.apply(r.phi2).is_zero()) {
          f.push_back("Phi2 Phi3 != 0");
          break;
        }
      bool constant = false;
      for (const auto& p : r.phi1) constant = constant || p.has_constant_term();
      for (const auto* m : {&r.phi2, &r.phi3})
        for (const auto& col : *m)
          for (const auto& p : col.coords()) constant = constant || p.has_constant_term();
      if (constant) f.push_back("constant entry");
      if (!families::euler_characteristic_check(pd, 2 * d, 4)) f.push_back("euler");
    } catch (const std::exception& e) {
      f.push_back(e.what());
    }
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!failures[i].empty()) {
      ++bad;
      c.check(false, pair_text(pairs[i].first, pairs[i].second) + " " + join(failures[i]));
    }
  c.note(std::to_string(pairs.size() - bad) + "/" + std::to_string(pairs.size()) + " pairs clean");
  return c;
}

Criterion c7() {
  Criterion c{7, "adjoint numbers"};
  const auto p10 = pair(10, 3), p14 = pair(14, 3);
  const auto n10 = adjoint::nu(p10), n14 = adjoint::nu(p14);
  const auto show = [](const adjoint::NuResult& n) {
    return std::to_string(n.value) + " = " + std::to_string(n.breakdown[0] + n.breakdown[1]) +
           "+" + std::to_string(n.breakdown[2]) + "+" + std::to_string(n.breakdown[3]);
  };
  // listed breakdowns: alpha total, beta first branch, beta second branch
  c.check(n10.value == 17 && n10.breakdown[0] + n10.breakdown[1] == 1 &&
              n10.breakdown[2] == 4 && n10.breakdown[3] == 12,
          "nu(10,3) expected 17 = 1+4+12, computed " + show(n10) + ", condition-map rank " +
              std::to_string(adjoint::adjoint_condition_rank(p10, 8)));
  c.check(n14.value == 33 && n14.breakdown[0] + n14.breakdown[1] == 4 &&
              n14.breakdown[2] == 6 && n14.breakdown[3] == 23,
          "nu(14,3) expected 33 = 4+6+23, computed " + show(n14) + ", condition-map rank " +
              std::to_string(adjoint::adjoint_condition_rank(p14, 12)));
  for (Int l = 12; l <= 20; ++l) {
    const Int adj = adjoint::dim_adjoint_pencils(p14, l);
    const Int ker = adjoint::dim_ker_degree_one(p14, l);
    c.check(adj == l * l + 3 * l - 154, "dim Adj(14,3) at " + std::to_string(l) + " = " +
                                            std::to_string(adj));
    c.check(ker == l * l - 11 * l + 34, "dim ker(14,3) at " + std::to_string(l) + " = " +
                                            std::to_string(ker));
  }
  std::vector<std::string> off;
  for (Int l = 5; l <= 15; ++l) {
    const Int ker = adjoint::dim_ker_degree_one(p10, l);
    if (ker != l * l - 5 * l + 10)
      off.push_back(std::to_string(l) + ":" + std::to_string(ker) + "/" +
                    std::to_string(l * l - 5 * l + 10));
  }
  c.check(off.empty(), "dim ker(10,3) vs l^2-5l+10 at l:computed/expected " + join(off));
  return c;
}

Criterion c8() {
  Criterion c{8, "adjoint properties sweep, u > 1, d <= 60"};
  const auto pairs = coprime_pairs(60, 2);
  std::vector<std::vector<std::string>> failures(pairs.size());
  std::vector<Int> values(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [d, u] = pairs[i];
    auto& f = failures[i];
    try {
      const auto n = adjoint::nu(pair(d, u));
      values[i] = n.value;
      if (n.value < 1 || n.value > d * d - 6 * d + 6) f.push_back("nu " + std::to_string(n.value));
      if (!n.disjoint) f.push_back("branches overlap");
      if (n.by_j_values != n.value) f.push_back("j-value count");
    } catch (const std::exception& e) {
      f.push_back(e.what());
    }
    // at most one representation below each threshold
    for (const auto [a, b, bound] : {std::array<Int, 3>{u, d, (d - 1) * (u - 1)},
                                     std::array<Int, 3>{d, d - u, (d - 1) * (d - u - 1)}}) {
      std::vector<int> reps(std::size_t(bound) + 1, 0);
      for (Int x = 0; a * x <= bound; ++x)
        for (Int y = 0; a * x + b * y <= bound; ++y) ++reps[std::size_t(a * x + b * y)];
      if (std::any_of(reps.begin(), reps.end(), [](int r) { return r > 1; }))
        f.push_back("representation not unique");
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i)
    c.check(failures[i].empty(),
            pair_text(pairs[i].first, pairs[i].second) + " " + join(failures[i]));

  std::size_t sylvester = 0;
  for (Int a = 1; a <= 50; ++a)
    for (Int b = 1; b <= 50; ++b)
      if (std::gcd(a, b) == 1) {
        ++sylvester;
        c.check(adjoint::sylvester_gap_count(a, b) == adjoint::sylvester_gap_count_brute(a, b),
                "sylvester " + pair_text(a, b));
      }
  for (Int k = 3; k <= 12; ++k) {
    const Int d = 2 * k - 1;
    const Int v = adjoint::nu(pair(d, 2)).value;
    c.check(v >= (k - 2) * (k - 3) / 2, "u = 2 family at d = " + std::to_string(d) + ": nu " +
                                            std::to_string(v));
  }
  c.note(std::to_string(pairs.size()) + " pairs, " + std::to_string(sylvester) +
         " Sylvester pairs");
  return c;
}

Criterion c9() {
  Criterion c{9, "linear-algebra cross-check"};
  std::mt19937_64 rng(20260101);
  std::size_t zeroed = 0, total = 0;
  for (const auto [d, u] : {std::pair<Int, Int>{5, 2}, {7, 2}, {7, 3}, {10, 3}}) {
    const auto pd = pair(d, u);
    for (const Int ell : {d - 2, d}) {
      const Int qd = adjoint::quotient_dimension(pd, ell);
      const Int rk = adjoint::adjoint_condition_rank(pd, ell);
      c.check(qd == rk, pair_text(d, u) + " ell " + std::to_string(ell) + ": " +
                            std::to_string(qd) + " vs rank " + std::to_string(rk));
    }
    std::size_t disagree = 0;
    for (int i = 0; i < 1000; ++i) {
      const Int ell = i % 2 ? d : d - 2;
      const auto [a, b] = adjoint::random_pencil(pd, ell, rng);
      const bool claimed = adjoint::pencil_in_adjoints(pd, a, b);
      const auto comps = adjoint::pencil_components(pd, a, b);
      const bool direct = adjoint::is_adjoint(pd, comps[0]) && adjoint::is_adjoint(pd, comps[1]);
      disagree += claimed != direct;
      zeroed += direct;
      ++total;
    }
    c.check(disagree == 0, pair_text(d, u) + " " + std::to_string(disagree) + " disagreements");
  }
  c.note(std::to_string(zeroed) + "/" + std::to_string(total) + " random pencils were adjoint");
  return c;
}

Criterion c10() {
  Criterion c{10, "property suites"};
  std::size_t recursive = 0;
  for (const auto [d, u] : coprime_pairs(40)) {
    const auto pd = pair(d, u);
    ++recursive;
    c.check(families::f0_family_recursive(pd) == families::f0_family(pd),
            "recursion differs at " + pair_text(d, u));
  }
  std::size_t inv_bad = 0, inv_total = 0;
  std::string first_bad;
  for (const auto [d, u] : coprime_pairs(60)) {
    ++inv_total;
    const auto v = euclid::invariant_violations(pair(d, u));
    if (!v.empty()) {
      if (!inv_bad) first_bad = pair_text(d, u) + ": " + v.front();
      ++inv_bad;
    }
  }
  c.check(inv_bad == 0, std::to_string(inv_bad) + "/" + std::to_string(inv_total) +
                            " pairs violate an invariant, first " + first_bad);

  const auto pairs = coprime_pairs(40);
  std::vector<std::string> bad(pairs.size());
  std::vector<std::size_t> count(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto pd = pair(pairs[i].first, pairs[i].second);
    const auto f0 = families::f0_family(pd);
    const auto f1 = families::f1_family(pd, f0);
    const auto f2 = families::f2_family(pd, f1);
    const auto chain = families::order_chain(pd, f0, f1);
    const auto g0 = poly::as_rank_one(f0.elements);
    for (const auto& s : f1.elements) {
      ++count[i];
      if (!families::follows_leading_term_rule(s, g0, *chain.lex, *chain.by_f0)) bad[i] = "F1";
    }
    for (const auto& s : f2.elements) {
      ++count[i];
      if (!families::follows_leading_term_rule(s, f1.elements, *chain.by_f0, *chain.by_f1))
        bad[i] += "F2";
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i)
    c.check(bad[i].empty(), "leading-term rule fails at " +
                                pair_text(pairs[i].first, pairs[i].second) + " " + bad[i]);
  c.note(std::to_string(recursive) + " recursion pairs, " +
         std::to_string(std::accumulate(count.begin(), count.end(), std::size_t{0})) +
         " syzygies checked for the leading-term rule");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Criterion()>> all = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto t0 = Clock::now();
    Criterion c{int(i + 1), "criterion " + std::to_string(i + 1)};
    try {
      c = all[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds_since(t0) << " s)\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed ? 1 : 0;
}
