#include "rees/adjoint.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rees/error.hpp"
#include "rees/families.hpp"

namespace rees::adjoint {

using poly::Coeff;
using poly::Monomial;

namespace {

void require_u(const PairData& pd) {
  if (pd.u() <= 1)
    throw Error(ErrorCode::RequiresUGreaterOne,
                "adjoint computations need u > 1, got u = " + std::to_string(pd.u()));
}

Int binom2(Int n) { return n < 0 ? 0 : (n + 2) * (n + 1) / 2; }

Exponent exponent_of(const Monomial& m) { return {m[poly::X0], m[poly::X1], m[poly::X2]}; }

Monomial monomial_of(const Exponent& e) {
  return poly::mono(0, 0, static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]),
                    static_cast<std::uint32_t>(e[2]));
}

// Degree of a nonzero form in X alone; NotHomogeneous otherwise.
Int x_degree(const Polynomial& f) {
  Int deg = -1;  // zero form
  for (const auto& t : f.terms()) {
    const Monomial& m = t.mono;
    if (m[poly::T0] || m[poly::T1] || m[poly::Z])
      throw Error(ErrorCode::NotHomogeneous, "form must involve X0, X1, X2 only");
    const auto k = static_cast<Int>(m.x_degree());
    if (deg >= 0 && k != deg) throw Error(ErrorCode::NotHomogeneous, "form is not homogeneous");
    deg = k;
  }
  return deg;
}

Int thresh0(const PairData& pd) { return (pd.d() - 1) * (pd.u() - 1); }
Int thresh1(const PairData& pd) { return (pd.d() - 1) * (pd.d() - pd.u() - 1); }

Int rank_of(std::vector<std::vector<mpq_class>> m) {
  Int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[row][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// F_n = T0 P - T1 Q for n = q, q+1 (both have T-degree one).
std::array<Polynomial, 2> split_generator(const Polynomial& f) {
  std::array<Polynomial, 2> out;
  for (const auto& t : f.terms()) {
    const bool first = t.mono[poly::T0] == 1;
    const Monomial x = t.mono / (first ? Monomial::var(poly::T0) : Monomial::var(poly::T1));
    out[first ? 0 : 1] += Polynomial(first ? t.coeff : Coeff(-t.coeff), x);
  }
  return out;
}

struct PencilBasis {
  std::array<Polynomial, 2> fq, fq1;  // (P, Q) parts
};

PencilBasis pencil_basis(const PairData& pd) {
  const auto f0 = families::f0_family(pd);
  const auto q = static_cast<std::size_t>(pd.q());
  return {split_generator(f0.elements[q - 1]), split_generator(f0.elements[q])};
}

Int count_j_values(Int a, Int b, Int bound, Int total) {
  std::set<Int> js;
  for (Int x = 0; x <= total && a * x < bound; ++x)
    for (Int y = 0; x + y <= total && a * x + b * y < bound; ++y) js.insert(a * x + b * y);
  return static_cast<Int>(js.size());
}

}  // namespace

std::vector<Exponent> exponents_of_degree(Int n) {
  std::vector<Exponent> out;
  for (Int a = n; a >= 0; --a)
    for (Int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  return out;
}

std::vector<SingularPoint> singular_points(const PairData& pd) {
  require_u(pd);
  const Int d = pd.d(), u = pd.u();
  const Polynomial f = Polynomial(poly::mono(0, 0, static_cast<std::uint32_t>(d - u), 0,
                                             static_cast<std::uint32_t>(u))) -
                       Polynomial(poly::mono(0, 0, 0, static_cast<std::uint32_t>(d), 0));
  // Off the coordinate points X1 != 0 and d/dX1 = -d X1^(d-1) does not vanish.
  std::vector<SingularPoint> out;
  const std::array<poly::Var, 3> xs = {poly::X0, poly::X1, poly::X2};
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<Polynomial, poly::kVarCount> img;
    for (std::size_t v = 0; v < poly::kVarCount; ++v)
      img[v] = Polynomial(Monomial::var(static_cast<poly::Var>(v)));
    img[xs[i]] = Polynomial::constant(1);
    const Polynomial chart = f.substitute(img);
    Int low = std::numeric_limits<Int>::max();
    for (const auto& t : chart.terms()) low = std::min<Int>(low, static_cast<Int>(t.mono.x_degree()));
    if (low > 1) {
      std::array<Int, 3> p{0, 0, 0};
      p[i] = 1;
      out.push_back({p, low});
    }
  }
  return out;
}

Int sylvester_gap_count(Int a, Int b) {
  if (a <= 0 || b <= 0) throw Error(ErrorCode::OutOfRange, "need positive a, b");
  if (std::gcd(a, b) != 1) throw Error(ErrorCode::NonCoprime, "gcd(a,b) != 1");
  return (a - 1) * (b - 1) / 2;
}

Int sylvester_gap_count_brute(Int a, Int b) {
  sylvester_gap_count(a, b);
  const Int top = (a - 1) * (b - 1);
  std::vector<bool> hit(static_cast<std::size_t>(top + 1), false);
  for (Int x = 0; a * x <= top; ++x)
    for (Int y = 0; a * x + b * y <= top; ++y) hit[static_cast<std::size_t>(a * x + b * y)] = true;
  Int gaps = 0;
  for (Int j = 0; j < top; ++j) gaps += !hit[static_cast<std::size_t>(j)];
  if (!hit[static_cast<std::size_t>(top)]) throw std::logic_error("(a-1)(b-1) not representable");
  return gaps;
}

ExponentSet forbidden_exponents(const PairData& pd, Int ell) {
  require_u(pd);
  const Int d = pd.d(), u = pd.u();
  ExponentSet out;
  for (const auto& a : exponents_of_degree(ell))
    if (u * a[1] + d * a[2] < thresh0(pd) || d * a[0] + (d - u) * a[1] < thresh1(pd))
      out.insert(a);
  return out;
}

Int dim_adjoint_pencils(const PairData& pd, Int ell) {
  require_u(pd);
  const Int d = pd.d();
  if (ell < d - 2) return 0;
  return (ell + 2) * (ell + 1) - (d - 1) * (d - 2);
}

Int dim_adjoint_pencils_enumerated(const PairData& pd, Int ell) {
  require_u(pd);
  if (ell < pd.d() - 2) return 0;
  return 2 * (binom2(ell) - static_cast<Int>(forbidden_exponents(pd, ell).size()));
}

Int dim_ker_degree_one(const PairData& pd, Int ell) {
  const auto& s = pd.sers;
  auto c2 = [](Int a) { return a < 2 ? 0 : a * (a - 1) / 2; };
  return c2(ell - s.spread(pd.q()) + 2) + c2(ell - s.spread(pd.q() + 1) + 2);
}

ExponentSet ConditionSets::alpha() const {
  ExponentSet out = alpha_first;
  out.insert(alpha_second.begin(), alpha_second.end());
  return out;
}

ExponentSet ConditionSets::beta() const {
  ExponentSet out = beta_first;
  out.insert(beta_second.begin(), beta_second.end());
  return out;
}

bool ConditionSets::disjoint() const {
  auto meets = [](const ExponentSet& a, const ExponentSet& b) {
    return std::any_of(a.begin(), a.end(), [&](const Exponent& e) { return b.count(e) > 0; });
  };
  return !meets(alpha_first, alpha_second) && !meets(beta_first, beta_second);
}

ConditionSets condition_sets(const PairData& pd, Int ell) {
  require_u(pd);
  const auto& s = pd.sers;
  const Int d = pd.d(), u = pd.u(), q = pd.q();
  const Int sq = s.spread(q), sq1 = s.spread(q + 1);
  const Int r1a = thresh0(pd) - d * std::abs(s.tau(q));
  const Int r2a = thresh1(pd) - (d - u) * sq;
  const Int r1b = thresh0(pd) - u * sq1;
  const Int r2b = thresh1(pd) - d * std::abs(s.sigma(q + 1));
  ConditionSets cs;
  cs.ell = ell;
  if (ell - sq >= 0)
    for (const auto& a : exponents_of_degree(ell - sq)) {
      if (u * a[1] + d * a[2] < r1a) cs.alpha_first.insert(a);
      if (d * a[0] + (d - u) * a[1] < r2a) cs.alpha_second.insert(a);
    }
  if (ell - sq1 >= 0)
    for (const auto& b : exponents_of_degree(ell - sq1)) {
      if (u * b[1] + d * b[2] < r1b) cs.beta_first.insert(b);
      if (d * b[0] + (d - u) * b[1] < r2b) cs.beta_second.insert(b);
    }
  return cs;
}

NuResult nu(const PairData& pd) {
  require_u(pd);
  const Int d = pd.d(), u = pd.u(), q = pd.q();
  const auto& s = pd.sers;
  NuResult r;
  bool first = true;
  for (Int ell : {d - 2, d - 1, d, d + 5}) {
    const ConditionSets cs = condition_sets(pd, ell);
    const Int count = static_cast<Int>(cs.alpha().size() + cs.beta().size());
    r.disjoint = r.disjoint && cs.disjoint();
    r.checked_ells.push_back(ell);
    if (first) {
      r.value = count;
      r.breakdown = {static_cast<Int>(cs.alpha_first.size()),
                     static_cast<Int>(cs.alpha_second.size()),
                     static_cast<Int>(cs.beta_first.size()),
                     static_cast<Int>(cs.beta_second.size())};
      first = false;
    } else if (count != r.value) {
      throw Error(ErrorCode::StabilityViolation,
                  "nu changes from " + std::to_string(r.value) + " to " + std::to_string(count) +
                      " at ell = " + std::to_string(ell));
    }
  }
  const Int la = d - 2 - s.spread(q), lb = d - 2 - s.spread(q + 1);
  r.by_j_values =
      count_j_values(u, d, thresh0(pd) - d * std::abs(s.tau(q)), la) +
      count_j_values(d, d - u, thresh1(pd) - (d - u) * s.spread(q), la) +
      count_j_values(u, d, thresh0(pd) - u * s.spread(q + 1), lb) +
      count_j_values(d, d - u, thresh1(pd) - d * std::abs(s.sigma(q + 1)), lb);
  return r;
}

std::array<Int, 2> branch_orders(const PairData& pd, const Polynomial& form) {
  x_degree(form);
  const Int d = pd.d(), u = pd.u();
  std::array<Int, 2> out{std::numeric_limits<Int>::max(), std::numeric_limits<Int>::max()};
  const Polynomial t = Polynomial(Monomial::var(poly::T0));
  auto order = [&](const Polynomial& x0, const Polynomial& x1, const Polynomial& x2) {
    std::array<Polynomial, poly::kVarCount> img;
    img[poly::T0] = t;
    img[poly::T1] = Polynomial(Monomial::var(poly::T1));
    img[poly::Z] = Polynomial(Monomial::var(poly::Z));
    img[poly::X0] = x0;
    img[poly::X1] = x1;
    img[poly::X2] = x2;
    const Polynomial g = form.substitute(img);
    Int low = std::numeric_limits<Int>::max();
    for (const auto& term : g.terms()) low = std::min<Int>(low, term.mono[poly::T0]);
    return low;
  };
  auto tp = [&](Int k) { return poly::pow(t, static_cast<std::uint32_t>(k)); };
  const Polynomial one = Polynomial::constant(1);
  out[0] = order(one, tp(u), tp(d));
  out[1] = order(tp(d), tp(d - u), one);
  return out;
}

AdjointTest adjoint_tests(const PairData& pd, const Polynomial& form) {
  require_u(pd);
  const Int deg = x_degree(form);
  AdjointTest r;
  const auto o = branch_orders(pd, form);
  r.by_substitution = o[0] >= thresh0(pd) && o[1] >= thresh1(pd);
  if (form.is_zero()) {
    r.by_coefficients = true;
    return r;
  }
  const ExponentSet bad = forbidden_exponents(pd, deg);
  r.by_coefficients = std::none_of(form.terms().begin(), form.terms().end(), [&](const auto& t) {
    return bad.count(exponent_of(t.mono)) > 0;
  });
  return r;
}

bool is_adjoint(const PairData& pd, const Polynomial& form) {
  const AdjointTest r = adjoint_tests(pd, form);
  if (r.by_substitution != r.by_coefficients)
    throw std::logic_error("adjoint tests disagree");
  return r.by_substitution;
}

std::array<Polynomial, 2> pencil_components(const PairData& pd, const Polynomial& a,
                                            const Polynomial& b) {
  const PencilBasis pb = pencil_basis(pd);
  return {a * pb.fq[0] + b * pb.fq1[0], -(a * pb.fq[1] + b * pb.fq1[1])};
}

PencilTest pencil_tests(const PairData& pd, const Polynomial& a, const Polynomial& b) {
  require_u(pd);
  const auto& s = pd.sers;
  const Int q = pd.q();
  const Int da = x_degree(a), db = x_degree(b);
  PencilTest r;
  if (da < 0 && db < 0) {
    r.by_conditions = r.by_components = true;
    return r;
  }
  const Int ell = da >= 0 ? da + s.spread(q) : db + s.spread(q + 1);
  if (db >= 0 && db + s.spread(q + 1) != ell)
    throw Error(ErrorCode::DegreeMismatch, "deg A and deg B give different ell");
  if (ell < pd.d() - 2)
    throw Error(ErrorCode::DegreeMismatch, "pencil degree " + std::to_string(ell) + " < d-2");
  const ConditionSets cs = condition_sets(pd, ell);
  const ExponentSet al = cs.alpha(), be = cs.beta();
  auto clean = [](const Polynomial& p, const ExponentSet& bad) {
    return std::none_of(p.terms().begin(), p.terms().end(),
                        [&](const auto& t) { return bad.count(exponent_of(t.mono)) > 0; });
  };
  r.by_conditions = clean(a, al) && clean(b, be);
  const auto c = pencil_components(pd, a, b);
  r.by_components = is_adjoint(pd, c[0]) && is_adjoint(pd, c[1]);
  return r;
}

bool pencil_in_adjoints(const PairData& pd, const Polynomial& a, const Polynomial& b) {
  const PencilTest r = pencil_tests(pd, a, b);
  if (r.by_conditions != r.by_components)
    throw std::logic_error("pencil conditions disagree with the component test");
  return r.by_conditions;
}

Int quotient_dimension(const PairData& pd, Int ell) {
  require_u(pd);
  if (ell < pd.d() - 2)
    throw Error(ErrorCode::BelowAdjointThreshold, "quotient dimension needs ell >= d-2");
  return nu(pd).value;
}

Int adjoint_condition_rank(const PairData& pd, Int ell) {
  require_u(pd);
  const auto& s = pd.sers;
  const Int q = pd.q();
  const PencilBasis pb = pencil_basis(pd);
  const ExponentSet bad = forbidden_exponents(pd, ell);
  std::vector<Exponent> rows(bad.begin(), bad.end());
  auto row_of = [&](const Exponent& e) -> std::ptrdiff_t {
    const auto it = std::lower_bound(rows.begin(), rows.end(), e);
    return (it != rows.end() && *it == e) ? it - rows.begin() : -1;
  };
  const std::size_t nrows = 2 * rows.size();

  std::vector<std::vector<mpq_class>> cols;
  auto add_columns = [&](const std::array<Polynomial, 2>& gen, Int deg) {
    if (deg < 0) return;
    for (const auto& e : exponents_of_degree(deg)) {
      std::vector<mpq_class> col(nrows);
      const Polynomial x(monomial_of(e));
      for (std::size_t k = 0; k < 2; ++k) {
        const Polynomial image = x * gen[k];
        for (const auto& t : image.terms()) {
          const auto r = row_of(exponent_of(t.mono));
          if (r >= 0) col[k * rows.size() + static_cast<std::size_t>(r)] += t.coeff;
        }
      }
      cols.push_back(std::move(col));
    }
  };
  add_columns(pb.fq, ell - s.spread(q));
  add_columns(pb.fq1, ell - s.spread(q + 1));
  return rank_of(std::move(cols));
}

std::array<Polynomial, 2> random_pencil(const PairData& pd, Int ell, std::mt19937_64& rng) {
  const auto& s = pd.sers;
  const Int q = pd.q();
  const ConditionSets cs = condition_sets(pd, ell);
  const ExponentSet al = cs.alpha(), be = cs.beta();
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::bernoulli_distribution clean(0.5);
  const bool zero_out = clean(rng);
  auto draw = [&](Int deg, const ExponentSet& bad) {
    Polynomial p;
    if (deg < 0) return p;
    for (const auto& e : exponents_of_degree(deg)) {
      const int c = coeff(rng);
      if (c == 0 || (zero_out && bad.count(e))) continue;
      p += Polynomial(Coeff(c), monomial_of(e));
    }
    return p;
  };
  return {draw(ell - s.spread(q), al), draw(ell - s.spread(q + 1), be)};
}

AdjointReport adjoint_report(const PairData& pd, Int ell) {
  require_u(pd);
  AdjointReport r;
  r.ell = ell;
  r.below_threshold = ell < pd.d() - 2;
  r.dim_adj = dim_adjoint_pencils(pd, ell);
  r.dim_ker_1 = dim_ker_degree_one(pd, ell);
  r.nu = nu(pd);
  const ConditionSets cs = condition_sets(pd, std::max(ell, pd.d() - 2));
  r.forbidden_alpha = cs.alpha();
  r.forbidden_beta = cs.beta();
  r.bound = pd.d() * pd.d() - 6 * pd.d() + 6;
  r.singular = singular_points(pd);
  return r;
}

}  // namespace rees::adjoint
