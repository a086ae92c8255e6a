#include "rees/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rees/error.hpp"

namespace rees::families {

namespace {

bool no_constant_terms(const std::vector<ModuleElement>& cols) {
  for (const auto& c : cols)
    for (const auto& p : c.coords())
      if (p.has_constant_term()) return false;
  return true;
}

bool all_zero(const std::vector<ModuleElement>& syz, const std::vector<ModuleElement>& gens) {
  return std::all_of(syz.begin(), syz.end(),
                     [&](const ModuleElement& s) { return s.apply(gens).is_zero(); });
}

bool unit_binomial(const Polynomial& f) {
  if (f.size() != 2) return false;
  const auto& t = f.terms();
  return abs(t[0].coeff) == 1 && abs(t[1].coeff) == 1 && t[0].coeff != t[1].coeff &&
         t[0].mono.coprime(t[1].mono);
}

// Append the n=q relation s_{q,q+2} to F1 and compare the syzygies of the
// enlarged family with F2 plus the relation that expresses s_{q,q+2}.
bool nq_candidate_redundant(const PairData& pd, const GeneratorFamily& f0,
                            const SyzygyFamilyOne& f1, const SyzygyFamilyTwo& f2,
                            const OrderChain& chain, const Deadline& deadline) {
  const Int q = pd.q();
  auto labels = f1.labels;
  labels.emplace_back(q, q + 2);
  std::sort(labels.begin(), labels.end());
  const std::size_t rank = labels.size();
  auto slot = [&](std::pair<Int, Int> l) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };

  std::vector<ModuleElement> family(rank);
  for (std::size_t i = 0; i < f1.labels.size(); ++i) family[slot(f1.labels[i])] = f1.elements[i];
  family[slot({q, q + 2})] = s_q_q2(pd, f0);

  std::vector<ModuleElement> expected;
  for (const auto& e : f2.elements) {
    ModuleElement x(rank);
    for (std::size_t i = 0; i < f1.labels.size(); ++i) x.coord(slot(f1.labels[i])) = e[i];
    expected.push_back(std::move(x));
  }
  const auto [P, Q] = redundancy_coefficients(pd);
  ModuleElement rel(rank);
  rel.coord(slot({q, q + 2})) = Polynomial::constant(1);
  rel.coord(slot({q, q + 1})) = -P;
  rel.coord(slot({q + 1, q + 2})) = -Q;
  expected.push_back(std::move(rel));
  if (!all_zero(expected, family)) return false;

  const auto basis = poly::syzygy_basis(family, chain.by_f0, deadline);
  std::vector<ModuleElement> syz;
  for (const auto& s : basis.syzygies) syz.push_back(s.element);
  return poly::module_equal(syz, expected, *basis.order, deadline);
}

Int binom2(Int n) { return n < 0 ? 0 : (n + 2) * (n + 1) / 2; }

Int dim_s(Int k, Int n) { return (k < 0 || n < 0) ? 0 : (k + 1) * binom2(n); }

Int rees_dim(Int d, Int u, Int k, Int n) {
  const Int deg = k + d * n;
  Int count = 0;
  for (Int i = 0; i <= deg; ++i) {
    const Int j = deg - i;
    bool in = false;
    for (Int a = 0; a <= n && !in; ++a)
      for (Int b = 0; a + b <= n && !in; ++b) {
        const Int c = n - a - b;
        in = d * a + (d - u) * b <= i && u * b + d * c <= j;
      }
    count += in;
  }
  return count;
}

}  // namespace

bool TheoremReport::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool TheoremReport::get(const std::string& name) const {
  for (const auto& [n, ok] : checks)
    if (n == name) return ok;
  throw std::out_of_range("no check named " + name);
}

void TheoremReport::set(std::string name, bool ok) {
  for (auto& [n, v] : checks)
    if (n == name) {
      v = ok;
      return;
    }
  checks.emplace_back(std::move(name), ok);
}

bool follows_leading_term_rule(const ModuleElement& syz, const std::vector<ModuleElement>& gens,
                               const poly::ModuleOrder& gens_order,
                               const poly::ModuleOrder& syz_order) {
  if (syz.is_zero()) return false;
  const auto lt = syz.leading_term(syz_order).mm;
  const std::size_t i = lt.pos;
  const auto li = gens.at(i).leading_term(gens_order).mm;
  for (std::size_t j = i + 1; j < gens.size(); ++j) {
    if (syz[j].is_zero()) continue;
    const auto lj = gens[j].leading_term(gens_order).mm;
    if (lj.pos != li.pos) continue;
    if (lt.mono * li.mono == poly::Monomial::lcm(li.mono, lj.mono)) return true;
  }
  return false;
}

std::vector<Int> bidegree_divisors(const PairData& pd, Int j) {
  const auto& s = pd.sers;
  const Int q = pd.q();
  auto bideg = [&](Int n) {
    return n == q + 2 ? Bidegree{0, pd.d()} : Bidegree{s.b(n), s.spread(n)};
  };
  std::vector<Int> out;
  for (Int k = 1; k <= q + 2; ++k)
    if (bideg(k).leq(bideg(j))) out.push_back(k);
  return out;
}

bool bidegree_divisors_bounded(const PairData& pd, Int j) {
  const Int mj = j <= pd.q() + 1 ? pd.sers.m_of(j) : j;
  for (Int k : bidegree_divisors(pd, j))
    if (k != j && k != mj) return false;
  return true;
}

bool euler_characteristic_check(const PairData& pd, Int k_max, Int n_max) {
  const Resolution r = resolution(pd);
  for (Int k = 0; k <= k_max; ++k)
    for (Int n = 0; n <= n_max; ++n) {
      Int chi = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        const Int sign = i % 2 == 0 ? 1 : -1;
        for (const auto& t : r.twists[i]) chi += sign * dim_s(k - t.t, n - t.x);
      }
      if (chi != rees_dim(pd.d(), pd.u(), k, n)) return false;
    }
  return true;
}

TheoremReport verify_theorems(const PairData& pd, const Deadline& deadline) {
  TheoremReport rep;
  const Int q = pd.q();
  const auto lex = base_order(pd);

  rep.set("euclid_invariants", euclid::invariant_violations(pd).empty());

  const GeneratorFamily f0 = f0_family(pd);
  const SyzygyFamilyOne f1 = f1_family(pd, f0);
  const SyzygyFamilyTwo f2 = f2_family(pd, f1);
  const OrderChain chain = order_chain(pd, f0, f1);
  const auto g0 = poly::as_rank_one(f0.elements);

  rep.set("family_sizes", f0.elements.size() == static_cast<std::size_t>(q + 2) &&
                              f1.elements.size() == static_cast<std::size_t>(2 * q) &&
                              f2.elements.size() == static_cast<std::size_t>(q - 1));

  bool bideg_ok = true;
  for (std::size_t i = 0; i < f0.elements.size(); ++i) {
    const auto b = f0.elements[i].bidegree(pd.d());
    bideg_ok = bideg_ok && b && *b == f0.bidegrees[i];
  }
  rep.set("f0_bidegrees", bideg_ok);
  rep.set("f0_unit_binomials",
          std::all_of(f0.elements.begin(), f0.elements.end(), unit_binomial));
  rep.set("f0_kernel_membership", verify_kernel_membership(f0.elements, pd.d(), pd.u()));
  rep.set("f0_is_reduced_gb", poly::is_groebner(f0.elements, lex, deadline) &&
                                  poly::is_reduced_groebner(f0.elements, lex));
  rep.set("f0_recursive_matches", f0_family_recursive(pd).elements == f0.elements);

  bool divisors_ok = true;
  for (Int j = 1; j <= q + 2; ++j) divisors_ok = divisors_ok && bidegree_divisors_bounded(pd, j);
  rep.set("bidegree_divisibility", divisors_ok);

  rep.set("f1_annihilates_f0", all_zero(f1.elements, g0));
  rep.set("f1_is_gb_under_induced", poly::is_groebner(f1.elements, *chain.by_f0, deadline));
  rep.set("f1_leading_terms",
          std::all_of(f1.elements.begin(), f1.elements.end(), [&](const ModuleElement& s) {
            return follows_leading_term_rule(s, g0, *chain.lex, *chain.by_f0);
          }));

  rep.set("f2_annihilates_f1", all_zero(f2.elements, f1.elements));
  rep.set("f2_is_gb", poly::is_groebner(f2.elements, *chain.by_f1, deadline));
  rep.set("f2_leading_terms",
          std::all_of(f2.elements.begin(), f2.elements.end(), [&](const ModuleElement& s) {
            return follows_leading_term_rule(s, f1.elements, *chain.by_f0, *chain.by_f1);
          }));
  rep.set("f2_linearly_independent",
          poly::syzygy_basis(f2.elements, chain.by_f1, deadline).syzygies.empty());

  const ModuleElement sq2 = s_q_q2(pd, f0);
  const auto [P, Q] = redundancy_coefficients(pd);
  const ModuleElement combo = f1.elements[f1.index_of(q, q + 1)].mul(P) +
                              f1.elements[f1.index_of(q + 1, q + 2)].mul(Q);
  rep.set("sq_q2_in_kx_span", sq2.apply(g0).is_zero() && combo == sq2);
  rep.set("nq_candidate_redundant", nq_candidate_redundant(pd, f0, f1, f2, chain, deadline));

  bool bihom = true;
  Resolution r;
  try {
    r = resolution(pd);
  } catch (const std::logic_error&) {
    bihom = false;
  }
  rep.set("resolution_bihomogeneous", bihom);
  if (bihom) {
    const auto rk = r.ranks();
    const auto uq = static_cast<std::size_t>(q);
    rep.set("resolution_ranks", rk == std::array<std::size_t, 4>{1, uq + 2, 2 * uq, uq - 1});
    rep.set("minimality", no_constant_terms(poly::as_rank_one(r.phi1)) &&
                              no_constant_terms(r.phi2) && no_constant_terms(r.phi3));
    rep.set("phi1_phi2_zero", all_zero(r.phi2, poly::as_rank_one(r.phi1)));
    rep.set("phi2_phi3_zero", all_zero(r.phi3, r.phi2));
  }
  return rep;
}

}  // namespace rees::families
