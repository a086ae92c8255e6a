#include "rees/crosscheck.hpp"

#include <algorithm>

#include "rees/oracle.hpp"

namespace rees::crosscheck {

using poly::ModuleElement;
using poly::Polynomial;

namespace {

bool unit_binomial(const Polynomial& f) {
  if (f.size() != 2) return false;
  const auto& t = f.terms();
  return abs(t[0].coeff) == 1 && abs(t[1].coeff) == 1;
}

Polynomial exchange(const Polynomial& f) {
  using poly::Var;
  std::array<Polynomial, poly::kVarCount> img;
  auto v = [](Var x) { return Polynomial(poly::Monomial::var(x)); };
  img[poly::T0] = v(poly::T1);
  img[poly::T1] = v(poly::T0);
  img[poly::X0] = v(poly::X2);
  img[poly::X1] = v(poly::X1);
  img[poly::X2] = v(poly::X0);
  img[poly::Z] = v(poly::Z);
  return f.substitute(img);
}

}  // namespace

families::TheoremReport oracle_report(const PairData& pd, const Deadline& deadline) {
  families::TheoremReport rep;
  const auto lex = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  const auto f1 = families::f1_family(pd, f0);
  const auto f2 = families::f2_family(pd, f1);
  const auto chain = families::order_chain(pd, f0, f1);
  const auto g0 = poly::as_rank_one(f0.elements);

  const auto elim = oracle::kernel_by_elimination(pd, deadline);
  const auto f0_reduced = poly::reduce_basis(f0.elements, lex);
  rep.set("elimination_equals_f0", poly::reduce_basis(elim.reduced_gb, lex) == f0_reduced);
  rep.set("kernel_binomials",
          std::all_of(elim.reduced_gb.begin(), elim.reduced_gb.end(), unit_binomial));
  const auto sat = oracle::kernel_by_saturation(pd, deadline);
  rep.set("saturation_equals_elimination",
          poly::reduce_basis(sat.reduced_gb, lex) == poly::reduce_basis(elim.reduced_gb, lex));

  const auto s0 = oracle::syzygies_from_scratch(g0, chain.lex, deadline);
  rep.set("syz_f0_equals_f1", poly::module_equal(s0, f1.elements, *chain.by_f0, deadline));
  rep.set("syz_f0_leading_terms",
          std::all_of(s0.begin(), s0.end(), [&](const ModuleElement& s) {
            return families::follows_leading_term_rule(s, g0, *chain.lex, *chain.by_f0);
          }));

  const auto s1 = oracle::syzygies_from_scratch(f1.elements, chain.by_f0, deadline);
  rep.set("syz_f1_equals_f2", poly::module_equal(s1, f2.elements, *chain.by_f1, deadline));
  rep.set("syz_f1_leading_terms",
          std::all_of(s1.begin(), s1.end(), [&](const ModuleElement& s) {
            return families::follows_leading_term_rule(s, f1.elements, *chain.by_f0,
                                                       *chain.by_f1);
          }));

  rep.set("syz_f2_zero", oracle::syzygies_from_scratch(f2.elements, chain.by_f1, deadline).empty());
  return rep;
}

bool swap_symmetric(Int d, Int u, const Deadline& deadline) {
  const auto pd = PairData::make(euclid::validate(d, u, true));
  const auto lex = families::base_order(pd);
  std::vector<Polynomial> swapped;
  for (const auto& f : families::f0_family(pd).elements) swapped.push_back(exchange(f));
  const auto kernel = oracle::monomial_map_kernel(d, u, lex, deadline);
  return poly::ideal_equal(kernel, swapped, lex, deadline);
}

}  // namespace rees::crosscheck
