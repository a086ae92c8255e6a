#include "rees/oracle.hpp"

#include <string>

#include "rees/error.hpp"

namespace rees::oracle {

using poly::Monomial;
using poly::TermOrder;

namespace {

std::uint32_t ex(euclid::Int v) { return static_cast<std::uint32_t>(v); }

std::vector<Polynomial> without_z(const std::vector<Polynomial>& gb) {
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (!g.mentions(poly::Z)) out.push_back(g);
  return out;
}

// Exact division by a monomial-coefficient polynomial with one term.
Polynomial divide_by_term(const Polynomial& p, const Monomial& m) {
  std::vector<poly::Term> terms;
  for (const auto& t : p.terms()) {
    if (!m.divides(t.mono)) throw std::logic_error("quotient generator not divisible");
    terms.push_back({t.coeff, t.mono / m});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

TermOrder kernel_order(const PairData& pd) {
  const auto sq = pd.sers.sigma(pd.q());
  if (sq == 0) throw Error(ErrorCode::SigmaQZero, "sigma_q = 0");
  return TermOrder::for_sigma_q(sq);
}

std::vector<Polynomial> monomial_map_kernel(euclid::Int d, euclid::Int u, const TermOrder& base,
                                            const Deadline& deadline,
                                            std::vector<Polynomial>* raw) {
  if (d < 1 || u < 0 || u > d) throw Error(ErrorCode::OutOfRange, "need 0 <= u <= d");
  const TermOrder elim = TermOrder::elimination_z(base);
  const std::vector<Polynomial> gens = {
      Polynomial(poly::mono(0, 0, 1, 0, 0)) - Polynomial(poly::mono(ex(d), 0, 0, 0, 0, 1)),
      Polynomial(poly::mono(0, 0, 0, 1, 0)) - Polynomial(poly::mono(ex(d - u), ex(u), 0, 0, 0, 1)),
      Polynomial(poly::mono(0, 0, 0, 0, 1)) - Polynomial(poly::mono(0, ex(d), 0, 0, 0, 1)),
  };
  auto gb = poly::reduce_basis(poly::buchberger(gens, elim, deadline), elim, false);
  auto out = without_z(gb);
  if (raw) *raw = std::move(gb);
  return out;
}

KernelResult kernel_by_elimination(const PairData& pd, const Deadline& deadline) {
  KernelResult r;
  r.reduced_gb = monomial_map_kernel(pd.d(), pd.u(), kernel_order(pd), deadline, &r.raw_gb);
  return r;
}

std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       const TermOrder& order, const Deadline& deadline) {
  if (f.size() != 1) throw std::invalid_argument("ideal_quotient expects a monomial divisor");
  const TermOrder elim = TermOrder::elimination_z(order);
  const Polynomial z(poly::Monomial::var(poly::Z));
  std::vector<Polynomial> mixed;
  for (const auto& g : gens) mixed.push_back(g * z);
  mixed.push_back(f - f * z);
  const auto gb = poly::reduce_basis(poly::buchberger(mixed, elim, deadline), elim, false);
  const Monomial fm = f.terms().front().mono;
  std::vector<Polynomial> out;
  for (const auto& g : without_z(gb)) out.push_back(divide_by_term(g, fm));
  return poly::reduce_basis(poly::buchberger(out, order, deadline), order, false);
}

KernelResult kernel_by_saturation(const PairData& pd, const Deadline& deadline) {
  const auto d = pd.d(), u = pd.u();
  const TermOrder order = kernel_order(pd);
  std::vector<Polynomial> current = poly::reduce_basis(
      poly::buchberger(
          {Polynomial(poly::mono(ex(d - u), 0, 0, 0, 1)) -
               Polynomial(poly::mono(0, ex(d - u), 0, 1, 0)),
           Polynomial(poly::mono(ex(u), 0, 0, 1, 0)) - Polynomial(poly::mono(0, ex(u), 1, 0, 0))},
          order, deadline),
      order, false);
  const Polynomial t0t1(poly::mono(1, 1, 0, 0, 0));
  const auto cap = static_cast<std::size_t>(d * d);
  KernelResult r;
  for (std::size_t step = 1; step <= cap; ++step) {
    std::vector<Polynomial> next = ideal_quotient(current, t0t1, order, deadline);
    r.colon_steps = step;
    if (next == current) {
      r.reduced_gb = next;
      r.raw_gb = std::move(next);
      return r;
    }
    current = std::move(next);
  }
  throw Error(ErrorCode::NonTermination,
              "saturation did not stabilize within " + std::to_string(cap) + " colon steps");
}

std::vector<ModuleElement> syzygies_from_scratch(const std::vector<ModuleElement>& family,
                                                 const poly::OrderPtr& order,
                                                 const Deadline& deadline) {
  if (!poly::is_groebner(family, *order, deadline))
    throw Error(ErrorCode::NotGroebner, "family is not a Groebner basis under the given order");
  std::vector<ModuleElement> out;
  for (auto& s : poly::syzygy_basis(family, order, deadline).syzygies)
    out.push_back(std::move(s.element));
  return out;
}

}  // namespace rees::oracle
