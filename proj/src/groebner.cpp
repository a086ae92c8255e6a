#include "rees/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>
#include <string>

#include "rees/error.hpp"

namespace rees::poly {

namespace {

std::vector<ModuleTerm> leads_of(const std::vector<ModuleElement>& basis, const ModuleOrder& order) {
  std::vector<ModuleTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term(order));
  return leads;
}

std::size_t find_divisor(const ModuleMonomial& mm, const std::vector<ModuleTerm>& leads) {
  for (std::size_t k = 0; k < leads.size(); ++k)
    if (leads[k].mm.pos == mm.pos && leads[k].mm.mono.divides(mm.mono)) return k;
  return leads.size();
}

ModuleElement divide(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                     const std::vector<ModuleTerm>& leads, const ModuleOrder& order,
                     const Deadline& deadline, std::vector<Polynomial>* quotients) {
  ModuleElement h = f;
  ModuleElement rem(f.rank());
  std::size_t steps = 0;
  while (!h.is_zero()) {
    if ((++steps & 127u) == 0) deadline.check();
    const ModuleTerm lt = h.leading_term(order);
    const std::size_t k = find_divisor(lt.mm, leads);
    if (k < leads.size()) {
      const Coeff c = lt.coeff / leads[k].coeff;
      const Monomial m = lt.mm.mono / leads[k].mm.mono;
      h.add_scaled(basis[k], -c, m);
      if (quotients != nullptr) (*quotients)[k] += Polynomial(c, m);
    } else {
      const Polynomial t(lt.coeff, lt.mm.mono);
      rem.coord(lt.mm.pos) += t;
      h.coord(lt.mm.pos) -= t;
    }
  }
  return rem;
}

void check_nonzero(const std::vector<ModuleElement>& basis) {
  for (const auto& g : basis)
    if (g.is_zero()) throw Error(ErrorCode::ZeroElement, "zero element in basis");
}

ModuleElement spoly_from_leads(const ModuleElement& f, const ModuleTerm& lf,
                               const ModuleElement& g, const ModuleTerm& lg) {
  const Monomial l = Monomial::lcm(lf.mm.mono, lg.mm.mono);
  ModuleElement s = f.mul_term(Coeff(1) / lf.coeff, l / lf.mm.mono);
  s.add_scaled(g, Coeff(-1) / lg.coeff, l / lg.mm.mono);
  return s;
}

struct Pair {
  ModuleMonomial lcm;
  std::size_t i, j;
};

class PairQueue {
 public:
  explicit PairQueue(const ModuleOrder& order)
      : heap_([&order](const Pair& a, const Pair& b) {
          const auto c = order.compare(a.lcm, b.lcm);
          if (c != 0) return c > 0;
          return std::tie(a.i, a.j) > std::tie(b.i, b.j);
        }) {}

  void push(Pair p) { heap_.push(std::move(p)); }
  bool empty() const { return heap_.empty(); }
  Pair pop() {
    Pair p = heap_.top();
    heap_.pop();
    return p;
  }

 private:
  std::priority_queue<Pair, std::vector<Pair>, std::function<bool(const Pair&, const Pair&)>> heap_;
};

OrderPtr rank_one(const TermOrder& order) { return make_position_order(order, 1); }

}  // namespace

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g,
                           const ModuleOrder& order) {
  if (f.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "s_polynomial ranks differ");
  const ModuleTerm lf = f.leading_term(order);
  const ModuleTerm lg = g.leading_term(order);
  if (lf.mm.pos != lg.mm.pos) return ModuleElement(f.rank());
  return spoly_from_leads(f, lf, g, lg);
}

Reduction reduce(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                 const ModuleOrder& order, const Deadline& deadline) {
  check_nonzero(basis);
  Reduction r;
  r.quotients.assign(basis.size(), Polynomial());
  r.remainder = divide(f, basis, leads_of(basis, order), order, deadline, &r.quotients);
  return r;
}

ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                          const ModuleOrder& order, const Deadline& deadline) {
  check_nonzero(basis);
  return divide(f, basis, leads_of(basis, order), order, deadline, nullptr);
}

std::vector<ModuleElement> buchberger(const std::vector<ModuleElement>& gens,
                                      const ModuleOrder& order, const Deadline& deadline) {
  std::vector<ModuleElement> g;
  std::vector<ModuleTerm> leads;
  PairQueue pairs(order);

  auto add = [&](ModuleElement e) {
    e = e.monic(order);
    const ModuleTerm lt = e.leading_term(order);
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i)
      if (leads[i].mm.pos == lt.mm.pos)
        pairs.push({{Monomial::lcm(leads[i].mm.mono, lt.mm.mono), lt.mm.pos}, i, k});
    g.push_back(std::move(e));
    leads.push_back(lt);
  };

  for (const auto& e : gens)
    if (!e.is_zero()) add(e);

  const bool ideal = order.rank() == 1;
  while (!pairs.empty()) {
    deadline.check();
    const Pair p = pairs.pop();
    if (ideal && leads[p.i].mm.mono.coprime(leads[p.j].mm.mono)) continue;
    const ModuleElement s = spoly_from_leads(g[p.i], leads[p.i], g[p.j], leads[p.j]);
    ModuleElement r = divide(s, g, leads, order, deadline, nullptr);
    if (!r.is_zero()) add(std::move(r));
  }
  return g;
}

bool is_groebner(const std::vector<ModuleElement>& basis, const ModuleOrder& order,
                 const Deadline& deadline) {
  check_nonzero(basis);
  const auto leads = leads_of(basis, order);
  const bool ideal = order.rank() == 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leads[i].mm.pos != leads[j].mm.pos) continue;
      if (ideal && leads[i].mm.mono.coprime(leads[j].mm.mono)) continue;
      deadline.check();
      const ModuleElement s = spoly_from_leads(basis[i], leads[i], basis[j], leads[j]);
      if (!divide(s, basis, leads, order, deadline, nullptr).is_zero()) return false;
    }
  }
  return true;
}

std::vector<ModuleElement> reduce_basis(const std::vector<ModuleElement>& gb,
                                        const ModuleOrder& order, bool check) {
  std::vector<ModuleElement> g;
  for (const auto& e : gb)
    if (!e.is_zero()) g.push_back(e.monic(order));
  if (check && !is_groebner(g, order))
    throw Error(ErrorCode::NotGroebner, "reduce_basis input is not a Groebner basis");

  auto leads = leads_of(g, order);
  std::vector<std::size_t> idx(g.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(leads[a].mm, leads[b].mm) < 0;
  });

  std::vector<ModuleElement> kept;
  std::vector<ModuleTerm> kept_leads;
  for (std::size_t k : idx) {
    if (find_divisor(leads[k].mm, kept_leads) < kept_leads.size()) continue;
    kept.push_back(g[k]);
    kept_leads.push_back(leads[k]);
  }

  std::vector<ModuleElement> out;
  out.reserve(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<ModuleElement> others;
    std::vector<ModuleTerm> other_leads;
    for (std::size_t o = 0; o < kept.size(); ++o) {
      if (o == k) continue;
      others.push_back(kept[o]);
      other_leads.push_back(kept_leads[o]);
    }
    const Polynomial lt(kept_leads[k].coeff, kept_leads[k].mm.mono);
    ModuleElement tail = kept[k];
    tail.coord(kept_leads[k].mm.pos) -= lt;
    ModuleElement e = divide(tail, others, other_leads, order, Deadline(), nullptr);
    e.coord(kept_leads[k].mm.pos) += lt;
    out.push_back(std::move(e));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_reduced_groebner(const std::vector<ModuleElement>& gb, const ModuleOrder& order) {
  if (!is_groebner(gb, order)) return false;
  std::vector<ModuleElement> normalized;
  for (const auto& e : gb) normalized.push_back(e.monic(order));
  const auto leads = leads_of(normalized, order);
  std::vector<std::size_t> idx(normalized.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(leads[a].mm, leads[b].mm) > 0;
  });
  std::vector<ModuleElement> sorted;
  for (std::size_t k : idx) sorted.push_back(normalized[k]);
  return sorted == reduce_basis(gb, order, false);
}

std::shared_ptr<const InducedOrder> induced_order(const std::vector<ModuleElement>& family,
                                                  const OrderPtr& base) {
  std::vector<ModuleMonomial> leads;
  leads.reserve(family.size());
  for (const auto& f : family) leads.push_back(f.leading_term(*base).mm);
  return std::make_shared<InducedOrder>(base, std::move(leads));
}

SyzygyBasis syzygy_basis(const std::vector<ModuleElement>& gb, const OrderPtr& order,
                         const Deadline& deadline) {
  check_nonzero(gb);
  SyzygyBasis out;
  out.order = induced_order(gb, order);
  const auto leads = leads_of(gb, *order);
  const std::size_t n = gb.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leads[i].mm.pos != leads[j].mm.pos) continue;
      deadline.check();
      const ModuleElement s = spoly_from_leads(gb[i], leads[i], gb[j], leads[j]);
      std::vector<Polynomial> quot(n);
      const ModuleElement rem = divide(s, gb, leads, *order, deadline, &quot);
      if (!rem.is_zero())
        throw Error(ErrorCode::NotGroebner, "S-pair (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") has nonzero remainder");
      const Monomial l = Monomial::lcm(leads[i].mm.mono, leads[j].mm.mono);
      ModuleElement syz(n);
      syz.coord(i) += Polynomial(Coeff(1) / leads[i].coeff, l / leads[i].mm.mono);
      syz.coord(j) -= Polynomial(Coeff(1) / leads[j].coeff, l / leads[j].mm.mono);
      for (std::size_t k = 0; k < n; ++k) syz.coord(k) -= quot[k];
      out.syzygies.push_back({i, j, std::move(syz)});
    }
  }
  return out;
}

bool module_contains(const std::vector<ModuleElement>& gens,
                     const std::vector<ModuleElement>& elems, const ModuleOrder& order,
                     const Deadline& deadline) {
  for (const auto& e : elems)
    if (e.rank() != order.rank()) throw Error(ErrorCode::RankMismatch, "module_contains rank");
  const auto gb = buchberger(gens, order, deadline);
  const auto leads = leads_of(gb, order);
  for (const auto& e : elems)
    if (!divide(e, gb, leads, order, deadline, nullptr).is_zero()) return false;
  return true;
}

bool module_equal(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                  const ModuleOrder& order, const Deadline& deadline) {
  for (const auto* side : {&a, &b})
    for (const auto& e : *side)
      if (e.rank() != order.rank()) throw Error(ErrorCode::RankMismatch, "module_equal rank");
  return module_contains(b, a, order, deadline) && module_contains(a, b, order, deadline);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  return s_polynomial(ModuleElement({f}), ModuleElement({g}), *rank_one(order))[0];
}

PolyReduction reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& order, const Deadline& deadline) {
  Reduction r = reduce(ModuleElement({f}), as_rank_one(basis), *rank_one(order), deadline);
  return {r.remainder[0], std::move(r.quotients)};
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                                   const Deadline& deadline) {
  return as_polynomials(buchberger(as_rank_one(gens), *rank_one(order), deadline));
}

bool is_groebner(const std::vector<Polynomial>& basis, const TermOrder& order,
                 const Deadline& deadline) {
  return is_groebner(as_rank_one(basis), *rank_one(order), deadline);
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& gb, const TermOrder& order,
                                     bool check) {
  return as_polynomials(reduce_basis(as_rank_one(gb), *rank_one(order), check));
}

bool is_reduced_groebner(const std::vector<Polynomial>& gb, const TermOrder& order) {
  return is_reduced_groebner(as_rank_one(gb), *rank_one(order));
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const TermOrder& order, const Deadline& deadline) {
  return module_equal(as_rank_one(a), as_rank_one(b), *rank_one(order), deadline);
}

}  // namespace rees::poly
