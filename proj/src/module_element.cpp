#include "rees/module_element.hpp"

#include <algorithm>
#include <string>

#include "rees/error.hpp"

namespace rees::poly {

ModuleElement ModuleElement::basis(std::size_t rank, std::size_t i, const Polynomial& c) {
  ModuleElement e(rank);
  e.coords_.at(i) = c;
  return e;
}

bool ModuleElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t ModuleElement::term_count() const {
  std::size_t n = 0;
  for (const auto& p : coords_) n += p.size();
  return n;
}

void ModuleElement::check_same_rank(const ModuleElement& o) const {
  if (o.rank() != rank())
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(rank()) + " and " + std::to_string(o.rank()));
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  check_same_rank(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  check_same_rank(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& p : r.coords_) p = -p;
  return r;
}

ModuleElement ModuleElement::mul_term(const Coeff& c, const Monomial& m) const {
  ModuleElement r(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i].mul_term(c, m);
  return r;
}

ModuleElement ModuleElement::mul(const Polynomial& p) const {
  ModuleElement r(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] * p;
  return r;
}

void ModuleElement::add_scaled(const ModuleElement& g, const Coeff& c, const Monomial& m) {
  check_same_rank(g);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i].add_scaled(g.coords_[i], c, m);
}

ModuleTerm ModuleElement::leading_term(const ModuleOrder& order) const {
  const Term* best = nullptr;
  std::uint32_t best_pos = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    for (const auto& t : coords_[i].terms()) {
      const auto pos = static_cast<std::uint32_t>(i);
      if (best == nullptr || order.compare({t.mono, pos}, {best->mono, best_pos}) > 0) {
        best = &t;
        best_pos = pos;
      }
    }
  }
  if (best == nullptr) throw Error(ErrorCode::ZeroElement, "leading term of zero module element");
  return {best->coeff, {best->mono, best_pos}};
}

ModuleElement ModuleElement::monic(const ModuleOrder& order) const {
  if (is_zero()) return *this;
  const Coeff lc = leading_term(order).coeff;
  return mul_term(Coeff(1) / lc, Monomial());
}

Polynomial ModuleElement::apply(const std::vector<Polynomial>& family) const {
  if (family.size() != rank())
    throw Error(ErrorCode::RankMismatch, "family size differs from rank");
  Polynomial r;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& t : coords_[i].terms()) r.add_scaled(family[i], t.coeff, t.mono);
  return r;
}

ModuleElement ModuleElement::apply(const std::vector<ModuleElement>& family) const {
  if (family.size() != rank())
    throw Error(ErrorCode::RankMismatch, "family size differs from rank");
  if (family.empty()) return ModuleElement();
  ModuleElement r(family.front().rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& t : coords_[i].terms()) r.add_scaled(family[i], t.coeff, t.mono);
  return r;
}

std::vector<ModuleElement> as_rank_one(const std::vector<Polynomial>& polys) {
  std::vector<ModuleElement> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.emplace_back(std::vector<Polynomial>{p});
  return out;
}

std::vector<Polynomial> as_polynomials(const std::vector<ModuleElement>& elems) {
  std::vector<Polynomial> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    if (e.rank() != 1) throw Error(ErrorCode::RankMismatch, "expected rank-one elements");
    out.push_back(e[0]);
  }
  return out;
}

}  // namespace rees::poly
