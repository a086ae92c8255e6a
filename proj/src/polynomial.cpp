#include "rees/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "rees/error.hpp"

namespace rees::poly {

namespace {

// Merge b*(scale) into a, both sorted by monomial key.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Coeff& c,
                        const Monomial& m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = b[j].mono * m;
    if (i == a.size() || bm < a[i].mono) {
      out.push_back({b[j].coeff * c, bm});
      ++j;
    } else if (a[i].mono < bm) {
      out.push_back(a[i++]);
    } else {
      Coeff s = a[i].coeff + b[j].coeff * c;
      if (s != 0) out.push_back({std::move(s), bm});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Coeff& c, const Monomial& m) {
  if (c != 0) terms_.push_back({c, m});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!o.is_zero()) terms_ = merge(terms_, o.terms_, Coeff(1), Monomial());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!o.is_zero()) terms_ = merge(terms_, o.terms_, Coeff(-1), Monomial());
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& t : b.terms_) r.add_scaled(a, t.coeff, t.mono);
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  Polynomial r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

void Polynomial::add_scaled(const Polynomial& g, const Coeff& c, const Monomial& m) {
  if (c == 0 || g.is_zero()) return;
  terms_ = merge(terms_, g.terms_, c, m);
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted(const TermOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  const Coeff lc = leading_term(order).coeff;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff /= lc;
  return r;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, kVarCount>& images) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial img = constant(t.coeff);
    for (std::size_t v = 0; v < kVarCount; ++v)
      if (t.mono[v] != 0) img = img * pow(images[v], t.mono[v]);
    out += img;
  }
  return out;
}

bool Polynomial::has_constant_term() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_one(); });
}

bool Polynomial::mentions(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
}

std::optional<Bidegree> Polynomial::bidegree(std::int64_t d) const {
  if (terms_.empty()) return std::nullopt;
  const Bidegree b = terms_.front().mono.bidegree(d);
  for (const auto& t : terms_)
    if (t.mono.bidegree(d) != b) return std::nullopt;
  return b;
}

Polynomial pow(const Polynomial& p, std::uint32_t k) {
  Polynomial r = Polynomial::constant(1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

}  // namespace rees::poly
