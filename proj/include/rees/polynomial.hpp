#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/order.hpp"

namespace rees::poly {

using Coeff = mpq_class;

struct Term {
  Coeff coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

// Sparse polynomial in T0,T1,X0,X1,X2,Z. Terms are kept sorted by the
// canonical monomial key, which makes equality structural; leading terms and
// printing take a TermOrder.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Coeff& c, const Monomial& m);
  explicit Polynomial(const Monomial& m) : Polynomial(Coeff(1), m) {}

  static Polynomial constant(const Coeff& c) { return Polynomial(c, Monomial()); }
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  // *this += c * m * g
  void add_scaled(const Polynomial& g, const Coeff& c, const Monomial& m);

  const Term& leading_term(const TermOrder& order) const;
  std::vector<Term> sorted(const TermOrder& order) const;
  Polynomial monic(const TermOrder& order) const;

  // Ring map sending variable v to images[v].
  Polynomial substitute(const std::array<Polynomial, kVarCount>& images) const;

  bool has_constant_term() const;
  bool mentions(Var v) const;
  // Common bidegree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<Bidegree> bidegree(std::int64_t d) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t k);

}  // namespace rees::poly
