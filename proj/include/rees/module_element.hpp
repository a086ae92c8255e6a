#pragma once

#include <vector>

#include "rees/polynomial.hpp"

namespace rees::poly {

struct ModuleTerm {
  Coeff coeff;
  ModuleMonomial mm;
};

// Element of the free module S^rank, one coordinate polynomial per basis vector.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::size_t rank) : coords_(rank) {}
  explicit ModuleElement(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}

  static ModuleElement basis(std::size_t rank, std::size_t i,
                             const Polynomial& c = Polynomial::constant(1));

  std::size_t rank() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_.at(i); }
  Polynomial& coord(std::size_t i) { return coords_.at(i); }
  const std::vector<Polynomial>& coords() const { return coords_; }

  bool is_zero() const;
  std::size_t term_count() const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement operator-() const;
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

  ModuleElement mul_term(const Coeff& c, const Monomial& m) const;
  ModuleElement mul(const Polynomial& p) const;
  void add_scaled(const ModuleElement& g, const Coeff& c, const Monomial& m);

  ModuleTerm leading_term(const ModuleOrder& order) const;
  ModuleElement monic(const ModuleOrder& order) const;

  // sum_i coord_i * family_i
  Polynomial apply(const std::vector<Polynomial>& family) const;
  ModuleElement apply(const std::vector<ModuleElement>& family) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  void check_same_rank(const ModuleElement& o) const;

  std::vector<Polynomial> coords_;
};

std::vector<ModuleElement> as_rank_one(const std::vector<Polynomial>& polys);
std::vector<Polynomial> as_polynomials(const std::vector<ModuleElement>& elems);

}  // namespace rees::poly
