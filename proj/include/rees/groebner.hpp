#pragma once

#include <memory>
#include <vector>

#include "rees/deadline.hpp"
#include "rees/module_element.hpp"

namespace rees::poly {

struct Reduction {
  ModuleElement remainder;
  std::vector<Polynomial> quotients;  // one per basis element
};

// Zero when the leading monomials sit in different coordinates.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g,
                           const ModuleOrder& order);

// Full division. Among basis elements whose leading term divides the current
// term the lowest index is used.
Reduction reduce(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                 const ModuleOrder& order, const Deadline& deadline = {});
ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                          const ModuleOrder& order, const Deadline& deadline = {});

// S-pairs in ascending lcm order; the coprime criterion is used for rank one.
std::vector<ModuleElement> buchberger(const std::vector<ModuleElement>& gens,
                                      const ModuleOrder& order, const Deadline& deadline = {});

bool is_groebner(const std::vector<ModuleElement>& basis, const ModuleOrder& order,
                 const Deadline& deadline = {});

// Monic, minimal, tail reduced, sorted by descending leading monomial.
std::vector<ModuleElement> reduce_basis(const std::vector<ModuleElement>& gb,
                                        const ModuleOrder& order, bool check = true);

// True when gb is already a reduced basis up to the sign/scale of each element.
bool is_reduced_groebner(const std::vector<ModuleElement>& gb, const ModuleOrder& order);

struct Syzygy {
  std::size_t i = 0;
  std::size_t j = 0;
  ModuleElement element;
};

struct SyzygyBasis {
  std::shared_ptr<const InducedOrder> order;  // order induced by the input basis
  std::vector<Syzygy> syzygies;
};

// Schreyer syzygies s_{i,j} for every pair with leading terms in one coordinate.
SyzygyBasis syzygy_basis(const std::vector<ModuleElement>& gb, const OrderPtr& order,
                         const Deadline& deadline = {});

std::shared_ptr<const InducedOrder> induced_order(const std::vector<ModuleElement>& family,
                                                  const OrderPtr& base);

// Every element of elems reduces to zero modulo a Groebner basis of gens.
bool module_contains(const std::vector<ModuleElement>& gens,
                     const std::vector<ModuleElement>& elems, const ModuleOrder& order,
                     const Deadline& deadline = {});
bool module_equal(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                  const ModuleOrder& order, const Deadline& deadline = {});

// Ideal versions on plain polynomials.
struct PolyReduction {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);
PolyReduction reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& order, const Deadline& deadline = {});
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                                   const Deadline& deadline = {});
bool is_groebner(const std::vector<Polynomial>& basis, const TermOrder& order,
                 const Deadline& deadline = {});
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& gb, const TermOrder& order,
                                     bool check = true);
bool is_reduced_groebner(const std::vector<Polynomial>& gb, const TermOrder& order);
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const TermOrder& order, const Deadline& deadline = {});

}  // namespace rees::poly
