#pragma once

#include <vector>

#include "rees/deadline.hpp"
#include "rees/euclid.hpp"
#include "rees/groebner.hpp"

// Independent ground truth. Nothing here uses the closed-form families.
namespace rees::oracle {

using euclid::PairData;
using poly::ModuleElement;
using poly::Polynomial;

struct KernelResult {
  std::vector<Polynomial> reduced_gb;  // in T,X only, reduced under the lex order
  std::vector<Polynomial> raw_gb;      // full basis, may mention Z
  std::size_t colon_steps = 0;         // saturation only
};

// Lex order on T,X chosen by the sign of sigma_q.
poly::TermOrder kernel_order(const PairData& pd);

// Kernel of X0 -> T0^d, X1 -> T0^(d-u) T1^u, X2 -> T1^d for any 0 <= u <= d,
// reduced under base. raw receives the full basis with Z when given.
std::vector<Polynomial> monomial_map_kernel(euclid::Int d, euclid::Int u,
                                            const poly::TermOrder& base,
                                            const Deadline& deadline = {},
                                            std::vector<Polynomial>* raw = nullptr);

KernelResult kernel_by_elimination(const PairData& pd, const Deadline& deadline = {});

// <gens> : f, computed as (<gens> intersect <f>) / f through an auxiliary variable.
std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       const poly::TermOrder& order,
                                       const Deadline& deadline = {});

// The two linear-in-T generators saturated by T0*T1, iterating the colon until
// it stabilizes. Gives up with NonTermination after d^2 steps.
KernelResult kernel_by_saturation(const PairData& pd, const Deadline& deadline = {});

// Groebner basis of syz(family) under the order induced by the family.
std::vector<ModuleElement> syzygies_from_scratch(const std::vector<ModuleElement>& family,
                                                 const poly::OrderPtr& order,
                                                 const Deadline& deadline = {});

}  // namespace rees::oracle
