#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rees/euclid.hpp"
#include "rees/groebner.hpp"

namespace rees::families {

using euclid::Int;
using euclid::PairData;
using poly::Bidegree;
using poly::ModuleElement;
using poly::Polynomial;

struct GeneratorFamily {
  std::vector<Polynomial> elements;  // F_1 .. F_{q+2}
  std::vector<Bidegree> bidegrees;

  friend bool operator==(const GeneratorFamily&, const GeneratorFamily&) = default;
};

struct SyzygyFamilyOne {
  std::vector<std::pair<Int, Int>> labels;  // (n,k), lexicographic
  std::vector<ModuleElement> elements;      // rank q+2
  std::vector<Bidegree> twists;

  std::size_t index_of(Int n, Int k) const;
  std::vector<std::string> text_labels() const;  // "{n,k}"

  friend bool operator==(const SyzygyFamilyOne&, const SyzygyFamilyOne&) = default;
};

struct SyzygyFamilyTwo {
  struct Label {
    Int n, rho, ell;
    friend bool operator==(const Label&, const Label&) = default;
  };
  std::vector<Label> labels;
  std::vector<ModuleElement> elements;  // rank 2q, basis ordered as SyzygyFamilyOne
  std::vector<Bidegree> twists;

  std::vector<std::string> text_labels() const;  // "{n,rho,ell}"

  friend bool operator==(const SyzygyFamilyTwo&, const SyzygyFamilyTwo&) = default;
};

struct Resolution {
  std::array<std::vector<Bidegree>, 4> twists;
  std::vector<Polynomial> phi1;     // 1 x (q+2)
  std::vector<ModuleElement> phi2;  // columns of the (q+2) x 2q matrix
  std::vector<ModuleElement> phi3;  // columns of the 2q x (q-1) matrix

  std::array<std::size_t, 4> ranks() const;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

using BettiTable = std::array<std::map<Bidegree, int>, 4>;

// The lex order for this pair; throws SigmaQZero if sigma_q = 0.
poly::TermOrder base_order(const PairData& pd);

GeneratorFamily f0_family(const PairData& pd);
GeneratorFamily f0_family_recursive(const PairData& pd);
SyzygyFamilyOne f1_family(const PairData& pd, const GeneratorFamily& f0);
SyzygyFamilyTwo f2_family(const PairData& pd, const SyzygyFamilyOne& f1);

Resolution resolution(const PairData& pd);
BettiTable betti_numbers(const PairData& pd);

// Each element vanishes under X0 -> Z T0^d, X1 -> Z T0^(d-u) T1^u, X2 -> Z T1^d.
bool verify_kernel_membership(const std::vector<Polynomial>& f0, Int d, Int u);
Polynomial kernel_image(const Polynomial& f, Int d, Int u);

// s_{q,q+2} = F_{q+2} e_q - F_q e_{q+2}, excluded from the first syzygy family.
ModuleElement s_q_q2(const PairData& pd, const GeneratorFamily& f0);

// P, Q in K[X] with s_{q,q+2} = P s_{q,q+1} + Q s_{q+1,q+2}.
std::pair<Polynomial, Polynomial> redundancy_coefficients(const PairData& pd);

// The lex order and the orders induced by F0 and by F1 on top of it.
struct OrderChain {
  poly::OrderPtr lex;                                  // rank 1
  std::shared_ptr<const poly::InducedOrder> by_f0;     // rank q+2
  std::shared_ptr<const poly::InducedOrder> by_f1;     // rank 2q
};
OrderChain order_chain(const PairData& pd, const GeneratorFamily& f0, const SyzygyFamilyOne& f1);

}  // namespace rees::families
