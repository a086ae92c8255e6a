#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rees/euclid.hpp"
#include "rees/polynomial.hpp"

// Adjoint curves of the monomial curve X0^(d-u) X2^u = X1^d. Everything here
// needs u > 1 except dim_ker_degree_one.
namespace rees::adjoint {

using euclid::Int;
using euclid::PairData;
using poly::Polynomial;

using Exponent = std::array<Int, 3>;  // powers of X0, X1, X2
using ExponentSet = std::set<Exponent>;

struct SingularPoint {
  std::array<Int, 3> point;  // projective coordinates
  Int multiplicity;
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

// (1:0:0) with multiplicity u and (0:0:1) with multiplicity d-u. Multiplicities
// are re-derived as the lowest degree of the curve equation in each chart.
std::vector<SingularPoint> singular_points(const PairData& pd);

// Number of j >= 0 not of the form a x + b y with x, y >= 0.
Int sylvester_gap_count(Int a, Int b);
Int sylvester_gap_count_brute(Int a, Int b);

// alpha with |alpha| = ell failing one of the two branch-order thresholds.
ExponentSet forbidden_exponents(const PairData& pd, Int ell);

// (ell+2)(ell+1) - (d-1)(d-2) for ell >= d-2, 0 below.
Int dim_adjoint_pencils(const PairData& pd, Int ell);
// 2 (C(ell+2,2) - |forbidden_exponents|), 0 below d-2.
Int dim_adjoint_pencils_enumerated(const PairData& pd, Int ell);

// C(ell - |s_q - t_q| + 2, 2) + C(ell - |s_{q+1} - t_{q+1}| + 2, 2).
Int dim_ker_degree_one(const PairData& pd, Int ell);

// Solutions of the two inequality systems at one ell, one set per branch.
struct ConditionSets {
  Int ell = 0;
  ExponentSet alpha_first, alpha_second;  // |alpha| = ell - |s_q - t_q|
  ExponentSet beta_first, beta_second;    // |beta| = ell - |s_{q+1} - t_{q+1}|

  ExponentSet alpha() const;  // union
  ExponentSet beta() const;
  bool disjoint() const;
};
ConditionSets condition_sets(const PairData& pd, Int ell);

struct NuResult {
  Int value = 0;
  std::array<Int, 4> breakdown{};  // alpha first/second, beta first/second
  bool disjoint = true;            // no triple satisfies both branches
  std::vector<Int> checked_ells;   // d-2, d-1, d, d+5
  Int by_j_values = 0;             // same count via representable values
  friend bool operator==(const NuResult&, const NuResult&) = default;
};

// Counted at ell = d-2 and compared at the other ells; StabilityViolation if
// the count moves.
NuResult nu(const PairData& pd);

// Order in t of form(1, t^u, t^d) and form(t^d, t^(d-u), 1).
std::array<Int, 2> branch_orders(const PairData& pd, const Polynomial& form);

struct AdjointTest {
  bool by_substitution = false;
  bool by_coefficients = false;
};
AdjointTest adjoint_tests(const PairData& pd, const Polynomial& form);
// Throws std::logic_error when the two tests disagree.
bool is_adjoint(const PairData& pd, const Polynomial& form);

// The pencil A F_q + B F_{q+1} split as T0 C0 + T1 C1.
std::array<Polynomial, 2> pencil_components(const PairData& pd, const Polynomial& a,
                                            const Polynomial& b);

struct PencilTest {
  bool by_conditions = false;  // coefficients of A, B vanish on the condition sets
  bool by_components = false;  // C0 and C1 are both adjoint
};
// A or B may be zero; ell is taken from whichever is nonzero.
PencilTest pencil_tests(const PairData& pd, const Polynomial& a, const Polynomial& b);
bool pencil_in_adjoints(const PairData& pd, const Polynomial& a, const Polynomial& b);

// nu(pd).value after checking ell >= d-2.
Int quotient_dimension(const PairData& pd, Int ell);

// Rank of the map (A, B) -> coefficients of C0, C1 on forbidden exponents.
// Its kernel is the adjoint part of ker(Phi0)_(1,ell), so the rank is the
// quotient dimension computed without the inequality systems.
Int adjoint_condition_rank(const PairData& pd, Int ell);

// Pencil with random coefficients in {-2..2}; about half the draws zero out
// every coefficient on the condition sets.
std::array<Polynomial, 2> random_pencil(const PairData& pd, Int ell, std::mt19937_64& rng);

struct AdjointReport {
  Int ell = 0;
  Int dim_adj = 0;
  Int dim_ker_1 = 0;
  NuResult nu;
  ExponentSet forbidden_alpha;
  ExponentSet forbidden_beta;
  Int bound = 0;  // d^2 - 6d + 6
  std::vector<SingularPoint> singular;
  bool below_threshold = false;
  friend bool operator==(const AdjointReport&, const AdjointReport&) = default;
};
AdjointReport adjoint_report(const PairData& pd, Int ell);

// All monomials X^alpha of total degree n, exponents as triples.
std::vector<Exponent> exponents_of_degree(Int n);

}  // namespace rees::adjoint
