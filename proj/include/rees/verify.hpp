#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rees/deadline.hpp"
#include "rees/families.hpp"

namespace rees::families {

struct TheoremReport {
  std::vector<std::pair<std::string, bool>> checks;  // in evaluation order

  bool all() const;
  bool get(const std::string& name) const;  // throws if the name is unknown
  void set(std::string name, bool ok);

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

// Internal consistency of the closed forms: Groebner and syzygy properties,
// minimality, compositions, the n=q candidates. No elimination oracle here.
TheoremReport verify_theorems(const PairData& pd, const Deadline& deadline = {});

// Alternating sum of the twisted free modules against the monomial count of
// I^n in T-degree k + d n, for k <= k_max and n <= n_max.
bool euler_characteristic_check(const PairData& pd, Int k_max, Int n_max);

// The leading term of a syzygy of gens is (lcm / lm(g_i)) e_i for some partner
// j > i whose leading term sits in the same coordinate.
bool follows_leading_term_rule(const ModuleElement& syz, const std::vector<ModuleElement>& gens,
                               const poly::ModuleOrder& gens_order,
                               const poly::ModuleOrder& syz_order);

// All k in 1..q+2 with bideg(F_k) <= bideg(F_j) componentwise.
std::vector<Int> bidegree_divisors(const PairData& pd, Int j);

// bidegree_divisors(j) is contained in {j, m_l(j)}. The converse fails when j
// is itself a marker, e.g. j = 3 for (10,3).
bool bidegree_divisors_bounded(const PairData& pd, Int j);

}  // namespace rees::families
