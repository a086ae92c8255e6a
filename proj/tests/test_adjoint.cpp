#include <numeric>
#include <random>

#include "doctest.h"
#include "rees/adjoint.hpp"
#include "rees/error.hpp"
#include "rees/text.hpp"

using namespace rees;
using namespace rees::adjoint;

namespace {

PairData pair(Int d, Int u) { return PairData::make(euclid::validate(d, u)); }

}  // namespace

TEST_CASE("sylvester gaps") {
  CHECK(sylvester_gap_count(3, 5) == 4);
  CHECK(sylvester_gap_count(2, 7) == 3);
  CHECK(sylvester_gap_count(1, 9) == 0);
  CHECK_THROWS_AS(sylvester_gap_count(4, 6), Error);
  for (Int a = 1; a <= 15; ++a)
    for (Int b = 1; b <= 15; ++b)
      if (std::gcd(a, b) == 1) CHECK(sylvester_gap_count(a, b) == sylvester_gap_count_brute(a, b));
}

TEST_CASE("singular points") {
  const auto s = singular_points(pair(10, 3));
  CHECK(s == std::vector<SingularPoint>{{{1, 0, 0}, 3}, {{0, 0, 1}, 7}});
}

TEST_CASE("nu 10 3") {
  const auto n = nu(pair(10, 3));
  CHECK(n.value == 16);
  CHECK(n.breakdown == std::array<Int, 4>{0, 1, 3, 12});
  CHECK(n.disjoint);
  CHECK(n.by_j_values == 16);
  CHECK(n.checked_ells == std::vector<Int>{8, 9, 10, 15});
}

TEST_CASE("nu 14 3 and small pairs") {
  const auto n = nu(pair(14, 3));
  CHECK(n.value == 34);
  CHECK(n.breakdown == std::array<Int, 4>{0, 6, 4, 24});
  CHECK(nu(pair(5, 2)).value == 1);
  CHECK(nu(pair(7, 2)).value == 4);
  CHECK(nu(pair(7, 3)).value == 6);
  CHECK(nu(pair(11, 4)).value == 22);
  CHECK(nu(pair(13, 5)).value == 27);
  CHECK(nu(pair(9, 4)).value == 15);
}

TEST_CASE("nu agrees with the rank of the condition map") {
  for (const auto [d, u] : {std::pair<Int, Int>{5, 2}, {7, 2}, {7, 3}, {10, 3}, {9, 4}})
    for (const Int ell : {d - 2, d}) {
      const auto pd = pair(d, u);
      CHECK(quotient_dimension(pd, ell) == adjoint_condition_rank(pd, ell));
    }
}

TEST_CASE("dimension formulas") {
  const auto p14 = pair(14, 3), p10 = pair(10, 3);
  for (Int l = 12; l <= 20; ++l) {
    CHECK(dim_adjoint_pencils(p14, l) == l * l + 3 * l - 154);
    CHECK(dim_adjoint_pencils_enumerated(p14, l) == dim_adjoint_pencils(p14, l));
    CHECK(dim_ker_degree_one(p14, l) == l * l - 11 * l + 34);
  }
  // C(l-5,2) + C(l-1,2) expands to l^2 - 7l + 16, not l^2 - 5l + 10
  for (Int l = 5; l <= 15; ++l) {
    CHECK(dim_ker_degree_one(p10, l) == (l - 5) * (l - 6) / 2 + (l - 1) * (l - 2) / 2);
    CHECK(dim_ker_degree_one(p10, l) == l * l - 7 * l + 16);
    CHECK(dim_ker_degree_one(p10, l) != l * l - 5 * l + 10);
  }
  CHECK(dim_adjoint_pencils(p10, 7) == 0);
}

TEST_CASE("u = 1 and low ell are refused") {
  CHECK_THROWS_AS(nu(pair(7, 1)), Error);
  CHECK_THROWS_AS(quotient_dimension(pair(10, 3), 7), Error);
}

TEST_CASE("adjoint tests agree") {
  const auto pd = pair(7, 3);
  const auto x = [](const char* s) { return poly::parse_polynomial(s); };
  // The cusp-like points sit at (1:0:0) and (0:0:1).
  CHECK(adjoint_tests(pd, x("X1^5")).by_substitution == adjoint_tests(pd, x("X1^5")).by_coefficients);
  CHECK(is_adjoint(pd, x("X1^5")));
  CHECK_FALSE(is_adjoint(pd, x("X0^5")));
  CHECK_FALSE(is_adjoint(pd, x("X2^5")));
  const auto bo = branch_orders(pd, x("X1"));
  CHECK(bo == std::array<Int, 2>{3, 4});
}

TEST_CASE("random pencils") {
  std::mt19937_64 rng(7);
  for (const auto [d, u] : {std::pair<Int, Int>{5, 2}, {10, 3}}) {
    const auto pd = pair(d, u);
    for (int i = 0; i < 50; ++i) {
      const auto [a, b] = random_pencil(pd, d - 2, rng);
      const auto t = pencil_tests(pd, a, b);
      CHECK(t.by_conditions == t.by_components);
    }
  }
}

TEST_CASE("condition sets are disjoint") {
  for (Int d = 5; d <= 30; ++d)
    for (Int u = 2; 2 * u < d; ++u)
      if (std::gcd(d, u) == 1) CHECK(condition_sets(pair(d, u), d - 2).disjoint());
}

TEST_CASE("exponents of degree") {
  CHECK(exponents_of_degree(0).size() == 1);
  CHECK(exponents_of_degree(4).size() == 15);
}
