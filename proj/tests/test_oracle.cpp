#include <numeric>

#include "doctest.h"
#include "rees/crosscheck.hpp"
#include "rees/families.hpp"
#include "rees/oracle.hpp"
#include "rees/text.hpp"

using namespace rees;
using euclid::Int;
using euclid::PairData;

namespace {

PairData pair(Int d, Int u) { return PairData::make(euclid::validate(d, u)); }

}  // namespace

TEST_CASE("elimination kernel of the twisted cubic") {
  const auto order = poly::TermOrder::lex_sigma_positive();
  const auto k = oracle::monomial_map_kernel(3, 1, order);
  std::vector<std::string> s;
  for (const auto& f : k) s.push_back(poly::to_string(f, order));
  CHECK(s.size() == 4);
  CHECK(std::find(s.begin(), s.end(), "T0*X1-T1*X0") != s.end());
  CHECK(std::find(s.begin(), s.end(), "X0^2*X2-X1^3") != s.end());
}

TEST_CASE("degenerate maps") {
  const auto order = poly::TermOrder::lex_sigma_positive();
  // u = 0: X0 and X1 have the same image.
  const auto k = oracle::monomial_map_kernel(4, 0, order);
  CHECK(std::find(k.begin(), k.end(), poly::parse_polynomial("X0-X1")) != k.end());
}

TEST_CASE("elimination and saturation agree with f0") {
  for (const auto [d, u] : {std::pair<Int, Int>{10, 3}, {14, 3}, {7, 2}, {9, 1}}) {
    const auto pd = pair(d, u);
    const auto order = oracle::kernel_order(pd);
    const auto f0 = families::f0_family(pd).elements;
    const auto elim = oracle::kernel_by_elimination(pd);
    const auto sat = oracle::kernel_by_saturation(pd);
    CHECK(poly::reduce_basis(f0, order) == elim.reduced_gb);
    CHECK(elim.reduced_gb == sat.reduced_gb);
    CHECK(sat.colon_steps >= 1);
  }
}

TEST_CASE("oracle report") {
  for (const auto [d, u] : {std::pair<Int, Int>{10, 3}, {14, 3}, {5, 2}, {8, 3}}) {
    const auto r = crosscheck::oracle_report(pair(d, u));
    for (const auto& [name, ok] : r.checks) CHECK_MESSAGE(ok, d, " ", u, " ", name);
  }
}

TEST_CASE("swap symmetry") {
  CHECK(crosscheck::swap_symmetric(14, 11));
  CHECK(crosscheck::swap_symmetric(10, 7));
}

TEST_CASE("deadline") {
  const auto dl = Deadline::after(std::chrono::duration<double>(0));
  CHECK_THROWS_AS(oracle::kernel_by_elimination(pair(29, 1), dl), Error);
  try {
    oracle::kernel_by_elimination(pair(29, 1), dl);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DeadlineExceeded);
  }
}
