#include <cstdlib>
#include <sstream>

#include "rees/euclid.hpp"

namespace rees::euclid {

namespace {

class Sink {
 public:
  explicit Sink(std::vector<std::string>& out) : out_(out) {}
  template <class... A>
  void require(bool ok, const A&... parts) {
    if (ok) return;
    std::ostringstream os;
    (os << ... << parts);
    out_.push_back(os.str());
  }

 private:
  std::vector<std::string>& out_;
};

}  // namespace

std::vector<std::string> invariant_violations(const PairData& pd) {
  std::vector<std::string> out;
  Sink check(out);
  const Int d = pd.d(), u = pd.u();
  const EuclidData& e = pd.euclid;
  const SersData& s = pd.sers;
  const Int p = e.p, q = e.q;

  // remainder sequence
  check.require(e.a_seq.size() == static_cast<std::size_t>(p + 1), "a_seq length");
  check.require(e.a_seq[0] == d - u && e.a_seq[1] == u && e.a_seq[p] == 0, "a_0, a_1, a_p");
  Int qsum = 0;
  for (Int i = 1; i <= p - 1; ++i) {
    const Int qi = e.q_seq[i - 1];
    qsum += qi;
    check.require(e.a_seq[i - 1] == qi * e.a_seq[i] + e.a_seq[i + 1] && e.a_seq[i + 1] >= 0 &&
                      e.a_seq[i + 1] < e.a_seq[i],
                  "division step ", i);
  }
  check.require(qsum == q, "q = sum q_i");

  for (Int i = 0; i <= p; ++i) {
    const Int si = e.s_seq[i], ti = e.t_seq[i];
    check.require(si * u + ti * (d - u) == e.a_seq[i], "s_", i, " u + t_", i, " (d-u) = a_", i);
    if (i % 2 == 0) check.require(si <= 0 && ti >= 0, "sign pattern at ", i);
    else check.require(si >= 0 && ti <= 0, "sign pattern at ", i);
    if (i >= 1) {
      check.require(std::llabs(si) * e.a_seq[i - 1] <= d - u, "|s_", i, "| <= (d-u)/a_", i - 1);
      check.require(std::llabs(ti) * e.a_seq[i - 1] <= u, "|t_", i, "| <= u/a_", i - 1);
    }
  }

  // markers
  check.require(s.m(0) == 1 && s.m(p) == q + 2, "m_0 = 1, m_p = q+2");
  for (Int l = 1; l <= p - 1; ++l) {
    Int acc = 1;
    for (Int j = 1; j <= l; ++j) acc += e.q_seq[j - 1];
    check.require(s.m(l) == acc, "m_", l);
  }

  // slow sequence
  check.require(s.b(1) == d - u && s.c(1) == u, "b_1, c_1");
  check.require(s.b(q + 1) == 1 && s.c(q + 1) == 0, "b_{q+1} = 1, c_{q+1} = 0");
  for (Int n = 1; n <= q; ++n) {
    const Int x = s.b(n) - s.c(n), y = s.c(n);
    const bool same = (s.b(n + 1) == x && s.c(n + 1) == y) || (s.b(n + 1) == y && s.c(n + 1) == x);
    check.require(same && s.b(n + 1) >= s.c(n + 1), "slow step ", n);
    check.require(s.b(n + 1) <= s.b(n), "b non-increasing at ", n);
  }

  for (Int n = 1; n <= q + 1; ++n) {
    const Quad x = s.quad(n);
    check.require(x.sigma * u + x.tau * (d - u) == s.b(n), "sigma u + tau (d-u) = b at ", n);
    check.require(x.alpha * u + x.beta * (d - u) == s.c(n), "alpha u + beta (d-u) = c at ", n);
    check.require(x.sigma * x.tau <= 0, "sigma, tau opposite signs at ", n);
    check.require(std::llabs(x.sigma) < d - u, "|sigma_", n, "| < d-u");
    check.require(std::llabs(x.tau) < u, "|tau_", n, "| < u");
    check.require(s.spread(n) > 0, "|sigma - tau| > 0 at ", n);
  }

  for (Int l = 0; l <= p - 1; ++l) {
    for (Int n = s.m(l); n < s.m(l + 1) && n <= q + 1; ++n) {
      const Int k = n - s.m(l);
      check.require(s.b(n) == e.a_seq[l] - k * e.a_seq[l + 1] && s.c(n) == e.a_seq[l + 1],
                    "(b,c) closed form at ", n);
      const Quad want{e.s_seq[l] - k * e.s_seq[l + 1], e.t_seq[l] - k * e.t_seq[l + 1],
                      e.s_seq[l + 1], e.t_seq[l + 1]};
      check.require(s.quad(n) == want, "extended closed form at ", n);
    }
  }

  const Int lo = s.spread(q + 1), hi = s.spread(q);
  check.require(2 * lo <= d && d <= 2 * hi, "|s_{q+1}-t_{q+1}| <= d/2 <= |s_q-t_q|");
  check.require(lo + hi == d, "spreads at q and q+1 add up to d");
  check.require(s.sigma(q) != 0, "sigma_q != 0");

  // index maps
  for (Int n = 1; n <= q + 1; ++n) {
    const Int l = s.ell(n);
    check.require(s.m(l - 1) <= n && n < s.m(l), "ell(", n, ")");
  }
  for (Int n = 1; n <= q; ++n) {
    check.require(s.b(s.rho(n)) == s.b(n) - s.c(n), "b_rho(", n, ") = b - c");
    check.require(s.b(s.m_of(n)) == s.c(n), "b_m(", n, ") = c");
  }

  // strict growth of X-degrees away from the marker
  for (Int n = 1; n <= q + 1; ++n)
    for (Int k = n + 1; k <= q + 1; ++k)
      if (k != s.m_of(n))
        check.require(s.spread(n) < s.spread(k), "spread growth n=", n, " k=", k);

  // minimal solutions
  for (Int n = 1; n <= q + 1; ++n) {
    const Int sg = s.sigma(n), tu = s.tau(n);
    if (sg <= 0) {
      const auto [g, dl] = minimal_solution(s.b(n), d - u, u);
      check.require(g == tu && dl == -sg, "minimal solution at ", n);
    } else {
      const auto [g, dl] = minimal_solution(s.b(n), u, d - u);
      check.require(g == sg && dl == -tu, "minimal solution at ", n);
    }
  }
  return out;
}

}  // namespace rees::euclid
