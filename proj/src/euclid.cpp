#include "rees/euclid.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "rees/error.hpp"

namespace rees::euclid {

namespace {

std::string pair_text(Int d, Int u) {
  return "(" + std::to_string(d) + "," + std::to_string(u) + ")";
}

}  // namespace

InputPair validate(Int d, Int u, bool allow_swap) {
  if (d < 3 || d > kMaxDegree)
    throw Error(ErrorCode::OutOfRange, "d must lie in [3, 2^31-1], got " + pair_text(d, u));
  if (u <= 0 || u >= d)
    throw Error(ErrorCode::OutOfRange, "u must lie in [1, d-1], got " + pair_text(d, u));
  if (std::gcd(d, u) != 1)
    throw Error(ErrorCode::NonCoprime, "gcd(d,u) != 1 for " + pair_text(d, u));
  if (2 * u < d) return InputPair{d, u, false};
  if (!allow_swap)
    throw Error(ErrorCode::OutOfRange,
                "need 2u < d, got " + pair_text(d, u) + " (use --allow-swap)");
  return InputPair{d, d - u, true};
}

EuclidData euclid_data(const InputPair& pair) {
  EuclidData e;
  e.a_seq = {pair.d - pair.u, pair.u};
  e.s_seq = {0, 1};
  e.t_seq = {1, 0};
  while (e.a_seq.back() != 0) {
    const std::size_t i = e.a_seq.size() - 1;
    const Int qi = e.a_seq[i - 1] / e.a_seq[i];
    e.q_seq.push_back(qi);
    e.a_seq.push_back(e.a_seq[i - 1] % e.a_seq[i]);
    e.s_seq.push_back(e.s_seq[i - 1] - qi * e.s_seq[i]);
    e.t_seq.push_back(e.t_seq[i - 1] - qi * e.t_seq[i]);
  }
  e.p = static_cast<Int>(e.a_seq.size()) - 1;
  e.q = std::accumulate(e.q_seq.begin(), e.q_seq.end(), Int{0});
  return e;
}

SersData::SersData(const InputPair& pair, const EuclidData& e)
    : d_(pair.d), u_(pair.u), p_(e.p), q_(e.q) {
  Int b = pair.d - pair.u, c = pair.u;
  Quad t{0, 1, 1, 0};
  b_.push_back(b);
  c_.push_back(c);
  quads_.push_back(t);
  for (Int n = 1; n <= q_; ++n) {
    if (b - c >= c) {
      t = Quad{t.sigma - t.alpha, t.tau - t.beta, t.alpha, t.beta};
      b = b - c;
    } else {
      t = Quad{t.alpha, t.beta, t.sigma - t.alpha, t.tau - t.beta};
      const Int nb = c;
      c = b - c;
      b = nb;
    }
    b_.push_back(b);
    c_.push_back(c);
    quads_.push_back(t);
  }

  m_.push_back(1);
  Int acc = 1;
  for (Int l = 1; l < p_; ++l) {
    acc += e.q_seq[static_cast<std::size_t>(l - 1)];
    m_.push_back(acc);
  }
  m_.push_back(q_ + 2);

  ell_.resize(static_cast<std::size_t>(q_ + 1));
  Int l = 1;
  for (Int n = 1; n <= q_ + 1; ++n) {
    while (!(m_[static_cast<std::size_t>(l - 1)] <= n && n < m_[static_cast<std::size_t>(l)])) ++l;
    ell_[static_cast<std::size_t>(n - 1)] = l;
  }
}

void SersData::check_n(Int n, Int hi) const {
  if (n < 1 || n > hi)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(n) + " outside 1.." + std::to_string(hi));
}

Int SersData::b(Int n) const {
  check_n(n, q_ + 2);
  return n == q_ + 2 ? 0 : b_[static_cast<std::size_t>(n - 1)];
}

Int SersData::c(Int n) const {
  check_n(n, q_ + 1);
  return c_[static_cast<std::size_t>(n - 1)];
}

Quad SersData::quad(Int n) const {
  check_n(n, q_ + 1);
  return quads_[static_cast<std::size_t>(n - 1)];
}

Int SersData::sigma(Int n) const { return quad(n).sigma; }
Int SersData::tau(Int n) const { return quad(n).tau; }
Int SersData::alpha(Int n) const { return quad(n).alpha; }
Int SersData::beta(Int n) const { return quad(n).beta; }

Int SersData::spread(Int n) const {
  const Quad t = quad(n);
  const Int v = t.sigma - t.tau;
  return v < 0 ? -v : v;
}

Int SersData::m(Int l) const {
  if (l < 0 || l > p_)
    throw Error(ErrorCode::IndexOutOfRange,
                "marker index " + std::to_string(l) + " outside 0.." + std::to_string(p_));
  return m_[static_cast<std::size_t>(l)];
}

Int SersData::ell(Int n) const {
  check_n(n, q_ + 1);
  return ell_[static_cast<std::size_t>(n - 1)];
}

Int SersData::rho(Int n) const {
  check_n(n, q_);
  const Int l = ell(n);
  return n + 1 < m(l) ? n + 1 : m(l + 1);
}

SersData sers_data(const InputPair& pair, const EuclidData& e) { return SersData(pair, e); }

Int ell_of(Int n, const SersData& s) { return s.ell(n); }
Int rho_of(Int n, const SersData& s) { return s.rho(n); }

std::pair<Int, Int> minimal_solution(Int a, Int b, Int c) {
  if (a <= 0 || b <= 0 || c <= 0 || b == c)
    throw Error(ErrorCode::OutOfRange, "minimal_solution needs positive a, b, c with b != c");
  const Int g = std::gcd(b, c);
  if (a % g != 0)
    throw Error(ErrorCode::NoSolution, "gcd(b,c) does not divide a");
  const Int bb = b / g, cc = c / g, aa = a / g;
  // gamma = aa * bb^{-1} mod cc, smallest nonnegative representative.
  Int gamma = 0;
  if (cc > 1) {
    Int r0 = bb % cc, r1 = cc, x0 = 1, x1 = 0;
    while (r1 != 0) {
      const Int k = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
      std::tie(x0, x1) = std::make_pair(x1, x0 - k * x1);
    }
    // Both factors are below cc < 2^31, so the product fits.
    gamma = (aa % cc) * (((x0 % cc) + cc) % cc) % cc;
  }
  // Both coordinates grow along the solution line, so the first nonnegative
  // point minimizes gamma + delta.
  if (b * gamma < a) {
    const Int step = b * cc;
    gamma += (a - b * gamma + step - 1) / step * cc;
  }
  return {gamma, (b * gamma - a) / c};
}

PairData PairData::make(const InputPair& pair) {
  PairData pd;
  pd.pair = pair;
  pd.euclid = euclid_data(pair);
  pd.sers = SersData(pair, pd.euclid);
  return pd;
}

}  // namespace rees::euclid
