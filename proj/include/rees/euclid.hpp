#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rees::euclid {

using Int = std::int64_t;

// Largest accepted d. Keeps every product of sequence entries inside 64 bits.
inline constexpr Int kMaxDegree = (Int{1} << 31) - 1;

struct InputPair {
  Int d = 0;
  Int u = 0;
  bool swapped = false;  // true when (d, d-u) was normalized to (d, u)

  friend bool operator==(const InputPair& a, const InputPair& b) {
    return a.d == b.d && a.u == b.u;
  }
};

InputPair validate(Int d, Int u, bool allow_swap = false);

// Classical remainder sequence for (d-u, u) with Bezout companions.
struct EuclidData {
  std::vector<Int> a_seq;  // a_0 .. a_p
  std::vector<Int> q_seq;  // q_1 .. q_{p-1}
  std::vector<Int> s_seq;  // s_0 .. s_p
  std::vector<Int> t_seq;  // t_0 .. t_p
  Int p = 0;
  Int q = 0;

  friend bool operator==(const EuclidData&, const EuclidData&) = default;
};

EuclidData euclid_data(const InputPair& pair);

struct Quad {
  Int sigma, tau, alpha, beta;
  friend bool operator==(const Quad&, const Quad&) = default;
};

// Slow sequence and its extended companion. All public indices are 1-based
// as in the usual notation; m() is 0-based.
class SersData {
 public:
  SersData() = default;
  SersData(const InputPair& pair, const EuclidData& e);

  Int d() const { return d_; }
  Int u() const { return u_; }
  Int p() const { return p_; }
  Int q() const { return q_; }

  Int b(Int n) const;  // n in 1..q+2, with b_{q+2} = 0
  Int c(Int n) const;  // n in 1..q+1
  Int sigma(Int n) const;
  Int tau(Int n) const;
  Int alpha(Int n) const;
  Int beta(Int n) const;
  Quad quad(Int n) const;
  Int m(Int l) const;  // l in 0..p

  // |sigma_n - tau_n|, the X-degree of the n-th generator. n in 1..q+1.
  Int spread(Int n) const;

  Int ell(Int n) const;    // n in 1..q+1
  Int rho(Int n) const;    // n in 1..q
  Int m_of(Int n) const { return m(ell(n)); }

  const std::vector<Int>& b_seq() const { return b_; }
  const std::vector<Int>& c_seq() const { return c_; }
  const std::vector<Quad>& quads() const { return quads_; }
  const std::vector<Int>& m_seq() const { return m_; }

 private:
  void check_n(Int n, Int hi) const;

  Int d_ = 0, u_ = 0, p_ = 0, q_ = 0;
  std::vector<Int> b_, c_;      // index n-1
  std::vector<Quad> quads_;     // index n-1
  std::vector<Int> m_;          // index l
  std::vector<Int> ell_;        // index n-1
};

SersData sers_data(const InputPair& pair, const EuclidData& e);

Int ell_of(Int n, const SersData& s);
Int rho_of(Int n, const SersData& s);

// Minimal (gamma, delta) >= 0 with a = b*gamma - c*delta.
std::pair<Int, Int> minimal_solution(Int a, Int b, Int c);

// Everything downstream needs for one pair.
struct PairData {
  InputPair pair;
  EuclidData euclid;
  SersData sers;

  static PairData make(const InputPair& pair);
  Int d() const { return pair.d; }
  Int u() const { return pair.u; }
  Int q() const { return sers.q(); }
};

// Every identity and bound the sequences are known to satisfy, checked
// directly. Returns one line per violation; empty means all hold.
std::vector<std::string> invariant_violations(const PairData& pd);

}  // namespace rees::euclid
