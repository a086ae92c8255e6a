#include "rees/families.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "rees/error.hpp"
#include "rees/text.hpp"

namespace rees::families {

using poly::Monomial;
using poly::TermOrder;

namespace {

std::uint32_t ex(Int v) {
  if (v < 0) throw std::logic_error("negative exponent " + std::to_string(v));
  return static_cast<std::uint32_t>(v);
}

// T0^a T1^b X0^p X1^q X2^r with range checks.
Monomial mon(Int t0, Int t1, Int x0, Int x1, Int x2) {
  return poly::mono(ex(t0), ex(t1), ex(x0), ex(x1), ex(x2));
}

Polynomial binomial(const Monomial& a, const Monomial& b) {
  return Polynomial(a) - Polynomial(b);
}

// X-part of F_n split as T0^{b} A - T1^{b} B.
struct XPair {
  Monomial a, b;
};

XPair x_parts(const euclid::SersData& s, Int n) {
  const Int sg = s.sigma(n), tu = s.tau(n);
  if (sg <= 0) return {mon(0, 0, -sg, 0, tu), mon(0, 0, 0, tu - sg, 0)};
  return {mon(0, 0, 0, sg - tu, 0), mon(0, 0, sg, 0, -tu)};
}

Polynomial last_generator(const PairData& pd) {
  const Int d = pd.d(), u = pd.u();
  const Monomial xx = mon(0, 0, d - u, 0, u);
  const Monomial x1 = mon(0, 0, 0, d, 0);
  return pd.sers.sigma(pd.q()) > 0 ? binomial(xx, x1) : binomial(x1, xx);
}

std::vector<Bidegree> generator_bidegrees(const PairData& pd) {
  std::vector<Bidegree> out;
  for (Int n = 1; n <= pd.q() + 1; ++n) out.push_back({pd.sers.b(n), pd.sers.spread(n)});
  out.push_back({0, pd.d()});
  return out;
}

Polynomial term(Int sign, const Monomial& m) { return Polynomial(poly::Coeff(sign), m); }

void add(ModuleElement& e, std::size_t pos1, Int sign, const Monomial& m) {
  e.coord(pos1 - 1) += term(sign, m);
}

void check_columns(const std::vector<ModuleElement>& cols, const std::vector<Bidegree>& source,
                   const std::vector<Bidegree>& target, Int d, const char* name) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].rank(); ++i) {
      const Polynomial& p = cols[j][i];
      if (p.is_zero()) continue;
      const auto b = p.bidegree(d);
      if (!b || *b + source.at(i) != target.at(j))
        throw std::logic_error(std::string(name) + " column " + std::to_string(j + 1) +
                               " is not bihomogeneous of the expected twist");
    }
  }
}

}  // namespace

std::size_t SyzygyFamilyOne::index_of(Int n, Int k) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == std::make_pair(n, k)) return i;
  throw Error(ErrorCode::IndexOutOfRange,
              "no first syzygy labelled (" + std::to_string(n) + "," + std::to_string(k) + ")");
}

std::vector<std::string> SyzygyFamilyOne::text_labels() const {
  std::vector<std::string> out;
  for (const auto& [n, k] : labels) out.push_back(poly::pair_label(n, k));
  return out;
}

std::vector<std::string> SyzygyFamilyTwo::text_labels() const {
  std::vector<std::string> out;
  for (const auto& l : labels)
    out.push_back("{" + std::to_string(l.n) + "," + std::to_string(l.rho) + "," +
                  std::to_string(l.ell) + "}");
  return out;
}

std::array<std::size_t, 4> Resolution::ranks() const {
  return {twists[0].size(), twists[1].size(), twists[2].size(), twists[3].size()};
}

TermOrder base_order(const PairData& pd) {
  const Int sq = pd.sers.sigma(pd.q());
  if (sq == 0)
    throw Error(ErrorCode::SigmaQZero, "sigma_q = 0 for (" + std::to_string(pd.d()) + "," +
                                           std::to_string(pd.u()) + ")");
  return TermOrder::for_sigma_q(sq);
}

GeneratorFamily f0_family(const PairData& pd) {
  base_order(pd);
  const auto& s = pd.sers;
  GeneratorFamily f;
  for (Int n = 1; n <= pd.q() + 1; ++n) {
    const XPair x = x_parts(s, n);
    const Int b = s.b(n);
    f.elements.push_back(binomial(mon(b, 0, 0, 0, 0) * x.a, mon(0, b, 0, 0, 0) * x.b));
  }
  f.elements.push_back(last_generator(pd));
  f.bidegrees = generator_bidegrees(pd);
  return f;
}

GeneratorFamily f0_family_recursive(const PairData& pd) {
  base_order(pd);
  const auto& s = pd.sers;
  const Int q = pd.q();
  const auto slots = static_cast<std::size_t>(q + 3);
  std::vector<std::optional<XPair>> x(slots);
  x[1] = XPair{mon(0, 0, 0, 0, 1), mon(0, 0, 0, 1, 0)};
  x[static_cast<std::size_t>(s.m(1))] = XPair{mon(0, 0, 0, 1, 0), mon(0, 0, 1, 0, 0)};

  for (Int n = 1; n <= q; ++n) {
    const Int m = s.m_of(n);
    const auto& xn = x[static_cast<std::size_t>(n)];
    const auto& xm = x[static_cast<std::size_t>(m)];
    if (!xn || !xm) throw std::logic_error("recursion reached an undefined generator");
    const Int next_b = s.b(n) - s.b(m);
    const Int target = next_b >= s.b(m) ? n + 1 : s.m(s.ell(n) + 1);
    if (target != s.rho(n)) throw std::logic_error("recursion target differs from rho(n)");
    const XPair nx{xn->a * xm->b, xn->b * xm->a};
    auto& slot = x[static_cast<std::size_t>(target)];
    if (slot && !(slot->a == nx.a && slot->b == nx.b))
      throw std::logic_error("recursion produced two values for one generator");
    slot = nx;
  }

  GeneratorFamily f;
  for (Int n = 1; n <= q + 1; ++n) {
    const auto& xn = x[static_cast<std::size_t>(n)];
    if (!xn) throw std::logic_error("recursion left a generator undefined");
    const Int b = s.b(n);
    f.elements.push_back(binomial(mon(b, 0, 0, 0, 0) * xn->a, mon(0, b, 0, 0, 0) * xn->b));
  }
  // The recursion fixes the last generator up to sign only.
  const auto& xl = x[static_cast<std::size_t>(q + 2)];
  if (!xl) throw std::logic_error("recursion left the last generator undefined");
  Polynomial last = binomial(xl->a, xl->b);
  if (last != last_generator(pd)) last = -last;
  f.elements.push_back(last);
  f.bidegrees = generator_bidegrees(pd);
  return f;
}

SyzygyFamilyOne f1_family(const PairData& pd, const GeneratorFamily& f0) {
  const auto& s = pd.sers;
  const Int q = pd.q();
  const auto rank = static_cast<std::size_t>(q + 2);
  if (f0.elements.size() != rank) throw Error(ErrorCode::RankMismatch, "F0 size differs from q+2");

  struct Entry {
    std::pair<Int, Int> label;
    ModuleElement element;
    Bidegree twist;
  };
  std::vector<Entry> entries;

  for (Int n = 1; n <= q; ++n) {
    const Int m = s.m_of(n), r = s.rho(n);
    const Int sn = s.sigma(n), tn = s.tau(n), sm = s.sigma(m), tm = s.tau(m);
    const Int bm = s.b(m), br = s.b(r);
    const Bidegree twist{s.b(n), s.spread(n) + s.spread(m)};
    const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m),
               ur = static_cast<std::size_t>(r);

    ModuleElement snr(rank), snm(rank);
    if (sn <= 0) {
      if (n < q) {
        add(snr, un, 1, mon(0, 0, sm, 0, -tm));
        add(snr, ur, -1, mon(bm, 0, 0, 0, 0));
        add(snr, um, -1, mon(0, br, 0, tn - sn, 0));
      }
      add(snm, un, 1, mon(0, 0, 0, sm - tm, 0));
      add(snm, um, -1, mon(br, 0, -sn, 0, tn));
      add(snm, ur, -1, mon(0, bm, 0, 0, 0));
    } else {
      if (n < q) {
        add(snr, un, 1, mon(0, 0, 0, tm - sm, 0));
        add(snr, ur, -1, mon(bm, 0, 0, 0, 0));
        add(snr, um, -1, mon(0, br, sn, 0, -tn));
      }
      add(snm, un, 1, mon(0, 0, -sm, 0, tm));
      add(snm, um, -1, mon(br, 0, 0, sn - tn, 0));
      add(snm, ur, -1, mon(0, bm, 0, 0, 0));
    }
    if (n < q) {
      entries.push_back({{n, r}, std::move(snr), twist});
      entries.push_back({{n, m}, std::move(snm), twist});
    } else {
      // n = q: m = q+1, r = q+2; the e_{q+2} coefficient is +T1.
      snm.coord(ur - 1) = -snm[ur - 1];
      entries.push_back({{q, q + 1}, std::move(snm), twist});
    }
  }

  {
    const Int sq = s.sigma(q), tq = s.tau(q), s1 = s.sigma(q + 1), t1 = s.tau(q + 1);
    const auto uq = static_cast<std::size_t>(q);
    ModuleElement e(rank);
    if (s1 <= 0) {
      add(e, uq + 1, 1, mon(0, 0, sq, 0, -tq));
      add(e, uq + 2, -1, mon(1, 0, 0, 0, 0));
      add(e, uq, -1, mon(0, 0, 0, t1 - s1, 0));
    } else {
      add(e, uq + 1, 1, mon(0, 0, 0, tq - sq, 0));
      add(e, uq + 2, -1, mon(1, 0, 0, 0, 0));
      add(e, uq, -1, mon(0, 0, s1, 0, -t1));
    }
    entries.push_back({{q + 1, q + 2}, std::move(e), Bidegree{s.b(q), pd.d()}});
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.label < b.label; });
  SyzygyFamilyOne f1;
  for (auto& e : entries) {
    f1.labels.push_back(e.label);
    f1.elements.push_back(std::move(e.element));
    f1.twists.push_back(e.twist);
  }
  return f1;
}

SyzygyFamilyTwo f2_family(const PairData& pd, const SyzygyFamilyOne& f1) {
  const auto& s = pd.sers;
  const Int q = pd.q();
  const std::size_t rank = f1.labels.size();
  SyzygyFamilyTwo f2;

  for (Int n = 1; n <= q - 1; ++n) {
    const Int m = s.m_of(n), r = s.rho(n), l = s.ell(n);
    const Int sn = s.sigma(n), sm = s.sigma(m), tm = s.tau(m);
    ModuleElement e(rank);
    auto put = [&](Int a, Int k, Int sign, const Monomial& mm) {
      e.coord(f1.index_of(a, k)) += term(sign, mm);
    };
    // X0^{sm} X2^{-tm} and X1^{sm-tm} when sigma_n <= 0, the mirrored pair otherwise.
    const Monomial xa = sn <= 0 ? mon(0, 0, sm, 0, -tm) : mon(0, 0, 0, tm - sm, 0);
    const Monomial xb = sn <= 0 ? mon(0, 0, 0, sm - tm, 0) : mon(0, 0, -sm, 0, tm);

    Int t0_label, t1_label, t0_exp, t1_exp;
    if (r == n + 1) {
      put(n, r, 1, xb);
      put(n, m, -1, xa);
      t0_label = m;
      t0_exp = s.b(m);
      t1_label = s.rho(n + 1);
      t1_exp = s.b(s.m_of(n + 1));
    } else {
      put(n, m, 1, xa);
      put(n, r, -1, xb);
      t0_label = r;
      t0_exp = s.b(r);
      t1_label = s.rho(n + 1);
      t1_exp = s.b(r);
    }
    put(n + 1, t0_label, 1, mon(t0_exp, 0, 0, 0, 0));
    if (n + 1 == q && t1_label == q + 2) {
      // e_{q,q+2} is not a basis vector; the relation uses +T1 e_{q+1,q+2}.
      put(q + 1, q + 2, 1, mon(0, t1_exp, 0, 0, 0));
    } else {
      put(n + 1, t1_label, -1, mon(0, t1_exp, 0, 0, 0));
    }
    f2.labels.push_back({n, r, l});
    f2.elements.push_back(std::move(e));
    f2.twists.push_back({s.b(n), s.spread(n) + 2 * s.spread(m)});
  }
  return f2;
}

Resolution resolution(const PairData& pd) {
  const GeneratorFamily f0 = f0_family(pd);
  const SyzygyFamilyOne f1 = f1_family(pd, f0);
  const SyzygyFamilyTwo f2 = f2_family(pd, f1);
  Resolution r;
  r.twists[0] = {Bidegree{0, 0}};
  r.twists[1] = f0.bidegrees;
  r.twists[2] = f1.twists;
  r.twists[3] = f2.twists;
  r.phi1 = f0.elements;
  r.phi2 = f1.elements;
  r.phi3 = f2.elements;
  check_columns(poly::as_rank_one(r.phi1), r.twists[0], r.twists[1], pd.d(), "Phi1");
  check_columns(r.phi2, r.twists[1], r.twists[2], pd.d(), "Phi2");
  check_columns(r.phi3, r.twists[2], r.twists[3], pd.d(), "Phi3");
  return r;
}

BettiTable betti_numbers(const PairData& pd) {
  const Resolution r = resolution(pd);
  BettiTable t;
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& b : r.twists[i]) ++t[i][b];
  return t;
}

Polynomial kernel_image(const Polynomial& f, Int d, Int u) {
  std::array<Polynomial, poly::kVarCount> img;
  img[poly::T0] = Polynomial(poly::mono(1, 0, 0, 0, 0));
  img[poly::T1] = Polynomial(poly::mono(0, 1, 0, 0, 0));
  img[poly::X0] = Polynomial(poly::mono(ex(d), 0, 0, 0, 0, 1));
  img[poly::X1] = Polynomial(poly::mono(ex(d - u), ex(u), 0, 0, 0, 1));
  img[poly::X2] = Polynomial(poly::mono(0, ex(d), 0, 0, 0, 1));
  img[poly::Z] = Polynomial(poly::mono(0, 0, 0, 0, 0, 1));
  return f.substitute(img);
}

bool verify_kernel_membership(const std::vector<Polynomial>& f0, Int d, Int u) {
  return std::all_of(f0.begin(), f0.end(),
                     [&](const Polynomial& f) { return kernel_image(f, d, u).is_zero(); });
}

ModuleElement s_q_q2(const PairData& pd, const GeneratorFamily& f0) {
  const auto q = static_cast<std::size_t>(pd.q());
  ModuleElement e(q + 2);
  e.coord(q - 1) = f0.elements[q + 1];
  e.coord(q + 1) = -f0.elements[q - 1];
  return e;
}

std::pair<Polynomial, Polynomial> redundancy_coefficients(const PairData& pd) {
  const auto& s = pd.sers;
  const Int sq = s.sigma(pd.q()), tq = s.tau(pd.q());
  if (sq > 0) return {Polynomial(mon(0, 0, sq, 0, -tq)), Polynomial(mon(0, 0, 0, sq - tq, 0))};
  return {Polynomial(mon(0, 0, 0, tq - sq, 0)), Polynomial(mon(0, 0, -sq, 0, tq))};
}

OrderChain order_chain(const PairData& pd, const GeneratorFamily& f0, const SyzygyFamilyOne& f1) {
  OrderChain c;
  c.lex = poly::make_position_order(base_order(pd), 1);
  c.by_f0 = poly::induced_order(poly::as_rank_one(f0.elements), c.lex);
  c.by_f1 = poly::induced_order(f1.elements, c.by_f0);
  return c;
}

}  // namespace rees::families
