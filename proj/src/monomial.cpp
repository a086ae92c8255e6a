#include "rees/monomial.hpp"

#include <algorithm>

namespace rees::poly {

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

Bidegree Monomial::bidegree(std::int64_t d) const {
  const auto z = static_cast<std::int64_t>(e_[Z]);
  return {static_cast<std::int64_t>(t_degree()) - d * z, static_cast<std::int64_t>(x_degree()) + z};
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < kVarCount; ++i) e_[i] += o.e_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < kVarCount; ++i) r.e_[i] -= divisor.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

Monomial mono(std::uint32_t t0, std::uint32_t t1, std::uint32_t x0, std::uint32_t x1,
              std::uint32_t x2, std::uint32_t z) {
  return Monomial(Monomial::Exponents{t0, t1, x0, x1, x2, z});
}

}  // namespace rees::poly
