#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace rees::poly {

enum Var : std::size_t { T0 = 0, T1, X0, X1, X2, Z };
inline constexpr std::size_t kVarCount = 6;

struct Bidegree {
  std::int64_t t = 0;
  std::int64_t x = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  Bidegree operator+(const Bidegree& o) const { return {t + o.t, x + o.x}; }
  Bidegree operator-(const Bidegree& o) const { return {t - o.t, x - o.x}; }
  bool leq(const Bidegree& o) const { return t <= o.t && x <= o.x; }
};

class Monomial {
 public:
  using Exponents = std::array<std::uint32_t, kVarCount>;

  constexpr Monomial() = default;
  constexpr explicit Monomial(const Exponents& e) : e_(e) {}

  static Monomial var(Var v, std::uint32_t power = 1) {
    Monomial m;
    m.e_[v] = power;
    return m;
  }

  std::uint32_t operator[](std::size_t v) const { return e_[v]; }
  const Exponents& exponents() const { return e_; }

  bool is_one() const;
  std::uint64_t total_degree() const;
  std::uint64_t t_degree() const { return std::uint64_t{e_[T0]} + e_[T1]; }
  std::uint64_t x_degree() const { return std::uint64_t{e_[X0]} + e_[X1] + e_[X2]; }
  // Grading with bideg(Z) = (-d, 1).
  Bidegree bidegree(std::int64_t d) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  // Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Canonical storage key: lexicographic on (T0,T1,X0,X1,X2,Z). Not a term order
  // used for leading terms; see TermOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  Exponents e_{};
};

// mono(a,b,p,q,r) = T0^a T1^b X0^p X1^q X2^r (optionally Z^z).
Monomial mono(std::uint32_t t0, std::uint32_t t1, std::uint32_t x0, std::uint32_t x1,
              std::uint32_t x2, std::uint32_t z = 0);

}  // namespace rees::poly
