#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "rees/monomial.hpp"

namespace rees::poly {

// Lexicographic orders on T0,T1,X0,X1,X2 (and Z for elimination).
class TermOrder {
 public:
  enum class Variant { LexSigmaPositive, LexSigmaNonpositive, EliminationZ };

  static TermOrder lex_sigma_positive();     // X2 < X1 < X0 < T1 < T0
  static TermOrder lex_sigma_nonpositive();  // X2 < X0 < X1 < T1 < T0
  static TermOrder elimination_z(const TermOrder& base);
  static TermOrder for_sigma_q(std::int64_t sigma_q);

  Variant variant() const { return variant_; }
  // The lex variant on T,X; equals variant() unless this is EliminationZ.
  Variant base_variant() const { return base_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  // Variables from most to least significant.
  const std::array<Var, kVarCount>& ranking() const { return rank_; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.rank_ == b.rank_; }

 private:
  TermOrder(Variant v, Variant base, std::array<Var, kVarCount> rank)
      : variant_(v), base_(base), rank_(rank) {}

  Variant variant_;
  Variant base_;
  std::array<Var, kVarCount> rank_;
};

const char* to_string(TermOrder::Variant v);

struct ModuleMonomial {
  Monomial mono;
  std::uint32_t pos = 0;  // 0-based basis index

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

class ModuleOrder {
 public:
  virtual ~ModuleOrder() = default;
  virtual std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const = 0;
  virtual std::size_t rank() const = 0;
  virtual const TermOrder& term_order() const = 0;

 protected:
  void check_rank(const ModuleMonomial& a, const ModuleMonomial& b) const;
};

using OrderPtr = std::shared_ptr<const ModuleOrder>;

// Term over position; on equal monomials the lower index is greater.
class PositionOrder final : public ModuleOrder {
 public:
  PositionOrder(TermOrder order, std::size_t rank) : order_(order), rank_(rank) {}

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const override;
  std::size_t rank() const override { return rank_; }
  const TermOrder& term_order() const override { return order_; }

 private:
  TermOrder order_;
  std::size_t rank_;
};

// Order induced by a family: x*e_i vs y*e_j compares lm(x f_i) with lm(y f_j)
// under the base order; on a tie the smaller index is the larger monomial.
class InducedOrder final : public ModuleOrder {
 public:
  InducedOrder(OrderPtr base, std::vector<ModuleMonomial> leads);

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const override;
  std::size_t rank() const override { return leads_.size(); }
  const TermOrder& term_order() const override { return base_->term_order(); }

  const ModuleOrder& base() const { return *base_; }
  const OrderPtr& base_ptr() const { return base_; }
  const std::vector<ModuleMonomial>& leads() const { return leads_; }

 private:
  OrderPtr base_;
  std::vector<ModuleMonomial> leads_;
};

OrderPtr make_position_order(const TermOrder& order, std::size_t rank);

}  // namespace rees::poly
