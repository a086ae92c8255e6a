#include "rees/order.hpp"

#include <string>
#include <utility>

#include "rees/error.hpp"

namespace rees::poly {

TermOrder TermOrder::lex_sigma_positive() {
  return TermOrder(Variant::LexSigmaPositive, Variant::LexSigmaPositive, {T0, T1, X0, X1, X2, Z});
}

TermOrder TermOrder::lex_sigma_nonpositive() {
  return TermOrder(Variant::LexSigmaNonpositive, Variant::LexSigmaNonpositive,
                   {T0, T1, X1, X0, X2, Z});
}

TermOrder TermOrder::elimination_z(const TermOrder& base) {
  std::array<Var, kVarCount> r{};
  r[0] = Z;
  std::size_t k = 1;
  for (Var v : base.rank_)
    if (v != Z) r[k++] = v;
  return TermOrder(Variant::EliminationZ, base.base_, r);
}

TermOrder TermOrder::for_sigma_q(std::int64_t sigma_q) {
  return sigma_q > 0 ? lex_sigma_positive() : lex_sigma_nonpositive();
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (Var v : rank_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

const char* to_string(TermOrder::Variant v) {
  switch (v) {
    case TermOrder::Variant::LexSigmaPositive: return "LexSigmaPositive";
    case TermOrder::Variant::LexSigmaNonpositive: return "LexSigmaNonpositive";
    case TermOrder::Variant::EliminationZ: return "EliminationZ";
  }
  return "?";
}

void ModuleOrder::check_rank(const ModuleMonomial& a, const ModuleMonomial& b) const {
  if (a.pos >= rank() || b.pos >= rank())
    throw Error(ErrorCode::RankMismatch,
                "basis index outside rank " + std::to_string(rank()));
}

std::strong_ordering PositionOrder::compare(const ModuleMonomial& a,
                                            const ModuleMonomial& b) const {
  check_rank(a, b);
  const auto c = order_.compare(a.mono, b.mono);
  if (c != 0) return c;
  return b.pos <=> a.pos;
}

InducedOrder::InducedOrder(OrderPtr base, std::vector<ModuleMonomial> leads)
    : base_(std::move(base)), leads_(std::move(leads)) {}

std::strong_ordering InducedOrder::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  check_rank(a, b);
  const ModuleMonomial& la = leads_[a.pos];
  const ModuleMonomial& lb = leads_[b.pos];
  const auto c = base_->compare({a.mono * la.mono, la.pos}, {b.mono * lb.mono, lb.pos});
  if (c != 0) return c;
  return b.pos <=> a.pos;
}

OrderPtr make_position_order(const TermOrder& order, std::size_t rank) {
  return std::make_shared<PositionOrder>(order, rank);
}

}  // namespace rees::poly
