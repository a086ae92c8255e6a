#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rees/adjoint.hpp"
#include "rees/families.hpp"
#include "rees/verify.hpp"

// JSON forms of every payload. Keys come out sorted (nlohmann::json uses an
// ordered map); polynomials use the canonical text grammar.
namespace rees::io {

using nlohmann::json;
using euclid::Int;

inline constexpr const char* kSchemaVersion = "1";

struct EuclidPayload {
  Int d = 0, u = 0;
  euclid::EuclidData euclid;
  std::vector<Int> b, c, m, ell, rho;
  std::vector<euclid::Quad> quads;

  static EuclidPayload make(const euclid::PairData& pd);
  friend bool operator==(const EuclidPayload&, const EuclidPayload&) = default;
};

json to_json(const EuclidPayload& p);
EuclidPayload euclid_from_json(const json& j);

json to_json(const families::GeneratorFamily& f, const poly::TermOrder& order);
families::GeneratorFamily generators_from_json(const json& j);

json to_json(const families::SyzygyFamilyOne& f, const poly::TermOrder& order);
families::SyzygyFamilyOne syzygies_one_from_json(const json& j);

json to_json(const families::SyzygyFamilyTwo& f, const families::SyzygyFamilyOne& basis,
             const poly::TermOrder& order);
families::SyzygyFamilyTwo syzygies_two_from_json(const json& j);

json to_json(const families::Resolution& r, const families::SyzygyFamilyOne& f1,
             const poly::TermOrder& order);
families::Resolution resolution_from_json(const json& j);

json to_json(const families::BettiTable& t);
families::BettiTable betti_from_json(const json& j);

json to_json(const families::TheoremReport& r);
families::TheoremReport report_from_json(const json& j);

json to_json(const adjoint::AdjointReport& r);
adjoint::AdjointReport adjoint_from_json(const json& j);

// {"schema_version", "input": {"d","u","swapped"}, "kind", "payload"}
json document(const euclid::InputPair& pair, const std::string& kind, json payload);

}  // namespace rees::io
