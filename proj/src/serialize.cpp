#include "rees/serialize.hpp"

#include "rees/text.hpp"

namespace rees::io {

using families::Bidegree;

namespace {

json bideg(const Bidegree& b) { return json::array({b.t, b.x}); }
Bidegree bideg_from(const json& j) { return {j.at(0).get<Int>(), j.at(1).get<Int>()}; }

json bidegs(const std::vector<Bidegree>& v) {
  json out = json::array();
  for (const auto& b : v) out.push_back(bideg(b));
  return out;
}

std::vector<Bidegree> bidegs_from(const json& j) {
  std::vector<Bidegree> out;
  for (const auto& x : j) out.push_back(bideg_from(x));
  return out;
}

std::vector<std::string> pair_labels(const families::SyzygyFamilyOne& f) { return f.text_labels(); }

json elements(const std::vector<poly::ModuleElement>& elems, const poly::TermOrder& order,
              const std::vector<std::string>& basis) {
  json out = json::array();
  for (const auto& e : elems) out.push_back(poly::to_string(e, order, basis));
  return out;
}

std::vector<poly::ModuleElement> elements_from(const json& j,
                                               const std::vector<std::string>& basis) {
  std::vector<poly::ModuleElement> out;
  for (const auto& s : j) out.push_back(poly::parse_module_element(s.get<std::string>(), basis));
  return out;
}

json exponents(const adjoint::ExponentSet& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(json::array({e[0], e[1], e[2]}));
  return out;
}

adjoint::ExponentSet exponents_from(const json& j) {
  adjoint::ExponentSet out;
  for (const auto& e : j) out.insert({e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>()});
  return out;
}

}  // namespace

EuclidPayload EuclidPayload::make(const euclid::PairData& pd) {
  EuclidPayload p;
  p.d = pd.d();
  p.u = pd.u();
  p.euclid = pd.euclid;
  const auto& s = pd.sers;
  p.b = s.b_seq();
  p.c = s.c_seq();
  p.m = s.m_seq();
  p.quads = s.quads();
  for (Int n = 1; n <= pd.q() + 1; ++n) p.ell.push_back(s.ell(n));
  for (Int n = 1; n <= pd.q(); ++n) p.rho.push_back(s.rho(n));
  return p;
}

json to_json(const EuclidPayload& p) {
  json quads = json::array();
  for (const auto& x : p.quads) quads.push_back(json::array({x.sigma, x.tau, x.alpha, x.beta}));
  return {{"d", p.d},
          {"u", p.u},
          {"a", p.euclid.a_seq},
          {"q_seq", p.euclid.q_seq},
          {"s", p.euclid.s_seq},
          {"t", p.euclid.t_seq},
          {"p", p.euclid.p},
          {"q", p.euclid.q},
          {"b", p.b},
          {"c", p.c},
          {"m", p.m},
          {"ell", p.ell},
          {"rho", p.rho},
          {"sigma_tau_alpha_beta", quads}};
}

EuclidPayload euclid_from_json(const json& j) {
  EuclidPayload p;
  p.d = j.at("d").get<Int>();
  p.u = j.at("u").get<Int>();
  p.euclid.a_seq = j.at("a").get<std::vector<Int>>();
  p.euclid.q_seq = j.at("q_seq").get<std::vector<Int>>();
  p.euclid.s_seq = j.at("s").get<std::vector<Int>>();
  p.euclid.t_seq = j.at("t").get<std::vector<Int>>();
  p.euclid.p = j.at("p").get<Int>();
  p.euclid.q = j.at("q").get<Int>();
  p.b = j.at("b").get<std::vector<Int>>();
  p.c = j.at("c").get<std::vector<Int>>();
  p.m = j.at("m").get<std::vector<Int>>();
  p.ell = j.at("ell").get<std::vector<Int>>();
  p.rho = j.at("rho").get<std::vector<Int>>();
  for (const auto& x : j.at("sigma_tau_alpha_beta"))
    p.quads.push_back({x.at(0).get<Int>(), x.at(1).get<Int>(), x.at(2).get<Int>(),
                       x.at(3).get<Int>()});
  return p;
}

json to_json(const families::GeneratorFamily& f, const poly::TermOrder& order) {
  json polys = json::array();
  for (const auto& p : f.elements) polys.push_back(poly::to_string(p, order));
  return {{"order", poly::to_string(order.variant())},
          {"elements", polys},
          {"bidegrees", bidegs(f.bidegrees)}};
}

families::GeneratorFamily generators_from_json(const json& j) {
  families::GeneratorFamily f;
  for (const auto& s : j.at("elements")) f.elements.push_back(poly::parse_polynomial(s.get<std::string>()));
  f.bidegrees = bidegs_from(j.at("bidegrees"));
  return f;
}

json to_json(const families::SyzygyFamilyOne& f, const poly::TermOrder& order) {
  const std::size_t rank = f.elements.empty() ? 0 : f.elements.front().rank();
  json labels = json::array();
  for (const auto& [n, k] : f.labels) labels.push_back(json::array({n, k}));
  return {{"level", 1},
          {"labels", labels},
          {"basis", poly::default_labels(rank)},
          {"elements", elements(f.elements, order, poly::default_labels(rank))},
          {"twists", bidegs(f.twists)}};
}

families::SyzygyFamilyOne syzygies_one_from_json(const json& j) {
  families::SyzygyFamilyOne f;
  for (const auto& l : j.at("labels")) f.labels.emplace_back(l.at(0).get<Int>(), l.at(1).get<Int>());
  f.elements = elements_from(j.at("elements"), j.at("basis").get<std::vector<std::string>>());
  f.twists = bidegs_from(j.at("twists"));
  return f;
}

json to_json(const families::SyzygyFamilyTwo& f, const families::SyzygyFamilyOne& basis,
             const poly::TermOrder& order) {
  json labels = json::array();
  for (const auto& l : f.labels) labels.push_back(json::array({l.n, l.rho, l.ell}));
  return {{"level", 2},
          {"labels", labels},
          {"basis", pair_labels(basis)},
          {"elements", elements(f.elements, order, pair_labels(basis))},
          {"twists", bidegs(f.twists)}};
}

families::SyzygyFamilyTwo syzygies_two_from_json(const json& j) {
  families::SyzygyFamilyTwo f;
  for (const auto& l : j.at("labels"))
    f.labels.push_back({l.at(0).get<Int>(), l.at(1).get<Int>(), l.at(2).get<Int>()});
  f.elements = elements_from(j.at("elements"), j.at("basis").get<std::vector<std::string>>());
  f.twists = bidegs_from(j.at("twists"));
  return f;
}

json to_json(const families::Resolution& r, const families::SyzygyFamilyOne& f1,
             const poly::TermOrder& order) {
  json twists = json::array();
  for (const auto& t : r.twists) twists.push_back(bidegs(t));
  json phi1 = json::array();
  for (const auto& p : r.phi1) phi1.push_back(poly::to_string(p, order));
  const auto basis1 = poly::default_labels(r.phi1.size());
  const auto basis2 = pair_labels(f1);
  const auto rk = r.ranks();
  return {{"ranks", json::array({rk[0], rk[1], rk[2], rk[3]})},
          {"twists", twists},
          {"phi1", phi1},
          {"phi2_basis", basis1},
          {"phi2", elements(r.phi2, order, basis1)},
          {"phi3_basis", basis2},
          {"phi3", elements(r.phi3, order, basis2)}};
}

families::Resolution resolution_from_json(const json& j) {
  families::Resolution r;
  for (std::size_t i = 0; i < 4; ++i) r.twists[i] = bidegs_from(j.at("twists").at(i));
  for (const auto& s : j.at("phi1")) r.phi1.push_back(poly::parse_polynomial(s.get<std::string>()));
  r.phi2 = elements_from(j.at("phi2"), j.at("phi2_basis").get<std::vector<std::string>>());
  r.phi3 = elements_from(j.at("phi3"), j.at("phi3_basis").get<std::vector<std::string>>());
  return r;
}

json to_json(const families::BettiTable& t) {
  json out = json::array();
  for (const auto& pos : t) {
    json entries = json::array();
    for (const auto& [b, k] : pos) entries.push_back({{"bidegree", bideg(b)}, {"count", k}});
    out.push_back(entries);
  }
  return {{"positions", out}};
}

families::BettiTable betti_from_json(const json& j) {
  families::BettiTable t;
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& e : j.at("positions").at(i))
      t[i][bideg_from(e.at("bidegree"))] = e.at("count").get<int>();
  return t;
}

json to_json(const families::TheoremReport& r) {
  json checks = json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"ok", ok}});
  return {{"checks", checks}, {"all", r.all()}};
}

families::TheoremReport report_from_json(const json& j) {
  families::TheoremReport r;
  for (const auto& c : j.at("checks"))
    r.checks.emplace_back(c.at("name").get<std::string>(), c.at("ok").get<bool>());
  return r;
}

json to_json(const adjoint::AdjointReport& r) {
  json sing = json::array();
  for (const auto& s : r.singular)
    sing.push_back({{"point", s.point}, {"multiplicity", s.multiplicity}});
  return {{"ell", r.ell},
          {"below_threshold", r.below_threshold},
          {"dim_adj", r.dim_adj},
          {"dim_ker_1", r.dim_ker_1},
          {"nu", r.nu.value},
          {"nu_breakdown", r.nu.breakdown},
          {"nu_disjoint", r.nu.disjoint},
          {"nu_checked_ells", r.nu.checked_ells},
          {"nu_by_j_values", r.nu.by_j_values},
          {"forbidden_alpha", exponents(r.forbidden_alpha)},
          {"forbidden_beta", exponents(r.forbidden_beta)},
          {"bound", r.bound},
          {"singular", sing}};
}

adjoint::AdjointReport adjoint_from_json(const json& j) {
  adjoint::AdjointReport r;
  r.ell = j.at("ell").get<Int>();
  r.below_threshold = j.at("below_threshold").get<bool>();
  r.dim_adj = j.at("dim_adj").get<Int>();
  r.dim_ker_1 = j.at("dim_ker_1").get<Int>();
  r.nu.value = j.at("nu").get<Int>();
  r.nu.breakdown = j.at("nu_breakdown").get<std::array<Int, 4>>();
  r.nu.disjoint = j.at("nu_disjoint").get<bool>();
  r.nu.checked_ells = j.at("nu_checked_ells").get<std::vector<Int>>();
  r.nu.by_j_values = j.at("nu_by_j_values").get<Int>();
  r.forbidden_alpha = exponents_from(j.at("forbidden_alpha"));
  r.forbidden_beta = exponents_from(j.at("forbidden_beta"));
  r.bound = j.at("bound").get<Int>();
  for (const auto& s : j.at("singular"))
    r.singular.push_back({s.at("point").get<std::array<Int, 3>>(), s.at("multiplicity").get<Int>()});
  return r;
}

json document(const euclid::InputPair& pair, const std::string& kind, json payload) {
  return {{"schema_version", kSchemaVersion},
          {"input", {{"d", pair.d}, {"u", pair.u}, {"swapped", pair.swapped}}},
          {"kind", kind},
          {"payload", std::move(payload)}};
}

}  // namespace rees::io
