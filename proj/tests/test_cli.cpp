#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rees/adjoint.hpp"
#include "rees/cas_script.hpp"
#include "rees/cli.hpp"
#include "rees/serialize.hpp"
#include "rees/verify.hpp"

using namespace rees;
using euclid::Int;
using euclid::PairData;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rees");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

PairData pair(Int d, Int u) { return PairData::make(euclid::validate(d, u)); }

}  // namespace

TEST_CASE("generators text") {
  const auto r = run({"generators", "10", "3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "T0^7*X2-T1^7*X1\nT0^4*X0*X2-T1^4*X1^2\nT0^3*X1-T1^3*X0\nT0^2*X1^4-T1^2*X0^3*X2\n"
        "T0*X1^7-T1*X0^5*X2^2\nT0*X0^2*X2-T1*X1^3\nX0^7*X2^3-X1^10\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"euclid", "10", "5"}).code == 1);
  CHECK(run({"euclid", "14", "11"}).code == 1);
  CHECK(run({"euclid", "14", "11", "--allow-swap"}).code == 0);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"generators", "10"}).code == 1);
  CHECK(run({"generators", "10", "3", "--format", "xml"}).code == 1);
  CHECK(run({"syzygies", "10", "3", "--level", "3"}).code == 1);
  CHECK(run({"adjoint", "10", "1"}).code == 1);
  CHECK(run({"verify", "10", "3", "--oracle"}).code == 0);
  CHECK(run({"verify", "10", "1"}).code == 2);
  CHECK(run({"verify", "29", "1", "--oracle", "--deadline", "0.000001"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("betti json") {
  const auto r = run({"betti", "14", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["kind"] == "betti");
  CHECK(j["input"]["d"] == 14);
  const auto t = io::betti_from_json(j["payload"]);
  std::vector<poly::Bidegree> p1;
  for (const auto& [b, k] : t[1]) p1.push_back(b);
  CHECK(p1 == std::vector<poly::Bidegree>{{0, 14}, {1, 5}, {1, 9}, {2, 4}, {3, 1}, {5, 3},
                                          {8, 2}, {11, 1}});
}

TEST_CASE("json round trips") {
  for (const auto [d, u] : {std::pair<Int, Int>{10, 3}, {14, 3}, {3, 1}}) {
    const auto pd = pair(d, u);
    const auto order = families::base_order(pd);
    const auto f0 = families::f0_family(pd);
    const auto f1 = families::f1_family(pd, f0);
    const auto f2 = families::f2_family(pd, f1);
    const auto res = families::resolution(pd);
    const auto reparse = [](const nlohmann::json& j) { return nlohmann::json::parse(j.dump()); };
    const auto ep = io::EuclidPayload::make(pd);
    CHECK(io::euclid_from_json(reparse(io::to_json(ep))) == ep);
    CHECK(io::generators_from_json(reparse(io::to_json(f0, order))) == f0);
    CHECK(io::syzygies_one_from_json(reparse(io::to_json(f1, order))) == f1);
    CHECK(io::syzygies_two_from_json(reparse(io::to_json(f2, f1, order))) == f2);
    CHECK(io::resolution_from_json(reparse(io::to_json(res, f1, order))) == res);
    const auto betti = families::betti_numbers(pd);
    CHECK(io::betti_from_json(reparse(io::to_json(betti))) == betti);
    const auto rep = families::verify_theorems(pd);
    CHECK(io::report_from_json(reparse(io::to_json(rep))) == rep);
  }
  const auto pd = pair(10, 3);
  for (const Int ell : {Int{5}, Int{8}, Int{12}}) {
    const auto a = adjoint::adjoint_report(pd, ell);
    CHECK(io::adjoint_from_json(nlohmann::json::parse(io::to_json(a).dump())) == a);
  }
}

TEST_CASE("json keys are sorted") {
  const auto r = run({"euclid", "10", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(r.out == j.dump(2) + "\n");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("cas script") {
  const auto pd = pair(10, 3);
  const auto s = io::export_cas_script(pd, families::resolution(pd));
  CHECK(s == io::export_cas_script(pd, families::resolution(pd)));
  CHECK(s.find("phi = map(S, R, {T0, T1, T0^10, T0^7*T1^3, T1^10});") != std::string::npos);
  CHECK(s.find("assert(numgens F0 == 7);") != std::string::npos);
  const auto small = pair(3, 1);
  CHECK(io::export_cas_script(small, families::resolution(small)).find("numgens F0 == 4") !=
        std::string::npos);
  CHECK(run({"resolution", "10", "3", "--format", "cas-script"}).out == s);
}

TEST_CASE("sweep is ordered") {
  const auto r = run({"sweep", "--dmax", "9"});
  CHECK(r.code == 2);  // u = 1 pairs fail the strict tau bound
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> heads;
  while (std::getline(in, line)) heads.push_back(line.substr(0, line.find(' ', line.find(' ') + 1)));
  CHECK(heads.front() == "3 1");
  CHECK(heads[1] == "4 1");
  CHECK(heads[2] == "5 1");
  CHECK(heads[3] == "5 2");
  CHECK(r.out.find("7 3 ok") != std::string::npos);
}
