#include "rees/cli.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rees/adjoint.hpp"
#include "rees/cas_script.hpp"
#include "rees/crosscheck.hpp"
#include "rees/serialize.hpp"
#include "rees/text.hpp"

namespace rees::cli {

using euclid::Int;
using euclid::PairData;

namespace {

struct Options {
  std::string format = "text";
  bool allow_swap = false;
  Int d = 0, u = 0;
  int level = 1;
  bool oracle = false;
  double deadline = 0;
  Int ell = -1;
  Int dmax = 0;
};

Deadline make_deadline(double secs) {
  return secs > 0 ? Deadline::after(std::chrono::duration<double>(secs)) : Deadline();
}

std::string bideg_text(const poly::Bidegree& b) {
  return "(" + std::to_string(b.t) + "," + std::to_string(b.x) + ")";
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void unsupported(const std::string& cmd, const std::string& fmt) {
  throw Error(ErrorCode::OutOfRange, "format " + fmt + " is not available for " + cmd);
}

void emit_json(std::ostream& out, const io::json& doc) { out << doc.dump(2) << "\n"; }

int cmd_euclid(const Options& o, const PairData& pd, std::ostream& out) {
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "euclid", io::to_json(io::EuclidPayload::make(pd))));
    return kOk;
  }
  if (o.format != "text") unsupported("euclid", o.format);
  const auto& e = pd.euclid;
  const auto& s = pd.sers;
  out << "a: " << join(e.a_seq) << "\n";
  out << "q_seq: " << join(e.q_seq) << "\n";
  out << "p: " << e.p << "\nq: " << e.q << "\n";
  out << "s,t:";
  for (std::size_t i = 0; i < e.s_seq.size(); ++i)
    out << " (" << e.s_seq[i] << "," << e.t_seq[i] << ")";
  out << "\nm: " << join(s.m_seq()) << "\n";
  out << "n b c sigma tau alpha beta ell rho\n";
  for (Int n = 1; n <= pd.q() + 1; ++n) {
    const auto x = s.quad(n);
    out << n << " " << s.b(n) << " " << s.c(n) << " " << x.sigma << " " << x.tau << " "
        << x.alpha << " " << x.beta << " " << s.ell(n) << " "
        << (n <= pd.q() ? std::to_string(s.rho(n)) : "-") << "\n";
  }
  return kOk;
}

int cmd_generators(const Options& o, const PairData& pd, std::ostream& out) {
  const auto order = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "generators", io::to_json(f0, order)));
  } else if (o.format == "cas-script") {
    out << io::export_cas_script(pd, families::resolution(pd));
  } else {
    for (const auto& f : f0.elements) out << poly::to_string(f, order) << "\n";
  }
  return kOk;
}

int cmd_syzygies(const Options& o, const PairData& pd, std::ostream& out) {
  const auto order = families::base_order(pd);
  const auto f0 = families::f0_family(pd);
  const auto f1 = families::f1_family(pd, f0);
  if (o.format == "cas-script") {
    out << io::export_cas_script(pd, families::resolution(pd));
    return kOk;
  }
  if (o.level == 1) {
    if (o.format == "json") {
      emit_json(out, io::document(pd.pair, "syzygies", io::to_json(f1, order)));
      return kOk;
    }
    const auto labels = poly::default_labels(f0.elements.size());
    const auto names = f1.text_labels();
    for (std::size_t i = 0; i < f1.elements.size(); ++i)
      out << "s" << names[i] << " " << bideg_text(f1.twists[i]) << ": "
          << poly::to_string(f1.elements[i], order, labels) << "\n";
    return kOk;
  }
  const auto f2 = families::f2_family(pd, f1);
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "syzygies", io::to_json(f2, f1, order)));
    return kOk;
  }
  const auto basis = f1.text_labels();
  const auto names = f2.text_labels();
  for (std::size_t i = 0; i < f2.elements.size(); ++i)
    out << "s" << names[i] << " " << bideg_text(f2.twists[i]) << ": "
        << poly::to_string(f2.elements[i], order, basis) << "\n";
  return kOk;
}

int cmd_resolution(const Options& o, const PairData& pd, std::ostream& out) {
  const auto order = families::base_order(pd);
  const auto r = families::resolution(pd);
  const auto f1 = families::f1_family(pd, families::f0_family(pd));
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "resolution", io::to_json(r, f1, order)));
    return kOk;
  }
  if (o.format == "cas-script") {
    out << io::export_cas_script(pd, r);
    return kOk;
  }
  const auto rk = r.ranks();
  out << "ranks: " << rk[0] << " " << rk[1] << " " << rk[2] << " " << rk[3] << "\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out << "F" << i << ":";
    for (const auto& b : r.twists[i]) out << " S(" << -b.t << "," << -b.x << ")";
    out << "\n";
  }
  out << "Phi1:\n";
  for (const auto& p : r.phi1) out << "  " << poly::to_string(p, order) << "\n";
  out << "Phi2:\n";
  const auto b1 = poly::default_labels(r.phi1.size());
  for (const auto& c : r.phi2) out << "  " << poly::to_string(c, order, b1) << "\n";
  out << "Phi3:\n";
  const auto b2 = f1.text_labels();
  for (const auto& c : r.phi3) out << "  " << poly::to_string(c, order, b2) << "\n";
  return kOk;
}

int cmd_betti(const Options& o, const PairData& pd, std::ostream& out) {
  const auto t = families::betti_numbers(pd);
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "betti", io::to_json(t)));
    return kOk;
  }
  if (o.format != "text") unsupported("betti", o.format);
  for (std::size_t i = 0; i < 4; ++i) {
    out << "position " << i << ":";
    for (const auto& [b, k] : t[i]) out << " " << bideg_text(b) << (k > 1 ? "^" + std::to_string(k) : "");
    out << "\n";
  }
  return kOk;
}

families::TheoremReport full_report(const PairData& pd, bool oracle, const Deadline& dl) {
  auto rep = families::verify_theorems(pd, dl);
  if (oracle)
    for (const auto& [name, ok] : crosscheck::oracle_report(pd, dl).checks)
      rep.set("oracle_" + name, ok);
  return rep;
}

int cmd_verify(const Options& o, const PairData& pd, std::ostream& out) {
  const auto rep = full_report(pd, o.oracle, make_deadline(o.deadline));
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "verify", io::to_json(rep)));
  } else if (o.format == "cas-script") {
    out << io::export_cas_script(pd, families::resolution(pd));
  } else {
    for (const auto& [name, ok] : rep.checks) out << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    out << "all: " << (rep.all() ? "ok" : "FAIL") << "\n";
  }
  return rep.all() ? kOk : kVerificationFailed;
}

std::string exponent_list(const adjoint::ExponentSet& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : s) {
    os << (first ? "" : " ") << "(" << e[0] << "," << e[1] << "," << e[2] << ")";
    first = false;
  }
  return os.str();
}

int cmd_adjoint(const Options& o, const PairData& pd, std::ostream& out) {
  const Int ell = o.ell >= 0 ? o.ell : pd.d() - 2;
  const auto r = adjoint::adjoint_report(pd, ell);
  if (o.format == "json") {
    emit_json(out, io::document(pd.pair, "adjoint", io::to_json(r)));
    return kOk;
  }
  if (o.format != "text") unsupported("adjoint", o.format);
  out << "ell: " << r.ell << (r.below_threshold ? " (below d-2)" : "") << "\n";
  out << "dim Adj: " << r.dim_adj << "\n";
  out << "dim ker(1,ell): " << r.dim_ker_1 << "\n";
  out << "nu: " << r.nu.value << " = " << join(std::vector<Int>(r.nu.breakdown.begin(), r.nu.breakdown.end()), "+")
      << (r.nu.disjoint ? "" : " (branches overlap)") << "\n";
  out << "nu by j-values: " << r.nu.by_j_values << "\n";
  out << "bound d^2-6d+6: " << r.bound << "\n";
  for (const auto& s : r.singular)
    out << "singular (" << s.point[0] << ":" << s.point[1] << ":" << s.point[2]
        << ") multiplicity " << s.multiplicity << "\n";
  out << "alpha conditions: " << exponent_list(r.forbidden_alpha) << "\n";
  out << "beta conditions: " << exponent_list(r.forbidden_beta) << "\n";
  return kOk;
}

struct SweepResult {
  Int d = 0, u = 0;
  std::vector<std::string> failed;
  std::string error;
  bool deadline = false;
};

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int d = 3; d <= o.dmax; ++d)
    for (Int u = 1; 2 * u < d; ++u)
      if (std::gcd(d, u) == 1) pairs.emplace_back(d, u);
  std::vector<SweepResult> results(pairs.size());
  const Deadline dl = make_deadline(o.deadline);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      SweepResult& r = results[i];
      r.d = pairs[i].first;
      r.u = pairs[i].second;
      try {
        const auto pd = PairData::make(euclid::validate(r.d, r.u));
        for (const auto& [name, ok] : full_report(pd, o.oracle, dl).checks)
          if (!ok) r.failed.push_back(name);
      } catch (const Error& e) {
        r.deadline = e.code() == ErrorCode::DeadlineExceeded;
        r.error = e.what();
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t bad = 0;
  bool timed_out = false;
  io::json rows = io::json::array();
  for (const auto& r : results) {
    const bool ok = r.failed.empty() && r.error.empty();
    bad += !ok;
    timed_out = timed_out || r.deadline;
    if (o.format == "json") {
      rows.push_back({{"d", r.d}, {"u", r.u}, {"ok", ok}, {"failed", r.failed}, {"error", r.error}});
    } else {
      out << r.d << " " << r.u << " " << (ok ? "ok" : "FAIL");
      if (!r.failed.empty()) out << " " << join(r.failed, ",");
      if (!r.error.empty()) out << " error: " << r.error;
      out << "\n";
    }
  }
  if (o.format == "json") {
    emit_json(out, {{"schema_version", io::kSchemaVersion},
                    {"kind", "sweep"},
                    {"input", {{"dmax", o.dmax}, {"oracle", o.oracle}}},
                    {"payload", {{"pairs", rows}, {"failures", bad}}}});
  } else {
    out << pairs.size() << " pairs, " << bad << " failures\n";
  }
  if (timed_out) return kDeadline;
  return bad ? kVerificationFailed : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Minimal bigraded resolution of the Rees algebra of (T0^d : T0^(d-u) T1^u : T1^d)"};
  app.name("rees");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "cas-script"}));
  app.add_flag("--allow-swap", o.allow_swap, "Accept d/2 < u < d and use (d, d-u)");

  auto pair_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("d", o.d, "Curve degree")->required();
    c->add_option("u", o.u, "Inner exponent")->required();
    return c;
  };
  CLI::App* c_euclid = pair_cmd("euclid", "Remainder sequences and index maps");
  CLI::App* c_gen = pair_cmd("generators", "Minimal generators of the kernel");
  CLI::App* c_syz = pair_cmd("syzygies", "First or second syzygies");
  c_syz->add_option("--level", o.level, "1 or 2")->check(CLI::Range(1, 2));
  CLI::App* c_res = pair_cmd("resolution", "Twists and maps of the resolution");
  CLI::App* c_betti = pair_cmd("betti", "Bigraded Betti numbers");
  CLI::App* c_verify = pair_cmd("verify", "Check the closed forms");
  c_verify->add_flag("--oracle", o.oracle, "Also compare with elimination and fresh syzygies");
  c_verify->add_option("--deadline", o.deadline, "Seconds before giving up");
  CLI::App* c_adj = pair_cmd("adjoint", "Adjoint pencil counts (u > 1)");
  c_adj->add_option("--ell", o.ell, "Degree ell (default d-2)");
  CLI::App* c_sweep = app.add_subcommand("sweep", "Verify every pair up to dmax");
  c_sweep->add_option("--dmax", o.dmax, "Largest d")->required();
  c_sweep->add_flag("--oracle", o.oracle, "Include oracle comparisons");
  c_sweep->add_option("--deadline", o.deadline, "Seconds before giving up");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (c_sweep->parsed()) return cmd_sweep(o, out);
    const auto pd = PairData::make(euclid::validate(o.d, o.u, o.allow_swap));
    if (c_euclid->parsed()) return cmd_euclid(o, pd, out);
    if (c_gen->parsed()) return cmd_generators(o, pd, out);
    if (c_syz->parsed()) return cmd_syzygies(o, pd, out);
    if (c_res->parsed()) return cmd_resolution(o, pd, out);
    if (c_betti->parsed()) return cmd_betti(o, pd, out);
    if (c_verify->parsed()) return cmd_verify(o, pd, out);
    if (c_adj->parsed()) return cmd_adjoint(o, pd, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::DeadlineExceeded ? kDeadline : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace rees::cli
