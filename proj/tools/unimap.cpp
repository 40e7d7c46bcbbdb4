// Command-line surface: exact tables, exhaustive verification runs, and
// conjecture probes. Everything is deterministic; stdout carries the result,
// stderr the timings and diagnostics.
//
// Exit codes: 0 pass, 1 usage error, 2 internal disagreement or failed
// verification, 3 conjecture counterexample, 4 refused (enumeration cap).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "unimap/unimap.hpp"

namespace {

using nlohmann::json;
using namespace unimap;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitRefused = 4;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit_verdict(const std::string& command, const std::string& target,
                  const json& params, const std::string& verdict,
                  const std::string& witness = "") {
  json out{{"command", command},
           {"target", target},
           {"params", params},
           {"verdict", verdict}};
  if (!witness.empty()) out["witness"] = witness;
  std::cout << out.dump() << "\n";
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableRow {
  int a = 0;
  long b = 0;
  Int value;
};

int run_table(const std::string& kind, int g_max, long n_max,
              const std::string& format) {
  std::vector<TableRow> rows;
  std::string col_a = "g", col_b = "t";
  if (kind == "a" || kind == "kappa") {
    CountTable t = kind == "a" ? a_table(g_max) : kappa_table(g_max);
    for (int g = 1; g <= g_max; ++g)
      for (int tt = 1; tt <= g; ++tt) rows.push_back({g, tt, t.at(g, tt)});
  } else if (kind == "s") {
    col_b = "n";
    for (int g = 1; g <= g_max; ++g) {
      ExactPoly sp = S_poly(g);
      for (long n = 2 * g; n <= 6 * g - 2 && n <= n_max; ++n) {
        Int value = s_gn(g, n);
        if (Rat(value) != sp.coeff(static_cast<int>(n)))
          throw DisagreementError(
              "s_g(n) disagrees with the generating polynomial at g=" +
              std::to_string(g) + " n=" + std::to_string(n));
        rows.push_back({g, n, value});
      }
    }
  } else if (kind == "epsilon") {
    col_b = "n";
    auto hz = epsilon_hz(g_max, n_max);
    for (int g = 0; g <= g_max; ++g)
      for (long n = 2 * g; n <= n_max; ++n) {
        if (hz[g][n] != epsilon_closed(g, n))
          throw DisagreementError(
              "recursion and closed form disagree at g=" + std::to_string(g) +
              " n=" + std::to_string(n));
        rows.push_back({g, n, hz[g][n]});
      }
  } else {
    std::cerr << "unknown table kind: " << kind << "\n";
    return kExitUsage;
  }

  if (format == "csv") {
    std::cout << col_a << "," << col_b << ",value\n";
    for (const auto& r : rows)
      std::cout << r.a << "," << r.b << "," << r.value.get_str() << "\n";
  } else {
    json out{{"kind", kind}, {"rows", json::array()}};
    for (const auto& r : rows)
      out["rows"].push_back(
          {{col_a, r.a}, {col_b, r.b}, {"value", r.value.get_str()}});
    std::cout << out.dump() << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& target, int n, int g, int g_max, long order,
               int threads, bool force, bool trace) {
  TraceSink sink = [](const json& j) { std::cout << j.dump() << "\n"; };
  const TraceSink* sp = trace ? &sink : nullptr;
  EnumConfig cfg;
  cfg.threads = threads;
  cfg.force = force;

  json params;
  Verdict v;
  if (target == "phi") {
    int scale = n > 0 ? n : 8;
    params["n"] = scale;
    v = verify_phi(scale, sp);
  } else if (target == "remy") {
    int scale = n > 0 ? n : 8;
    params["n"] = scale;
    v = verify_remy(scale, sp);
  } else if (target == "pi") {
    int scale = n > 0 ? n : 7;
    params["max_edges"] = scale;
    v = verify_pi(scale, sp);
    if (v.pass) v &= verify_permissible(scale, sp);
  } else if (target == "nonminimal") {
    int scale = n > 0 ? n : 9;
    params["n"] = scale;
    v = verify_nonminimal(scale, sp);
  } else if (target == "beta") {
    int scale = n > 0 ? n : 9;
    params["max_elements"] = scale;
    v = verify_beta(scale, sp);
  } else if (target == "kappadec") {
    int scale = n > 0 ? n : 6;
    params["max_edges"] = scale;
    v = verify_kappadec(scale, sp);
  } else if (target == "series") {
    long ord = order > 0 ? order : 20;
    params["order"] = ord;
    if (g > 0) {
      params["g"] = g;
      v = verify_series(g, ord);
    } else {
      int cap = g_max > 0 ? g_max : 4;
      params["g_max"] = cap;
      for (int gg = 1; gg <= cap && v.pass; ++gg) v &= verify_series(gg, ord);
    }
  } else if (target == "functional") {
    long ord = order > 0 ? order : 20;
    params["order"] = ord;
    if (g > 0) {
      params["g"] = g;
      v = verify_functional_relation(g, ord);
    } else {
      int cap = g_max > 0 ? g_max : 4;
      params["g_max"] = cap;
      for (int gg = 1; gg <= cap && v.pass; ++gg)
        v &= verify_functional_relation(gg, ord);
    }
  } else if (target == "egf") {
    long ord = order > 0 ? order : 12;
    params["order"] = ord;
    auto [va, vk] = verify_egf(ord);
    v = va;
    v &= vk;
  } else if (target == "adif") {
    int cap = g_max > 0 ? g_max : 5;
    params["g_max"] = cap;
    v = verify_adif(cap);
    v &= verify_dh(cap);
  } else if (target == "degmultiset") {
    int nn = n > 0 ? n : 3;
    int gg = g >= 0 ? g : 1;
    params["n"] = nn;
    params["g"] = gg;
    v = verify_degmultiset(nn, gg, cfg);
  } else {
    std::cerr << "unknown verify target: " << target << "\n";
    return kExitUsage;
  }

  emit_verdict("verify", target, params, v.pass ? "pass" : "fail", v.witness);
  return v.pass ? kExitPass : kExitInternal;
}

// ---------------------------------------------------------------------------
// conjecture
// ---------------------------------------------------------------------------

int run_conjecture(const std::string& which, int g_max, int depth,
                   const std::string& sequence) {
  json params{{"g_max", g_max}};
  if (which == "K" || which == "S") {
    auto reports =
        which == "K" ? check_K_conjecture(g_max) : check_S_conjecture(g_max);
    for (const auto& r : reports) {
      if (!r.real_rooted || !r.located) {
        json witness{{"polynomial", r.id},
                     {"degree", r.degree},
                     {"distinct_real_roots", r.distinct_real_roots},
                     {"roots_in_interval", r.roots_in_interval}};
        emit_verdict("conjecture", which, params, "counterexample",
                     witness.dump());
        return kExitCounterexample;
      }
    }
    emit_verdict("conjecture", which, params, "pass");
    return kExitPass;
  }
  if (which == "loglevel") {
    params["depth"] = depth;
    params["sequence"] = sequence;
    for (int g = 1; g <= g_max; ++g) {
      std::vector<Int> row;
      if (sequence == "kappa" || sequence == "a") {
        row.push_back(0);
        for (int t = 1; t <= g; ++t)
          row.push_back(sequence == "kappa" ? kappa_gt(g, t) : a_gt(g, t));
      } else if (sequence == "s") {
        for (long n = 2 * g; n <= 6 * g - 2; ++n) row.push_back(s_gn(g, n));
      } else {
        std::cerr << "unknown sequence: " << sequence << "\n";
        return kExitUsage;
      }
      auto rep = k_log_concave(sequence + "_" + std::to_string(g), row, depth);
      if (!rep.pass) {
        json witness{{"sequence", rep.id},
                     {"depth", rep.violation_depth},
                     {"index", rep.violation_index}};
        emit_verdict("conjecture", which, params, "counterexample",
                     witness.dump());
        return kExitCounterexample;
      }
    }
    emit_verdict("conjecture", which, params, "pass");
    return kExitPass;
  }
  std::cerr << "unknown conjecture: " << which << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and verification for one-face maps, "
               "O-trees and shapes"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "print a value table");
  std::string table_kind;
  int table_gmax = 5;
  long table_nmax = 8;
  std::string table_format = "csv";
  table->add_option("kind", table_kind, "a | kappa | s | epsilon")->required();
  table->add_option("--g-max", table_gmax, "largest genus");
  table->add_option("--n-max", table_nmax, "largest edge count (s, epsilon)");
  table->add_option("--format", table_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run an exhaustive check");
  std::string verify_target;
  int verify_n = 0, verify_g = -1, verify_gmax = 0, verify_threads = 0;
  long verify_order = 0;
  bool verify_force = false, verify_trace = false;
  verify
      ->add_option("target", verify_target,
                   "phi | remy | pi | nonminimal | beta | kappadec | series | "
                   "egf | functional | adif | degmultiset")
      ->required();
  verify->add_option("--n", verify_n, "size bound (meaning depends on target)");
  verify->add_option("--g", verify_g, "single genus");
  verify->add_option("--g-max", verify_gmax, "largest genus");
  verify->add_option("--order", verify_order, "series truncation order");
  verify->add_option("--threads", verify_threads,
                     "enumeration threads (0 = all cores)");
  verify->add_flag("--force", verify_force, "override enumeration caps");
  verify->add_flag("--trace", verify_trace, "emit one JSON line per item");

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "probe a conjecture");
  std::string conj_which, conj_seq = "kappa";
  int conj_gmax = 8, conj_depth = 5;
  conj->add_option("probe", conj_which, "K | S | loglevel")->required();
  conj->add_option("--g-max", conj_gmax, "largest genus");
  conj->add_option("--depth", conj_depth, "log-concavity depth");
  conj->add_option("--which", conj_seq, "sequence for loglevel: kappa | s | a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Timer timer;
  int rc = kExitInternal;
  try {
    if (table->parsed())
      rc = run_table(table_kind, table_gmax, table_nmax, table_format);
    else if (verify->parsed())
      rc = run_verify(verify_target, verify_n, verify_g, verify_gmax,
                      verify_order, verify_threads, verify_force,
                      verify_trace);
    else if (conj->parsed())
      rc = run_conjecture(conj_which, conj_gmax, conj_depth, conj_seq);
  } catch (const CapExceededError& e) {
    emit_verdict("error", "", json::object(), "refused", e.what());
    rc = kExitRefused;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    rc = kExitInternal;
  }
  std::cerr << "elapsed_ms=" << timer.ms() << "\n";
  return rc;
}
