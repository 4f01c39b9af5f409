#pragma once

// prabhakar command-line front end. run() is separate from main() so the
// tests can drive it with in-memory streams.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prabhakar/laplace.hpp"
#include "prabhakar/maxwell.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/response.hpp"
#include "prabhakar/table.hpp"
#include "prabhakar/verify.hpp"

namespace prabhakar::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default policy, honoring PRABHAKAR_MAX_TERMS.
inline TruncationPolicy policy_from_env(TruncationPolicy base = {}) {
  if (const char* env = std::getenv("PRABHAKAR_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw UsageError(std::string("PRABHAKAR_MAX_TERMS must be a positive integer, got '") + env + "'");
    base.max_terms = static_cast<std::size_t>(v);
  }
  return base;
}

inline MaterialParams parse_params(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), x);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size())
      throw UsageError("--params: '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 6) throw UsageError("--params expects a,b,alpha,beta,gamma,omega (6 numbers)");
  return {v[0], v[1], {v[2], v[3], v[4], v[5]}};
}

inline std::vector<double> time_grid(double tmin, double tmax, int points, bool log) {
  if (!(tmin > 0.0) || !(tmax >= tmin) || points < 1)
    throw UsageError("need 0 < tmin <= tmax and points >= 1");
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) {
    const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    t[i] = log ? tmin * std::pow(tmax / tmin, u) : tmin + (tmax - tmin) * u;
  }
  return t;
}

inline void emit(std::ostream& out, const OutputTable& table, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (std::size_t c = 0; c < table.names.size(); ++c) j[table.names[c]] = table.columns[c];
    out << j.dump() << '\n';
  } else {
    write_csv(out, table);
  }
}

inline nlohmann::ordered_json report_json(const ReductionReport& rep) {
  nlohmann::ordered_json j;
  j["variant"] = rep.variant;
  j["a"] = rep.mapped.a;
  j["b"] = rep.mapped.b;
  j["alpha"] = rep.mapped.p.alpha;
  j["beta"] = rep.mapped.p.beta;
  j["gamma"] = rep.mapped.p.gamma;
  j["omega"] = rep.mapped.p.omega;
  j["max_residual"] = rep.max_residual;
  j["flipped_residual"] = rep.flipped_residual;
  j["sign_mismatch"] = rep.sign_mismatch;
  j["series_condition_fraction"] = rep.series_condition_fraction;
  j["operator_order_supported"] = rep.operator_order_supported;
  j["notes"] = rep.notes;
  return j;
}

/// Linear interpolation of (t, v) samples onto t_i = i h, i = 0..n-1.
inline SampledSignal resample(const OutputTable& table, double h, std::size_t n) {
  if (table.columns.size() < 2) throw UsageError("input CSV needs at least two columns (t,value)");
  const auto& t = table.columns[0];
  const auto& v = table.columns[1];
  if (t.size() < 2) throw UsageError("input CSV needs at least two rows");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw UsageError("input CSV: t must be strictly increasing");
  const double t_end = h * static_cast<double>(n - 1);
  if (t.front() != 0.0 || t.back() < t_end * (1.0 - 1e-12))
    throw UsageError("input CSV must start at t = 0 and cover [0, tend]");
  SampledSignal s{0.0, h, std::vector<double>(n)};
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::min(s.time(i), t.back());
    while (k + 2 < t.size() && t[k + 1] < x) ++k;
    const double w = (x - t[k]) / (t[k + 1] - t[k]);
    s.values[i] = w <= 0.0 ? v[k] : w >= 1.0 ? v[k + 1] : v[k] + w * (v[k + 1] - v[k]);
  }
  return s;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prabhakar fractional calculus and Maxwell-Prabhakar viscoelasticity"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  std::string format = "csv";

  // mlf
  auto* mlf_cmd = app.add_subcommand("mlf", "evaluate E^gamma_{alpha,beta}(z)");
  double alpha = 0, beta = 0, gamma = 1, z = 0;
  mlf_cmd->add_option("--alpha", alpha)->required();
  mlf_cmd->add_option("--beta", beta)->required();
  mlf_cmd->add_option("--gamma", gamma)->required();
  mlf_cmd->add_option("--z", z)->required();

  // kernel | creep | relax
  std::string params_text;
  double tmin = 0, tmax = 0;
  int points = 0;
  bool log_grid = false;
  std::vector<CLI::App*> table_cmds;
  for (const char* name : {"kernel", "creep", "relax"}) {
    auto* c = app.add_subcommand(name, std::string("tabulate ") + name + " over t");
    c->add_option("--params", params_text, "a,b,alpha,beta,gamma,omega")->required();
    c->add_option("--tmin", tmin)->required();
    c->add_option("--tmax", tmax)->required();
    c->add_option("--points", points)->required();
    c->add_flag("--log", log_grid, "log-spaced grid");
    c->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table_cmds.push_back(c);
  }

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "map a classical model onto Maxwell-Prabhakar");
  std::string model, variant = "i";
  double A = 0, B = 0, M = 0, nu = 0;
  reduce_cmd->add_option("--model", model)->required()->check(CLI::IsMember({"maxwell", "voigt", "zener"}));
  reduce_cmd->add_option("--variant", variant)->check(CLI::IsMember({"i", "ii"}));
  reduce_cmd->add_option("--A", A);
  reduce_cmd->add_option("--B", B)->required();
  reduce_cmd->add_option("--M", M);
  reduce_cmd->add_option("--nu", nu)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  std::optional<double> rtol;
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"mlf", "laplace", "operators", "material", "reductions", "all"}));
  verify_cmd->add_option("--rtol", rtol, "series truncation rtol");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "stress/strain response by superposition");
  std::string mode, input, drive = "strain";
  double h = 0, tend = 0, amplitude = 1.0;
  sim_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"creep", "relaxation", "custom"}));
  sim_cmd->add_option("--input", input, "CSV t,value (custom mode)");
  sim_cmd->add_option("--params", params_text, "a,b,alpha,beta,gamma,omega")->required();
  sim_cmd->add_option("--h", h)->required();
  sim_cmd->add_option("--tend", tend)->required();
  sim_cmd->add_option("--amplitude", amplitude);
  sim_cmd->add_option("--drive", drive, "custom input is strain or stress")
      ->check(CLI::IsMember({"strain", "stress"}));
  sim_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    const TruncationPolicy policy = policy_from_env();

    if (mlf_cmd->parsed()) {
      out << format_number(mlf3(alpha, beta, gamma, z, policy)) << '\n';
      return kOk;
    }

    for (auto* c : table_cmds) {
      if (!c->parsed()) continue;
      const MaterialParams mp = parse_params(params_text);
      const auto ts = time_grid(tmin, tmax, points, log_grid);
      std::vector<double> values(ts.size());
      const std::string name = c->get_name();
      if (name == "kernel") {
        for (std::size_t i = 0; i < ts.size(); ++i) values[i] = prabhakar_kernel(mp.p, ts[i], policy);
      } else if (name == "creep") {
        for (std::size_t i = 0; i < ts.size(); ++i) values[i] = creep_compliance(mp, ts[i], policy);
      } else {
        TruncationPolicy rp = policy;
        rp.rtol = std::max(rp.rtol, kRelaxationPolicy.rtol);
        RelaxationSeries g(mp, rp);
        for (std::size_t i = 0; i < ts.size(); ++i) values[i] = g.evaluate(ts[i]).value;
      }
      OutputTable table;
      table.add_column("t", ts);
      table.add_column("value", values);
      emit(out, table, format);
      return kOk;
    }

    if (reduce_cmd->parsed()) {
      const ClassicalModelSpec spec{*parse_classical_model(model), A, B, M, nu};
      out << report_json(reduce_to_classical(spec, variant)).dump(2) << '\n';
      return kOk;
    }

    if (verify_cmd->parsed()) {
      TruncationPolicy vp = policy;
      if (rtol) vp.rtol = *rtol;
      vp.validate();
      verify::Suite results;
      auto append = [&](const verify::Suite& s) { results.insert(results.end(), s.begin(), s.end()); };
      if (suite == "mlf" || suite == "all") append(verify::mlf_suite(vp));
      if (suite == "laplace" || suite == "all") append(verify::laplace_suite());
      if (suite == "operators" || suite == "all") append(verify::operators_suite(vp));
      if (suite == "material" || suite == "all") append(verify::material_suite(vp));
      if (suite == "reductions" || suite == "all") append(verify::reductions_suite());
      for (const auto& r : results)
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
      return verify::all_passed(results) ? kOk : kVerifyFailed;
    }

    if (sim_cmd->parsed()) {
      const MaterialParams mp = parse_params(params_text);
      ExperimentSpec spec{mode == "creep" ? ExperimentMode::creep
                          : mode == "relaxation" ? ExperimentMode::relaxation
                                                 : ExperimentMode::custom,
                          amplitude, tend, h};
      spec.validate();
      ExperimentResult res;
      bool strain_driven = mode == "relaxation";
      if (spec.mode == ExperimentMode::custom) {
        if (input.empty()) throw UsageError("simulate --mode custom needs --input file.csv");
        std::ifstream in(input);
        if (!in) throw UsageError("cannot open input file '" + input + "'");
        res.input = resample(read_csv(in), h, spec.points());
        strain_driven = drive == "strain";
        if (strain_driven) {
          TruncationPolicy rp = policy;
          rp.rtol = std::max(rp.rtol, kRelaxationPolicy.rtol);
          res.response = simulate_stress(res.input, mp, rp);
        } else {
          res.response = simulate_strain(res.input, mp, policy, &res.warnings);
        }
      } else {
        res = run_step_experiment(spec, mp, policy);
      }
      for (const auto& w : res.warnings) err << "warning: " << w << '\n';
      std::vector<double> ts(res.input.size());
      for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = res.input.time(i);
      OutputTable table;
      table.add_column("t", ts);
      table.add_column(strain_driven ? "strain" : "stress", res.input.values);
      table.add_column(strain_driven ? "stress" : "strain", res.response.values);
      emit(out, table, format);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace prabhakar::cli
