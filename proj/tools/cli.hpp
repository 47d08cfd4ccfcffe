// Copyright 2026 The wernerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wernerlab/verify.hpp"
#include "wernerlab/wernerlab.hpp"

namespace wernerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

inline constexpr std::string_view kSchemaVersion = "wernerlab.output/1";

using Value = std::variant<double, long long, bool, std::string>;
using Fields = std::vector<std::pair<std::string, Value>>;

/// One command's output: echo of the command and its parameters plus results.
struct OutputRecord {
  std::string command;
  Fields params;
  Fields results;
};

/// Doubles go out as shortest round-trip decimals; non-finite values as the
/// strings "inf", "-inf" and "nan".
inline nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return format_double(x);
          return x;
        } else {
          return x;
        }
      },
      v);
}

inline nlohmann::ordered_json to_json(const Fields& fields) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields) obj[key] = to_json(value);
  return obj;
}

inline nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = record.command;
  j["params"] = to_json(record.params);
  j["results"] = to_json(record.results);
  return j;
}

inline std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

enum class Format { kJson, kCsv };

inline void emit(std::ostream& out, const OutputRecord& record, Format format) {
  if (format == Format::kJson) {
    out << to_json(record).dump() << '\n';
    return;
  }
  std::string header = "command", row = record.command;
  for (const Fields* fields : {&record.params, &record.results})
    for (const auto& [key, value] : *fields) {
      header += "," + key;
      row += "," + to_text(value);
    }
  out << header << '\n' << row << '\n';
}

inline Fields bounds_fields(const DiscriminationBounds& b) {
  return {{"lower", b.lower},
          {"qcb_upper", b.qcb_upper},
          {"fid_upper", b.fid_upper},
          {"helstrom_block", b.helstrom_block},
          {"ordered", b.ordered()}};
}

/// "2..6" or "2,3,5"
inline std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int d = lo; d <= hi; ++d) out.push_back(d);
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) out.push_back(std::stoi(item));
  }
  detail::require(!out.empty(), ErrorKind::kInvalidParameter, "empty dimension list '" + text + "'");
  for (int d : out) detail::require(d >= 2, ErrorKind::kInvalidDimension, "dimension " + std::to_string(d));
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    detail::require(used == item.size() && v >= 1, ErrorKind::kInvalidParameter, "bad copy count '" + item + "'");
    out.push_back(v);
  }
  detail::require(!out.empty(), ErrorKind::kInvalidParameter, "empty n list");
  return out;
}

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 usage error, 2 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Werner-state channel metrology: closed forms, matrix oracles and bound curves", "wernerlab"};
  app.require_subcommand(1);

  // Single computations default to JSON, grids to CSV.
  std::string format_name;
  app.add_option("--format", format_name, "Output format (json or csv)")->check(CLI::IsMember({"json", "csv"}));

  double eta = 0.0, zeta = 0.0, alpha = 0.0, beta = 0.0, step = 0.01, tol_scale = 1.0, grid = 0.1;
  int d = 2, n = 1;
  long long copies = 1, trials = 10000, verify_copies = 1000, verify_trials = 10000;
  std::uint64_t seed = 1;
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  int samples = 20;
  bool isotropic = false;
  std::string n_list = "1,10,100", out_path, dims_text = "2..6";

  auto* fidelity = app.add_subcommand("fidelity", "Fidelity between W_eta and W_zeta");
  fidelity->add_option("--eta", eta)->required();
  fidelity->add_option("--zeta", zeta)->required();

  auto* relent = app.add_subcommand("relent", "Relative entropies, delta S and the S quantity");
  relent->add_option("--eta", eta)->required();
  relent->add_option("--zeta", zeta)->required();

  auto* qcb = app.add_subcommand("qcb", "Quantum Chernoff bound (Werner, or isotropic with --isotropic)");
  qcb->add_option("--eta", eta);
  qcb->add_option("--zeta", zeta);
  qcb->add_flag("--isotropic", isotropic);
  qcb->add_option("--alpha", alpha);
  qcb->add_option("--beta", beta);
  qcb->add_option("--d", d);

  auto* estimate = app.add_subcommand("estimate", "QFI and Cramer-Rao floor; 'estimate sim' runs Monte Carlo");
  estimate->add_option("--eta", eta)->required();
  estimate->add_option("--n", copies)->required();
  auto* sim = estimate->add_subcommand("sim", "Monte-Carlo estimation experiment");
  sim->fallthrough();
  sim->add_option("--trials", trials);
  sim->add_option("--seed", seed);

  auto* discriminate = app.add_subcommand("discriminate", "Error-probability bounds for n channel uses");
  discriminate->add_option("--eta", eta)->required();
  discriminate->add_option("--zeta", zeta)->required();
  discriminate->add_option("--d", d);
  discriminate->add_option("--n", n)->required();

  auto* curves = app.add_subcommand("curves", "Bound curves over eta for a fixed zeta (CSV)");
  curves->add_option("--zeta", zeta)->required();
  curves->add_option("--n", n_list, "Comma-separated copy counts");
  curves->add_option("--step", step);
  curves->add_option("--d", d);
  curves->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* teleport = app.add_subcommand("teleport-check", "Teleportation simulation and covariance defects");
  teleport->add_option("--d", d)->required();
  teleport->add_option("--eta", eta)->required();
  teleport->add_option("--seed", seed);
  teleport->add_option("--samples", samples);

  auto* verify = app.add_subcommand("verify", "Cross-check every closed form against the matrix oracles");
  verify->add_option("--grid", grid);
  verify->add_option("--dims", dims_text);
  verify->add_option("--seed", verify_seed);
  verify->add_option("--tol-scale", tol_scale, "Multiply every numeric tolerance");
  verify->add_option("--copies", verify_copies);
  verify->add_option("--trials", verify_trials);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("wernerlab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Format format = format_name == "csv" ? Format::kCsv : Format::kJson;
  auto missing = [&](CLI::App* cmd, std::initializer_list<const char*> names) {
    for (const char* name : names)
      if (cmd->get_option(name)->count() == 0) {
        err << cmd->get_name() << ": " << name << " is required\n" << cmd->help();
        return true;
      }
    return false;
  };

  try {
    if (fidelity->parsed()) {
      emit(out, {"fidelity", {{"eta", eta}, {"zeta", zeta}}, {{"fidelity", fidelity_werner(eta, zeta)}}}, format);
      return kExitOk;
    }

    if (relent->parsed()) {
      Fields results{{"relative_entropy", relative_entropy_werner(eta, zeta)},
                     {"reverse_relative_entropy", relative_entropy_werner(zeta, eta)},
                     {"s_quantity", s_quantity(eta, zeta)}};
      if (std::abs(eta) < 1.0 && std::abs(zeta) < 1.0) results.emplace_back("delta_s", delta_s(eta, zeta));
      emit(out, {"relent", {{"eta", eta}, {"zeta", zeta}}, results}, format);
      return kExitOk;
    }

    if (qcb->parsed()) {
      if (isotropic ? missing(qcb, {"--alpha", "--beta", "--d"}) : missing(qcb, {"--eta", "--zeta"})) return kExitUsage;
      if (isotropic) {
        const QcbResult r = qcb_isotropic(alpha, beta, d);
        emit(out,
             {"qcb",
              {{"alpha", alpha}, {"beta", beta}, {"d", static_cast<long long>(d)}},
              {{"q", r.q}, {"s_star", r.s_star}, {"s_kind", std::string(to_string(r.s_kind))}}},
             format);
      } else {
        const QcbResult r = qcb_werner(eta, zeta);
        emit(out,
             {"qcb",
              {{"eta", eta}, {"zeta", zeta}},
              {{"q", r.q}, {"s_star", r.s_star}, {"s_kind", std::string(to_string(r.s_kind))}}},
             format);
      }
      return kExitOk;
    }

    if (estimate->parsed()) {
      if (sim->parsed()) {
        const EstimationReport r = simulate_estimation(eta, copies, trials, seed);
        emit(out,
             {"estimate sim",
              {{"eta", eta}, {"n", copies}, {"trials", trials}, {"seed", static_cast<long long>(seed)}},
              {{"qfi", r.qfi},
               {"qcrb_variance", r.qcrb_variance},
               {"empirical_mean", r.empirical_mean},
               {"empirical_variance", r.empirical_variance},
               {"variance_times_qfi", r.empirical_variance * r.qfi}}},
             format);
      } else {
        emit(out,
             {"estimate",
              {{"eta", eta}, {"n", copies}},
              {{"qfi", qfi_werner(eta, copies)}, {"qcrb_variance", qcrb_variance(eta, copies)}}},
             format);
      }
      return kExitOk;
    }

    if (discriminate->parsed()) {
      const DiscriminationBounds b = bounds(eta, zeta, d, n);
      emit(out,
           {"discriminate",
            {{"eta", eta}, {"zeta", zeta}, {"d", static_cast<long long>(d)}, {"n", static_cast<long long>(n)}},
            bounds_fields(b)},
           format);
      if (!b.ordered()) {
        err << "bound ordering violated\n";
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (curves->parsed()) {
      const std::vector<int> ns = parse_int_list(n_list);
      const std::vector<DiscriminationBounds> rows = curve_grid(zeta, ns, step, d);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
          err << "cannot open " << out_path << '\n';
          return kExitUsage;
        }
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (format_name != "json") {
        write_curves_csv(sink, rows);
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const DiscriminationBounds& b : rows) {
          Fields row{{"zeta", b.zeta}, {"n", static_cast<long long>(b.n)}, {"eta", b.eta}};
          for (auto& f : bounds_fields(b))
            if (f.first != "ordered") row.push_back(std::move(f));
          arr.push_back(to_json(row));
        }
        sink << arr.dump() << '\n';
      }
      return kExitOk;
    }

    if (teleport->parsed()) {
      const WernerParams params(eta, d);
      detail::require(samples >= 1, ErrorKind::kInvalidParameter, "samples must be >= 1");
      const DensityMatrix resource = werner_state(params);
      Rng rng = make_rng(seed);
      double simulation = 0.0, covariance = 0.0;
      for (int t = 0; t < samples; ++t) {
        const DensityMatrix rho = random_density_matrix(static_cast<std::size_t>(d), rng);
        simulation =
            std::max(simulation, trace_distance_numeric(teleport_channel(resource, rho), hw_channel_apply(params, rho)));
        covariance = std::max(covariance, covariance_check(params, random_unitary(static_cast<std::size_t>(d), rng), rho));
      }
      constexpr double kLimit = 1e-10;
      const bool ok = simulation <= kLimit && covariance <= kLimit;
      emit(out,
           {"teleport-check",
            {{"d", static_cast<long long>(d)},
             {"eta", eta},
             {"seed", static_cast<long long>(seed)},
             {"samples", static_cast<long long>(samples)}},
            {{"max_simulation_defect", simulation},
             {"max_covariance_defect", covariance},
             {"tolerance", kLimit},
             {"passed", ok}}},
           format);
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.grid_step = grid;
      options.dims = parse_dims(dims_text);
      options.seed = verify_seed;
      options.tolerance_scale = tol_scale;
      options.estimation_copies = verify_copies;
      options.estimation_trials = verify_trials;
      const std::vector<CheckResult> checks = run_verification(options);

      nlohmann::ordered_json report;
      report["schema"] = kSchemaVersion;
      report["command"] = "verify";
      report["params"] = to_json(Fields{{"grid", grid},
                                        {"dims", dims_text},
                                        {"seed", static_cast<long long>(options.seed)},
                                        {"tol_scale", tol_scale}});
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      std::vector<std::string> failed;
      for (const CheckResult& c : checks) {
        list.push_back(to_json(Fields{{"name", c.name},
                                      {"measured", c.measured},
                                      {"limit", c.limit},
                                      {"comparison", std::string(c.strict ? "<" : "<=")},
                                      {"passed", c.passed}}));
        if (!c.passed) failed.push_back(c.name);
      }
      report["results"]["checks"] = list;
      report["results"]["failed"] = failed;
      out << report.dump() << '\n';
      if (!failed.empty()) {
        err << "verification failed:";
        for (const auto& name : failed) err << ' ' << name;
        err << '\n';
        return kExitVerificationFailed;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  err << app.help();
  return kExitUsage;
}

}  // namespace wernerlab::cli
