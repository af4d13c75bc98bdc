// Copyright 2026 The xyquench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: sweep, critical, pdf, verify.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "xyquench/config.hpp"
#include "xyquench/errors.hpp"
#include "xyquench/sweep.hpp"
#include "xyquench/verify.hpp"
#include "xyquench/work_pdf.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericError = 3 };

// Flag values as typed, keyed by config name; applied over the config file.
struct Overrides {
  std::optional<std::string> config_path;
  std::map<std::string, std::string> values;
  std::optional<std::string> out;
  bool verbose = false;
};

void add_value(CLI::App* app, Overrides& o, const std::string& flag, const std::string& key,
               const std::string& help) {
  app->add_option_function<std::string>(
      flag, [&o, key](const std::string& v) { o.values[key] = v; }, help);
}

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "key=value config file; flags override it");
  add_value(app, o, "--gamma", "gamma", "anisotropy (value or min:max:steps)");
  add_value(app, o, "--beta", "beta", "inverse temperature (value or grid)");
  add_value(app, o, "--L", "L", "chain length, even (value or comma list)");
  add_value(app, o, "--dh", "dh", "quench size hf - h0");
  add_value(app, o, "--D", "D", "DM strength (value or grid)");
  add_value(app, o, "--h0", "h0", "initial field (value or grid)");
  add_value(app, o, "--workers", "workers", "worker threads, 0 = all cores");
  app->add_option("--out", o.out, "output path (default stdout)");
}

xyq::KeyValueConfig effective_config(const Overrides& o,
                                     const std::map<std::string, std::string>& defaults) {
  auto cfg = o.config_path ? xyq::KeyValueConfig::from_file(*o.config_path) : xyq::KeyValueConfig{};
  for (const auto& [k, v] : o.values) cfg.set(k, v);
  for (const auto& [k, v] : defaults) {
    if (!cfg.contains(k)) cfg.set(k, v);
  }
  return cfg;
}

// The worker count never changes results, so it stays out of the echo and the
// checksum; output bytes are then identical for any degree of parallelism.
std::string header(const std::string& command, xyq::KeyValueConfig cfg) {
  cfg.erase("workers");
  return "# xyquench " + command + "\n" + cfg.echo() + "# config_checksum=" + cfg.checksum() + "\n";
}

// Writes to --out when given, else stdout. Output is fully buffered first so a
// failure never leaves a truncated file behind.
void emit(const Overrides& o, const std::string& text) {
  if (!o.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*o.out, std::ios::binary);
  if (!f) throw xyq::ConfigError("cannot open output file " + *o.out);
  f << text;
}

const std::map<std::string, std::string> kSweepDefaults{
    {"L", std::to_string(xyq::kDefaultL)}, {"gamma", "0.5"}, {"beta", "100"}, {"D", "0"},
    {"h0", "1"}, {"dh", "0.01"}, {"delta_F", "false"}};

int run_sweep_cmd(const Overrides& o) {
  const auto cfg = effective_config(o, kSweepDefaults);
  const auto config = xyq::SweepConfig::from(cfg);
  const auto rows = xyq::run_sweep(config);
  std::ostringstream os;
  xyq::write_sweep_csv(os, rows, config, header("sweep", cfg));
  emit(o, os.str());
  return kOk;
}

int run_critical_cmd(const Overrides& o) {
  auto defaults = kSweepDefaults;
  defaults["h0"] = "0.5:2.0:301";
  defaults["D"] = "0.30:1.00:15";
  const auto cfg = effective_config(o, defaults);
  const auto config = xyq::SweepConfig::from(cfg);
  const auto estimates = xyq::critical_scan(config);
  std::ostringstream os;
  xyq::write_critical_csv(os, estimates, o.verbose, header("critical", cfg));
  emit(o, os.str());
  return kOk;
}

double single(const xyq::KeyValueConfig& cfg, const std::string& key) {
  const auto grid = cfg.get_grid(key, "");
  if (grid.size() != 1) throw xyq::ConfigError("config key '" + key + "': pdf needs a single value");
  return grid.front();
}

int run_pdf_cmd(const Overrides& o) {
  auto defaults = kSweepDefaults;
  defaults["L"] = "8";
  defaults["method"] = "auto";
  defaults["samples"] = "65536";
  defaults["smoothing"] = "3";
  const auto cfg = effective_config(o, defaults);
  const int L = cfg.get_int("L", 8);
  const double h0 = single(cfg, "h0");
  const xyq::QuenchSetup setup(xyq::ModelParams(L, single(cfg, "gamma"), single(cfg, "D")), h0,
                               h0 + cfg.get_double("dh", 0.01), single(cfg, "beta"));
  std::string method = *cfg.get("method");
  if (method == "auto") method = L <= xyq::kExactMaxL ? "exact" : "fft";
  if (method != "exact" && method != "fft") {
    throw xyq::ConfigError("config key 'method': expected exact, fft or auto");
  }

  std::ostringstream os;
  os << header("pdf", cfg);
  os.precision(17);
  if (method == "exact") {
    const auto dist = xyq::work_pdf_exact(setup);
    os << "# method=exact atoms=" << dist.values().size() << '\n';
    os << "work,probability\n";
    for (std::size_t i = 0; i < dist.values().size(); ++i) os << dist.values()[i] << ',' << dist.weights()[i] << '\n';
  } else {
    xyq::FftOptions opts;
    opts.n_samples = cfg.get_int("samples", 65536);
    opts.smoothing_bins = cfg.get_double("smoothing", 3.0);
    if (cfg.contains("wmax")) opts.w_max = cfg.get_double("wmax", 0.0);
    const auto dist = xyq::work_pdf_fft(setup, opts);
    const auto& info = dist.histogram_info();
    os << "# method=fft n_samples=" << info.n_samples << " w_max=" << info.w_max << " du=" << info.du
       << " bin_width=" << dist.bin_width() << " kernel_sigma=" << info.kernel_sigma
       << " boundary_mass=" << info.boundary_mass << '\n';
    os << "work,density\n";
    for (std::size_t i = 0; i < dist.values().size(); ++i) os << dist.values()[i] << ',' << dist.weights()[i] << '\n';
  }
  emit(o, os.str());
  return kOk;
}

int run_verify_cmd(const Overrides& o, const xyq::VerifyOptions& options, bool json) {
  const auto results = xyq::run_verification(options);
  const auto summary = xyq::verification_json(results, options);
  emit(o, json ? summary + "\n" : xyq::format_verification_table(results));
  if (o.out) std::cout << xyq::format_verification_table(results);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Work statistics and entropy production of quenched XY chains with DM interaction"};
  app.require_subcommand(1);

  Overrides sweep_o, critical_o, pdf_o, verify_o;

  auto* sweep = app.add_subcommand("sweep", "mean work, variance and entropy production over a grid");
  add_common(sweep, sweep_o);
  sweep->add_flag_function(
      "--delta-F", [&](std::int64_t) { sweep_o.values["delta_F"] = "true"; }, "add a delta_F column");

  auto* critical = app.add_subcommand("critical", "critical field from derivative minima along h0");
  add_common(critical, critical_o);
  critical->add_flag("--verbose", critical_o.verbose, "list every local minimum");

  auto* pdf = app.add_subcommand("pdf", "work distribution, exact atoms or FFT histogram");
  add_common(pdf, pdf_o);
  add_value(pdf, pdf_o, "--method", "method", "exact | fft | auto");
  add_value(pdf, pdf_o, "--samples", "samples", "FFT points (power of two)");
  add_value(pdf, pdf_o, "--wmax", "wmax", "half-width of the work window");
  add_value(pdf, pdf_o, "--smoothing", "smoothing", "Gaussian window width in bins, 0 = off");

  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  xyq::VerifyOptions vopts;
  bool json = false;
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_flag("--inject-naive-arctan", vopts.inject_naive_arctan,
                   "negative control: single-argument arctan in the branch guard");
  verify->add_flag("--json", json, "print the JSON summary instead of the table");
  verify->add_option("--out", verify_o.out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*sweep) return run_sweep_cmd(sweep_o);
    if (*critical) return run_critical_cmd(critical_o);
    if (*pdf) return run_pdf_cmd(pdf_o);
    return run_verify_cmd(verify_o, vopts, json);
  } catch (const xyq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const xyq::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumericError;
  }
}
