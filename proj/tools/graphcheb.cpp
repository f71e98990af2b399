#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "graphcheb/experiments.hpp"
#include "graphcheb/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool audit_messages = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "override RNG seed");
  cmd->add_option("--trials", opts.trials, "override trial count");
  cmd->add_flag("--audit-messages", opts.audit_messages,
                "keep full per-message traces (counts are always kept)");
}

std::string config_text(const CommonOptions& opts) {
  return opts.config_path.empty() ? "{}" : read_file(opts.config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed graph-multiplier operators via Chebyshev recurrences"};
  app.require_subcommand(1);

  CommonOptions tikhonov_opts, lasso_opts, inverse_opts, ssl_opts, compare_opts,
      verify_opts;
  auto* cmd_tikhonov =
      app.add_subcommand("tikhonov", "smooth-signal denoising experiment");
  add_common(cmd_tikhonov, tikhonov_opts);
  auto* cmd_lasso =
      app.add_subcommand("lasso", "piecewise-signal wavelet denoising experiment");
  add_common(cmd_lasso, lasso_opts);
  auto* cmd_inverse = app.add_subcommand("inverse", "deblurring experiment");
  add_common(cmd_inverse, inverse_opts);
  auto* cmd_ssl = app.add_subcommand("ssl", "semi-supervised classification");
  add_common(cmd_ssl, ssl_opts);
  auto* cmd_compare =
      app.add_subcommand("compare", "solver comparison curves (CSV output)");
  add_common(cmd_compare, compare_opts);
  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(cmd_verify, verify_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_tikhonov->parsed()) {
      auto cfg = gcheb::tikhonov_config_from_json(config_text(tikhonov_opts));
      if (tikhonov_opts.seed) cfg.seed = *tikhonov_opts.seed;
      if (tikhonov_opts.trials) cfg.trials = *tikhonov_opts.trials;
      std::filesystem::create_directories(tikhonov_opts.out_dir);
      if (tikhonov_opts.audit_messages) {
        cfg.audit_trace_path = tikhonov_opts.out_dir + "/trace_tikhonov.csv";
      }
      const auto report = gcheb::run_tikhonov_experiment(cfg);
      const std::string json = gcheb::report_to_json(report);
      std::filesystem::create_directories(tikhonov_opts.out_dir);
      write_file(tikhonov_opts.out_dir + "/tikhonov.json", json);
      std::cout << json << '\n';
    } else if (cmd_lasso->parsed()) {
      auto cfg = gcheb::lasso_config_from_json(config_text(lasso_opts));
      if (lasso_opts.seed) cfg.seed = *lasso_opts.seed;
      if (lasso_opts.trials) cfg.trials = *lasso_opts.trials;
      std::filesystem::create_directories(lasso_opts.out_dir);
      if (lasso_opts.audit_messages) {
        cfg.audit_trace_path = lasso_opts.out_dir + "/trace_lasso.csv";
      }
      const auto report = gcheb::run_lasso_experiment(cfg);
      const std::string json = gcheb::report_to_json(report);
      std::filesystem::create_directories(lasso_opts.out_dir);
      write_file(lasso_opts.out_dir + "/lasso.json", json);
      std::cout << json << '\n';
    } else if (cmd_inverse->parsed()) {
      auto cfg = gcheb::inverse_config_from_json(config_text(inverse_opts));
      if (inverse_opts.seed) cfg.seed = *inverse_opts.seed;
      if (inverse_opts.trials) cfg.trials = *inverse_opts.trials;
      std::filesystem::create_directories(inverse_opts.out_dir);
      if (inverse_opts.audit_messages) {
        cfg.audit_trace_path = inverse_opts.out_dir + "/trace_inverse.csv";
      }
      const auto report = gcheb::run_inverse_experiment(cfg);
      const std::string json = gcheb::report_to_json(report);
      std::filesystem::create_directories(inverse_opts.out_dir);
      write_file(inverse_opts.out_dir + "/inverse.json", json);
      std::cout << json << '\n';
    } else if (cmd_ssl->parsed()) {
      auto cfg = gcheb::ssl_config_from_json(config_text(ssl_opts));
      if (ssl_opts.seed) cfg.seed = *ssl_opts.seed;
      const auto report = gcheb::run_ssl_experiment(cfg);
      const std::string json = gcheb::report_to_json(report);
      std::filesystem::create_directories(ssl_opts.out_dir);
      write_file(ssl_opts.out_dir + "/ssl.json", json);
      std::cout << json << '\n';
    } else if (cmd_compare->parsed()) {
      auto cfg = gcheb::compare_config_from_json(config_text(compare_opts));
      if (compare_opts.seed) cfg.seed = *compare_opts.seed;
      const auto report = gcheb::run_compare_experiment(cfg);
      std::filesystem::create_directories(compare_opts.out_dir);
      for (std::size_t i = 0; i < report.matrix_names.size(); ++i) {
        gcheb::save_comparison_csv(report.comparisons[i],
                                   compare_opts.out_dir + "/compare_" +
                                       report.matrix_names[i] + ".csv");
      }
      const std::string json = gcheb::report_to_json(report);
      write_file(compare_opts.out_dir + "/compare.json", json);
      std::cout << json << '\n';
    } else if (cmd_verify->parsed()) {
      const std::uint64_t seed = verify_opts.seed.value_or(42);
      const auto results = gcheb::run_verification(seed);
      int failures = 0;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
                  << ")\n";
        if (!r.pass) ++failures;
      }
      std::cout << (failures == 0 ? "all checks passed" : "FAILURES: ")
                << (failures == 0 ? "" : std::to_string(failures)) << '\n';
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
