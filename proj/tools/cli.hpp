#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expskew/expskew.hpp"
#include "expskew/io.hpp"

namespace expskew::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_degenerate = 2;

inline constexpr const char* out_dir_env = "EXPSKEW_OUT_DIR";

inline constexpr const char* spec_help =
    "Inline distribution: family:key=value,...\n"
    "  normal:mean=0,variance=1      gamma:shape=2,scale=1\n"
    "  lognormal:meanlog=0,varlog=1  student_t:df=5\n"
    "  exponential:rate=1            uniform:lower=0,upper=1\n"
    "  bernoulli:p=0.3\n"
    "Grids: lo:hi:step or a comma-separated list.";

struct Common {
  std::string input;
  std::string dist;
  std::size_t n = 50;
  std::uint64_t seed = 1;
  double level = 0.95;
  std::string format = "csv";
  std::string out;
};

inline std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* base = std::getenv(out_dir_env); base && *base) p = std::filesystem::path(base) / p;
  }
  return p;
}

// Writes via `emit` to --out (relative to EXPSKEW_OUT_DIR when set) or to `os`.
template <class Emit>
void write_output(const Common& c, std::ostream& os, Emit&& emit) {
  if (c.out.empty()) {
    emit(os);
    return;
  }
  const auto path = output_path(c.out);
  std::ofstream f(path);
  if (!f) throw domain_error("cannot open output file '" + path.string() + "'");
  emit(f);
}

template <class T>
void emit_value(const Common& c, std::ostream& os, const T& value) {
  write_output(c, os, [&](std::ostream& s) {
    if (c.format == "json") {
      s << io::to_json(value).dump(2) << '\n';
    } else {
      io::write_csv(s, value);
    }
  });
}

inline void add_input_options(CLI::App* sub, Common& c, bool with_draws) {
  auto* in = sub->add_option("--input", c.input, "file with one observation per line");
  auto* ds = sub->add_option("--dist", c.dist, "inline distribution spec");
  in->excludes(ds);
  ds->excludes(in);
  if (with_draws) {
    sub->add_option("--n", c.n, "sample size drawn from --dist")->check(CLI::Range(3, 100000000));
  }
}

inline void add_output_options(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, std::string("output file (relative to $") + out_dir_env + ")");
}

inline void add_level_option(CLI::App* sub, Common& c) {
  sub->add_option("--level", c.level, "confidence level in (0,1)")->check([](const std::string& s) {
    double v = 0.0;
    try {
      v = io::parse_real(s, "level");
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return v > 0.0 && v < 1.0 ? std::string() : "level must lie in (0,1), got " + s;
  });
}

inline void require_one_input(const Common& c) {
  if (c.input.empty() && c.dist.empty()) throw CLI::ValidationError("one of --input or --dist is required");
}

inline Sample load_sample(const Common& c) {
  if (!c.input.empty()) return read_sample_file(c.input);
  return sample(io::parse_distribution(c.dist), c.n, c.seed);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expectile-based skewness measures, inference, order diagnostics and simulation.",
               "expskew"};
  app.footer(spec_help);
  app.require_subcommand(1);

  Common c;
  std::string alpha_grid = "0.05:0.45:0.05";
  std::string t_grid = "0.5,1,2";
  std::optional<double> alpha;
  bool clip = false;

  auto* measures = app.add_subcommand("measures", "skewness report for a sample file or a distribution");
  add_input_options(measures, c, false);
  measures->add_option("--alpha", alpha, "single alpha in (0,1/2)");
  measures->add_option("--alpha-grid", alpha_grid, "alpha grid");
  measures->add_option("--t-grid", t_grid, "t grid for S(t) and S~(t)");
  add_output_options(measures, c);

  auto* ci = app.add_subcommand("ci-curve", "s2(alpha) with confidence limits and symmetry band");
  add_input_options(ci, c, true);
  ci->add_option("--alpha-grid", alpha_grid, "alpha grid");
  ci->add_option("--seed", c.seed, "seed for --dist draws");
  ci->add_flag("--clip", clip, "clip limits to [-1, 1]");
  add_level_option(ci, c);
  add_output_options(ci, c);

  auto* sf = app.add_subcommand("sfunc", "S_n(t) with confidence limits and symmetry band");
  add_input_options(sf, c, true);
  sf->add_option("--t-grid", t_grid, "t grid");
  sf->add_option("--seed", c.seed, "seed for --dist draws");
  add_level_option(sf, c);
  add_output_options(sf, c);

  std::string spec_f, spec_g;
  std::size_t grid = 2001;
  auto* order = app.add_subcommand("order", "convex transform, mean/MAD and expectile order checks");
  order->add_option("--f", spec_f, "distribution F")->required();
  order->add_option("--g", spec_g, "distribution G")->required();
  order->add_option("--grid", grid, "number of grid points")->check(CLI::Range(10, 10000000));
  add_output_options(order, c);

  std::string family;
  std::string param_grid;
  auto* theory = app.add_subcommand("theory", "b2, s~2 and s2 curves over a family parameter");
  theory->add_option("--family", family, "gamma, lognormal, student_t or bernoulli")->required();
  theory->add_option("--param-grid", param_grid, "family parameter grid")->required();
  theory->add_option("--alpha-grid", alpha_grid, "alpha grid");
  add_output_options(theory, c);

  std::string config_path;
  bool full_grid = false;
  std::optional<std::uint64_t> sim_seed;
  unsigned threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo bias / variance / MSE study");
  simulate->add_option("--config", config_path, "JSON experiment config")->required();
  simulate->add_flag("--full-grid", full_grid, "10000 replications, n = 20 ... 10000");
  simulate->add_option("--seed", sim_seed, "override the config seed");
  simulate->add_option("--threads", threads, "worker threads (0: all cores)");
  add_output_options(simulate, c);

  auto* draw = app.add_subcommand("sample", "draw a sample, one value per line");
  draw->add_option("--dist", c.dist, "inline distribution spec")->required();
  draw->add_option("--n", c.n, "sample size")->required()->check(CLI::Range(1, 100000000));
  draw->add_option("--seed", c.seed, "seed");
  draw->add_option("--out", c.out, std::string("output file (relative to $") + out_dir_env + ")");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (measures->parsed()) {
      require_one_input(c);
      const auto alphas = alpha ? std::vector<double>{*alpha} : io::parse_grid(alpha_grid);
      const auto ts = io::parse_grid(t_grid);
      if (!c.input.empty()) {
        emit_value(c, out, skewness_report(read_sample_file(c.input), alphas, ts));
      } else {
        emit_value(c, out, skewness_report(io::parse_distribution(c.dist), alphas, ts));
      }
    } else if (ci->parsed()) {
      require_one_input(c);
      const auto s = load_sample(c);
      IntervalOptions opt;
      opt.clip_to_range = clip;
      emit_value(c, out, s2_curve(s, io::parse_grid(alpha_grid), c.level, opt));
    } else if (sf->parsed()) {
      require_one_input(c);
      const auto s = load_sample(c);
      emit_value(c, out, sfunc_curve(s, io::parse_grid(t_grid), c.level));
    } else if (order->parsed()) {
      const auto F = io::parse_distribution(spec_f);
      const auto G = io::parse_distribution(spec_g);
      OrderOptions opt;
      opt.grid_size = grid;
      std::vector<io::NamedVerdict> v{{"convex_transform", convex_transform_order(F, G, opt)},
                                      {"mean_mad", mean_mad_order(F, G, opt)},
                                      {"expectile", expectile_order(F, G, opt)}};
      emit_value(c, out, v);
    } else if (theory->parsed()) {
      emit_value(c, out,
                 theory_curves(io::parse_family(family), io::parse_grid(param_grid),
                               io::parse_grid(alpha_grid)));
    } else if (simulate->parsed()) {
      std::ifstream f(config_path);
      if (!f) throw domain_error("cannot open config '" + config_path + "'");
      auto cfg = io::read_config(f);
      if (full_grid) cfg = with_full_grid(cfg);
      if (sim_seed) cfg.master_seed = *sim_seed;
      cfg.threads = threads;
      const auto table = run(cfg);
      for (const auto& s : table.skipped) {
        err << "note: skipped " << measure_name(s.measure.id) << ": " << s.reason << '\n';
      }
      if (!table.valid) err << "warning: failure rate above 1% in at least one row\n";
      emit_value(c, out, table);
    } else if (draw->parsed()) {
      const auto s = sample(io::parse_distribution(c.dist), c.n, c.seed);
      write_output(c, out, [&](std::ostream& os) {
        char buf[40];
        for (double x : s.values()) {
          std::snprintf(buf, sizeof buf, "%.17g", x);
          os << buf << '\n';
        }
      });
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const degenerate_input_error& e) {
    err << "error: degenerate input: " << e.what() << '\n';
    return exit_degenerate;
  } catch (const numerical_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_degenerate;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace expskew::cli
