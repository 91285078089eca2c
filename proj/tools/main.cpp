// tradefreq: trading-frequency optimization on fractal price paths.
//
// Exit codes: 0 success, 2 usage, 3 domain/feasibility, 4 numerical, 5 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tradefreq/errors.hpp"
#include "tradefreq/experiments.hpp"
#include "tradefreq/fbm.hpp"
#include "tradefreq/serialize.hpp"

namespace fs = std::filesystem;

namespace {

using namespace tradefreq;

constexpr const char* kVersion = "0.1.0";

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (...) {
        return "value '" + s + "' is not a number";
      }
      if (!(v > 0.0 && v < 1.0)) return "value " + s + " must lie in (0, 1)";
      return {};
    },
    "FLOAT in (0,1)", "OPEN_UNIT");

// Relative paths honor TRADEFREQ_OUT_DIR; "-" streams to stdout.
void write_output(const std::string& requested, const std::string& content) {
  if (requested == "-") {
    std::cout << content;
    return;
  }
  std::string target = requested;
  const char* dir = std::getenv("TRADEFREQ_OUT_DIR");
  if (dir && *dir && target.front() != '/') target = std::string(dir) + "/" + target;
  std::ofstream out(target, std::ios::binary);
  if (!out) throw IoError("cannot open '" + target + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + target + "' failed");
}

struct LazinessFlags {
  std::string mode = "constant";
  double l0 = 0.0;
  double lambda = 0.0;
  double alpha = 1.0;

  LazinessSpec build() const {
    if (mode == "constant") return LazinessSpec::constant(l0);
    if (mode == "level-power") return LazinessSpec::level_power(l0, lambda, alpha);
    if (mode == "trade-count-power") return LazinessSpec::trade_count_power(lambda, alpha);
    throw DomainError("unknown laziness mode '" + mode + "'");
  }
};

void add_laziness_flags(CLI::App* cmd, LazinessFlags& f) {
  cmd->add_option("--laziness", f.mode, "cost-of-acting form")
      ->check(CLI::IsMember({"constant", "level-power", "trade-count-power"}))
      ->capture_default_str();
  cmd->add_option("--l0", f.l0, "constant laziness component")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--lambda", f.lambda, "laziness scale")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "laziness exponent (>= 1)")
      ->check(CLI::Range(1.0, 16.0))
      ->capture_default_str();
}

struct SchemaFlags {
  std::string input;
  CsvSchema schema;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input, "CSV file with a header row")->required();
    cmd->add_option("--date-column", schema.date_column, "date/time column name")
        ->capture_default_str();
    cmd->add_option("--price-column", schema.price_column, "price column name")
        ->capture_default_str();
    cmd->add_flag("--log,!--no-log", schema.log_transform,
                  "take logs of the price column (default on)");
    cmd->add_flag("--resample", schema.resample,
                  "carry observations forward onto the modal time grid");
  }
};

void write_schema_params(JsonWriter& w, const SchemaFlags& f) {
  // Only the filename: full paths vary per machine and would break output
  // comparisons across checkouts.
  const std::string name = fs::path(f.input).filename().string();
  w.key_value("input", std::string_view(name));
  w.key_value("date_column", std::string_view(f.schema.date_column));
  w.key_value("price_column", std::string_view(f.schema.price_column));
  w.key_value("log_transform", f.schema.log_transform);
  w.key_value("resample", f.schema.resample);
}

void write_laziness_object(JsonWriter& w, const LazinessSpec& spec) {
  w.key("laziness");
  w.begin_object();
  write_laziness_fields(w, spec);
  w.end_object();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trading-frequency optimization on fractal price paths"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tradefreq ") + kVersion);
  app.set_config("--config", "", "flat key=value config file ([subcommand] sections); flags win");

  // ---------------- simulate ----------------
  struct {
    FbmConfig cfg;
    std::string method = "circulant";
    std::string out = "-";
  } sim;
  auto* simulate = app.add_subcommand("simulate", "sample a fractional Brownian path to CSV");
  simulate->add_option("--hurst", sim.cfg.hurst, "Hurst exponent")->required()->check(kOpenUnit);
  simulate->add_option("--sigma", sim.cfg.sigma, "volatility scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--mu", sim.cfg.drift, "linear drift")->capture_default_str();
  simulate->add_option("--n", sim.cfg.n_steps, "number of steps")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 22));
  simulate->add_option("--horizon", sim.cfg.horizon, "time horizon T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--method", sim.method, "sampler")
      ->check(CLI::IsMember({"cholesky", "circulant"}))
      ->capture_default_str();
  simulate->add_option("--seed", sim.cfg.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out,-o", sim.out, "output path, - for stdout")->capture_default_str();
  simulate->callback([&] {
    sim.cfg.method = sim.method == "cholesky" ? FbmMethod::kCholesky : FbmMethod::kCirculant;
    write_output(sim.out, path_to_csv(sample_path(sim.cfg)));
  });

  // ---------------- optimize-det ----------------
  struct {
    DeterministicParams params;
    LazinessFlags laziness;
    int m_cap = kDefaultLevelCap;
    std::string out = "-";
    std::string format = "json";
  } det;
  auto* optimize_det =
      app.add_subcommand("optimize-det", "profit curve and stopping level, deterministic model");
  optimize_det->add_option("--horizon", det.params.horizon, "time horizon T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  optimize_det->add_option("--roughness", det.params.roughness, "roughness factor W in (0, 2)")
      ->required()
      ->check(CLI::Range(1e-12, 2.0));
  optimize_det->add_option("--micro-c0", det.params.micro_scale, "microstructure floor c0")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  optimize_det->add_option("--spread", det.params.spread, "cost per trade")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_laziness_flags(optimize_det, det.laziness);
  optimize_det->add_option("--m-cap", det.m_cap, "level cap when every level is feasible")
      ->check(CLI::Range(0, 62))
      ->capture_default_str();
  optimize_det->add_option("--out,-o", det.out, "output path, - for stdout")->capture_default_str();
  optimize_det->add_option("--format", det.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  optimize_det->callback([&] {
    det.params.laziness = det.laziness.build();
    const ProfitCurve curve = optimize_profit_curve(det.params, det.m_cap);
    if (det.format == "csv") {
      write_output(det.out, curve_to_csv(curve));
      return;
    }
    JsonWriter w;
    w.begin_object();
    w.key_value("command", std::string_view("optimize-det"));
    w.key("params");
    w.begin_object();
    w.key_value("horizon", det.params.horizon);
    w.key_value("roughness", det.params.roughness);
    w.key_value("micro_c0", det.params.micro_scale);
    w.key_value("spread", det.params.spread);
    write_laziness_object(w, det.params.laziness);
    w.key_value("m_cap", det.m_cap);
    w.end_object();
    write_curve(w, "curve", curve);
    w.end_object();
    write_output(det.out, w.take());
  });

  // ---------------- optimize-fbm ----------------
  struct {
    StochasticParams params;
    LazinessFlags laziness;
    double sigma = 0.0;
    std::string out = "-";
  } fbm;
  auto* optimize_fbm =
      app.add_subcommand("optimize-fbm", "optimal rebalancing interval, stochastic model");
  optimize_fbm->add_option("--hurst", fbm.params.hurst, "Hurst exponent")
      ->required()
      ->check(kOpenUnit);
  auto* kappa_opt = optimize_fbm->add_option("--kappa", fbm.params.kappa,
                                             "mean absolute move per unit interval")
                        ->check(CLI::PositiveNumber);
  auto* sigma_opt =
      optimize_fbm->add_option("--sigma", fbm.sigma, "volatility; kappa = sigma sqrt(2/pi)")
          ->check(CLI::PositiveNumber);
  kappa_opt->excludes(sigma_opt);
  sigma_opt->excludes(kappa_opt);
  optimize_fbm->add_option("--spread", fbm.params.spread, "cost per trade")
      ->required()
      ->check(CLI::PositiveNumber);
  optimize_fbm->add_option("--horizon", fbm.params.horizon, "time horizon T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_laziness_flags(optimize_fbm, fbm.laziness);
  optimize_fbm->add_option("--out,-o", fbm.out, "output path, - for stdout")->capture_default_str();
  optimize_fbm->callback([&] {
    if (kappa_opt->count() == 0 && sigma_opt->count() == 0)
      throw CLI::RequiredError("--kappa or --sigma");
    if (sigma_opt->count() > 0) fbm.params.kappa = kappa_from_sigma(fbm.sigma);
    fbm.params.laziness = fbm.laziness.build();
    const bool constant = fbm.params.laziness.mode == LazinessMode::kConstant;
    const OptimalInterval interval = constant ? optimal_interval_closed_form(fbm.params)
                                              : optimal_interval_with_latency(fbm.params);
    JsonWriter w;
    w.begin_object();
    w.key_value("command", std::string_view("optimize-fbm"));
    w.key("params");
    w.begin_object();
    w.key_value("hurst", fbm.params.hurst);
    w.key_value("kappa", fbm.params.kappa);
    w.key_value("spread", fbm.params.spread);
    w.key_value("horizon", fbm.params.horizon);
    write_laziness_object(w, fbm.params.laziness);
    w.end_object();
    w.key_value("solver", std::string_view(constant ? "closed-form" : "latency-foc"));
    write_interval(w, "interval", interval);
    w.end_object();
    write_output(fbm.out, w.take());
  });

  // ---------------- estimate-hurst ----------------
  struct {
    SchemaFlags source;
    int levels = 0;
    std::string out = "-";
    std::string format = "json";
  } est;
  auto* estimate = app.add_subcommand("estimate-hurst", "scaling regression on a price CSV");
  est.source.add_to(estimate);
  estimate->add_option("--levels", est.levels, "dyadic levels in the fit (0 = auto)")
      ->check(CLI::Range(0, 24))
      ->capture_default_str();
  estimate->add_option("--out,-o", est.out, "output path, - for stdout")->capture_default_str();
  estimate->add_option("--format", est.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  estimate->callback([&] {
    const PricePath path = load_price_csv(est.source.input, est.source.schema);
    const int levels = est.levels > 0 ? est.levels : default_scaling_levels(path);
    const HurstFit fit = fit_scaling(path, levels);
    if (est.format == "csv") {
      write_output(est.out, fit_to_csv(fit, path.delta_t));
      return;
    }
    JsonWriter w;
    w.begin_object();
    w.key_value("command", std::string_view("estimate-hurst"));
    w.key("params");
    w.begin_object();
    write_schema_params(w, est.source);
    w.key_value("levels", levels);
    w.end_object();
    write_fit(w, "fit", fit);
    w.end_object();
    write_output(est.out, w.take());
  });

  // ---------------- mc-experiment ----------------
  struct {
    McExperimentSpec spec;
    std::vector<double> hurst_values;
    LazinessFlags laziness{.mode = "level-power", .l0 = 0.0, .lambda = 6e-4, .alpha = 1.4};
    std::string out = "-";
    std::string format = "json";
  } mc;
  auto* experiment =
      app.add_subcommand("mc-experiment", "analytic vs simulated profit curves across levels");
  experiment->add_option("--hurst", mc.hurst_values, "Hurst exponents (repeatable)")
      ->check(kOpenUnit);
  experiment->add_option("--m-lo", mc.spec.m_lo, "first level")->check(CLI::Range(0, 26))->capture_default_str();
  experiment->add_option("--m-hi", mc.spec.m_hi, "last level")->check(CLI::Range(0, 26))->capture_default_str();
  experiment->add_option("--kappa", mc.spec.kappa, "mean absolute move per unit interval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--spread", mc.spec.spread, "cost per trade")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  experiment->add_option("--horizon", mc.spec.horizon, "time horizon T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_laziness_flags(experiment, mc.laziness);
  experiment->add_option("--paths", mc.spec.n_paths, "Monte-Carlo paths per Hurst value (0 = analytic only)")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}))
      ->capture_default_str();
  experiment->add_option("--seed", mc.spec.seed, "RNG seed")->capture_default_str();
  experiment->add_option("--threads", mc.spec.threads, "worker threads (0 = hardware)")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  experiment->add_option("--out,-o", mc.out, "output path, - for stdout")->capture_default_str();
  experiment->add_option("--format", mc.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  experiment->callback([&] {
    if (!mc.hurst_values.empty()) mc.spec.hurst_values = mc.hurst_values;
    mc.spec.laziness = mc.laziness.build();
    const McExperimentResult result = run_mc_experiment(mc.spec);
    if (mc.format == "csv") {
      write_output(mc.out, mc_to_csv(result));
      return;
    }
    JsonWriter w;
    w.begin_object();
    w.key_value("command", std::string_view("mc-experiment"));
    w.key("params");
    w.begin_object();
    w.numbers("hurst_values", result.spec.hurst_values);
    w.key_value("m_lo", result.spec.m_lo);
    w.key_value("m_hi", result.spec.m_hi);
    w.key_value("kappa", result.spec.kappa);
    w.key_value("spread", result.spec.spread);
    w.key_value("horizon", result.spec.horizon);
    write_laziness_object(w, result.spec.laziness);
    w.key_value("paths", result.spec.n_paths);
    w.key_value("seed", result.spec.seed);
    w.end_object();
    w.key("cases");
    w.begin_array();
    for (const auto& item : result.cases) {
      w.begin_object();
      w.key_value("hurst", item.hurst);
      write_curve(w, "analytic", item.analytic);
      if (item.simulated.levels.empty()) {
        w.key("simulated");
        w.begin_object();
        w.end_object();
      } else {
        write_curve(w, "simulated", item.simulated);
      }
      w.numbers("realized_mean_abs", item.realized_mean_abs);
      w.key_value("m_star_sim", item.m_star_sim);
      w.key_value("m_star_theory_costfree", item.m_star_theory_costfree);
      w.key_value("m_star_theory_latency", item.m_star_theory_latency);
      w.key_value("delta_star_costfree", item.delta_star_costfree);
      w.key_value("delta_star_latency", item.delta_star_latency);
      w.key_value("relative_gap", item.relative_gap);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    write_output(mc.out, w.take());
  });

  // ---------------- empirical ----------------
  struct {
    SchemaFlags source;
    CostSpec costs;
    int levels = 0;
    std::string out = "-";
    std::string format = "json";
  } emp;
  auto* empirical =
      app.add_subcommand("empirical", "fit a price CSV and compare empirical vs model curves");
  emp.source.add_to(empirical);
  empirical->add_option("--spread", emp.costs.spread, "cost per trade")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  empirical->add_option("--lambda", emp.costs.lambda, "laziness scale")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  empirical->add_option("--alpha", emp.costs.alpha, "laziness exponent (>= 1)")
      ->check(CLI::Range(1.0, 16.0))
      ->capture_default_str();
  empirical->add_option("--levels", emp.levels, "dyadic levels (0 = auto)")
      ->check(CLI::Range(0, 24))
      ->capture_default_str();
  empirical->add_option("--out,-o", emp.out, "output path, - for stdout")->capture_default_str();
  empirical->add_option("--format", emp.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  empirical->callback([&] {
    const PricePath path = load_price_csv(emp.source.input, emp.source.schema);
    const EmpiricalResult result = run_empirical(path, emp.costs, emp.levels);
    if (emp.format == "csv") {
      write_output(emp.out, empirical_to_csv(result));
      return;
    }
    JsonWriter w;
    w.begin_object();
    w.key_value("command", std::string_view("empirical"));
    w.key("params");
    w.begin_object();
    write_schema_params(w, emp.source);
    w.key_value("spread", emp.costs.spread);
    w.key_value("lambda", emp.costs.lambda);
    w.key_value("alpha", emp.costs.alpha);
    w.key_value("levels", static_cast<int>(result.fit.levels.size()));
    w.end_object();
    write_fit(w, "fit", result.fit);
    write_curve(w, "empirical_curve", result.empirical_curve);
    write_curve(w, "theory_curve", result.theory_curve);
    w.key_value("m_star_emp", result.m_star_emp);
    w.key_value("m_star_theory", result.m_star_theory);
    w.key_value("delta_star_theory", result.delta_star_theory);
    w.key_value("m_star_theory_latency", result.m_star_theory_latency);
    w.key_value("delta_star_latency", result.delta_star_latency);
    w.end_object();
    write_output(emp.out, w.take());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const EstimationError& e) {
    std::cerr << "error: estimation: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return 4;
  } catch (const IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
