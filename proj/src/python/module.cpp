#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tradefreq/errors.hpp"
#include "tradefreq/experiments.hpp"
#include "tradefreq/fbm.hpp"

namespace py = pybind11;
using namespace tradefreq;

namespace {

LazinessSpec laziness_from_args(const std::string& mode, double l0, double lambda, double alpha) {
  if (mode == "constant") return LazinessSpec::constant(l0);
  if (mode == "level-power") return LazinessSpec::level_power(l0, lambda, alpha);
  if (mode == "trade-count-power") return LazinessSpec::trade_count_power(lambda, alpha);
  throw DomainError("unknown laziness mode '" + mode + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "trading-frequency optimization on fractal price paths";

  py::register_exception<IoError>(m, "IoError", PyExc_IOError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<LazinessSpec>(m, "LazinessSpec")
      .def(py::init(&laziness_from_args), py::arg("mode") = "constant", py::arg("l0") = 0.0,
           py::arg("lambda_") = 0.0, py::arg("alpha") = 1.0)
      .def_static("constant", &LazinessSpec::constant, py::arg("l0") = 0.0)
      .def_static("level_power", &LazinessSpec::level_power, py::arg("l0"), py::arg("lambda_"),
                  py::arg("alpha"))
      .def_static("trade_count_power", &LazinessSpec::trade_count_power, py::arg("lambda_"),
                  py::arg("alpha"))
      .def("at_level", &LazinessSpec::at_level, py::arg("level"))
      .def("at_interval", &LazinessSpec::at_interval, py::arg("delta"), py::arg("horizon"))
      .def_property_readonly("mode", &LazinessSpec::mode_name)
      .def_readonly("base", &LazinessSpec::base)
      .def_readonly("scale", &LazinessSpec::scale)
      .def_readonly("exponent", &LazinessSpec::exponent);

  py::class_<ProfitCurve>(m, "ProfitCurve")
      .def_readonly("levels", &ProfitCurve::levels)
      .def_readonly("profits", &ProfitCurve::profits)
      .def_readonly("m_max", &ProfitCurve::m_max)
      .def_readonly("m_star", &ProfitCurve::m_star)
      .def_readonly("capped", &ProfitCurve::capped)
      .def_readonly("unimodal", &ProfitCurve::unimodal);

  py::class_<OptimalInterval>(m, "OptimalInterval")
      .def_readonly("delta_star", &OptimalInterval::delta_star)
      .def_readonly("n_star", &OptimalInterval::n_star)
      .def_readonly("m_star_rounded", &OptimalInterval::m_star_rounded)
      .def_readonly("foc_residual", &OptimalInterval::foc_residual)
      .def_readonly("second_order_value", &OptimalInterval::second_order_value);

  py::class_<HurstFit>(m, "HurstFit")
      .def_readonly("hurst", &HurstFit::hurst)
      .def_readonly("kappa", &HurstFit::kappa)
      .def_readonly("intercept", &HurstFit::intercept)
      .def_readonly("r_squared", &HurstFit::r_squared)
      .def_readonly("levels", &HurstFit::levels)
      .def_readonly("mean_abs_increments", &HurstFit::mean_abs_increments)
      .def_readonly("residuals", &HurstFit::residuals);

  m.def("fbm_covariance", &fbm_covariance, py::arg("t"), py::arg("s"), py::arg("hurst"));
  m.def("fgn_autocovariance", &fgn_autocovariance, py::arg("lag"), py::arg("hurst"));
  m.def("kappa_from_sigma", &kappa_from_sigma, py::arg("sigma"));

  m.def(
      "sample_path",
      [](double hurst, double sigma, double drift, std::int64_t n_steps, double horizon,
         const std::string& method, std::uint64_t seed) {
        FbmConfig cfg;
        cfg.hurst = hurst;
        cfg.sigma = sigma;
        cfg.drift = drift;
        cfg.n_steps = n_steps;
        cfg.horizon = horizon;
        cfg.method = method == "cholesky" ? FbmMethod::kCholesky : FbmMethod::kCirculant;
        cfg.seed = seed;
        FbmPath path = sample_path(cfg);
        return py::make_tuple(std::move(path.times), std::move(path.values));
      },
      py::arg("hurst"), py::arg("sigma") = 1.0, py::arg("drift") = 0.0, py::arg("n_steps") = 1024,
      py::arg("horizon") = 1.0, py::arg("method") = "circulant", py::arg("seed") = 0,
      "Sample one fractional Brownian path; returns (times, values).");

  m.def(
      "exploitable_move",
      [](int level, double horizon, double roughness, double micro_scale) {
        return exploitable_move(level, DeterministicParams{horizon, roughness, micro_scale});
      },
      py::arg("level"), py::arg("horizon") = 1.0, py::arg("roughness") = 0.5,
      py::arg("micro_scale") = 0.0);

  m.def(
      "optimize_profit_curve",
      [](double horizon, double roughness, double micro_scale, double spread,
         const LazinessSpec& laziness, int level_cap) {
        return optimize_profit_curve(
            DeterministicParams{horizon, roughness, micro_scale, spread, laziness}, level_cap);
      },
      py::arg("horizon") = 1.0, py::arg("roughness") = 0.5, py::arg("micro_scale") = 0.0,
      py::arg("spread") = 0.0, py::arg("laziness") = LazinessSpec::constant(0.0),
      py::arg("level_cap") = kDefaultLevelCap);

  m.def(
      "optimal_interval",
      [](double hurst, double kappa, double spread, double horizon, const LazinessSpec& laziness) {
        StochasticParams params{hurst, kappa, spread, horizon, laziness};
        if (laziness.mode == LazinessMode::kConstant) return optimal_interval_closed_form(params);
        return optimal_interval_with_latency(params);
      },
      py::arg("hurst"), py::arg("kappa"), py::arg("spread"), py::arg("horizon") = 1.0,
      py::arg("laziness") = LazinessSpec::constant(0.0));

  m.def(
      "expected_profit",
      [](double delta, double hurst, double kappa, double spread, double horizon,
         const LazinessSpec& laziness) {
        return expected_profit(delta, StochasticParams{hurst, kappa, spread, horizon, laziness});
      },
      py::arg("delta"), py::arg("hurst"), py::arg("kappa"), py::arg("spread"),
      py::arg("horizon") = 1.0, py::arg("laziness") = LazinessSpec::constant(0.0));

  m.def(
      "fit_scaling",
      [](const std::vector<double>& times, const std::vector<double>& log_prices, int levels) {
        const PricePath path = PricePath::from_series(times, log_prices);
        return fit_scaling(path, levels > 0 ? levels : default_scaling_levels(path));
      },
      py::arg("times"), py::arg("log_prices"), py::arg("levels") = 0);
}
