#include "tradefreq/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace tradefreq {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string escape_json(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

void JsonWriter::indent() {
  out_.append(2 * stack_.size(), ' ');
}

// Scalars inside an array sit on one line; containers inside an array (and
// every object member) break onto their own lines.
void JsonWriter::prepare_for_value(bool container) {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& frame = stack_.back();
  if (frame.object || container) {
    if (frame.has_element) out_ += ',';
    out_ += '\n';
    indent();
    if (container) frame.multiline = true;
  } else {
    if (frame.has_element) out_ += ", ";
  }
  frame.has_element = true;
}

void JsonWriter::begin_object() {
  prepare_for_value(true);
  out_ += '{';
  stack_.push_back({true, false, false});
}

void JsonWriter::end_object() {
  const bool had = stack_.back().has_element;
  stack_.pop_back();
  if (had) {
    out_ += '\n';
    indent();
  }
  out_ += '}';
}

void JsonWriter::begin_array() {
  prepare_for_value(true);
  out_ += '[';
  stack_.push_back({false, false, false});
}

void JsonWriter::end_array() {
  const bool multiline = stack_.back().multiline;
  stack_.pop_back();
  if (multiline) {
    out_ += '\n';
    indent();
  }
  out_ += ']';
}

void JsonWriter::key(std::string_view name) {
  prepare_for_value(false);
  out_ += '"';
  out_ += escape_json(name);
  out_ += "\": ";
  pending_key_ = true;
}

void JsonWriter::value(double x) {
  prepare_for_value(false);
  out_ += format_double(x);
}

void JsonWriter::value(int x) {
  prepare_for_value(false);
  out_ += std::to_string(x);
}

void JsonWriter::value(std::int64_t x) {
  prepare_for_value(false);
  out_ += std::to_string(x);
}

void JsonWriter::value(std::uint64_t x) {
  prepare_for_value(false);
  out_ += std::to_string(x);
}

void JsonWriter::value(bool x) {
  prepare_for_value(false);
  out_ += x ? "true" : "false";
}

void JsonWriter::value(std::string_view x) {
  prepare_for_value(false);
  out_ += '"';
  out_ += escape_json(x);
  out_ += '"';
}

void JsonWriter::numbers(std::string_view name, const std::vector<double>& xs) {
  key(name);
  begin_array();
  for (double x : xs) value(x);
  end_array();
}

void JsonWriter::integers(std::string_view name, const std::vector<int>& xs) {
  key(name);
  begin_array();
  for (int x : xs) value(x);
  end_array();
}

std::string JsonWriter::take() {
  out_ += '\n';
  return std::move(out_);
}

void write_laziness_fields(JsonWriter& w, const LazinessSpec& spec) {
  w.key_value("mode", std::string_view(spec.mode_name()));
  w.key_value("l0", spec.base);
  w.key_value("lambda", spec.scale);
  w.key_value("alpha", spec.exponent);
}

void write_curve(JsonWriter& w, std::string_view name, const ProfitCurve& curve) {
  w.key(name);
  w.begin_object();
  w.integers("levels", curve.levels);
  w.numbers("profits", curve.profits);
  w.key_value("m_max", curve.m_max);
  w.key_value("m_star", curve.m_star);
  w.key_value("capped", curve.capped);
  w.key_value("unimodal", curve.unimodal);
  w.end_object();
}

void write_interval(JsonWriter& w, std::string_view name, const OptimalInterval& interval) {
  w.key(name);
  w.begin_object();
  w.key_value("delta_star", interval.delta_star);
  w.key_value("n_star", interval.n_star);
  w.key_value("m_star_rounded", interval.m_star_rounded);
  w.key_value("foc_residual", interval.foc_residual);
  w.key_value("second_order_value", interval.second_order_value);
  w.end_object();
}

void write_fit(JsonWriter& w, std::string_view name, const HurstFit& fit) {
  w.key(name);
  w.begin_object();
  w.key_value("hurst", fit.hurst);
  w.key_value("kappa", fit.kappa);
  w.key_value("intercept", fit.intercept);
  w.key_value("r_squared", fit.r_squared);
  w.integers("levels", fit.levels);
  w.numbers("mean_abs_increments", fit.mean_abs_increments);
  w.numbers("residuals", fit.residuals);
  w.end_object();
}

std::string path_to_csv(const FbmPath& path) {
  std::string out = "time,value\n";
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    out += format_double(path.times[i]);
    out += ',';
    out += format_double(path.values[i]);
    out += '\n';
  }
  return out;
}

std::string curve_to_csv(const ProfitCurve& curve) {
  std::string out = "m,profit\n";
  for (std::size_t i = 0; i < curve.levels.size(); ++i) {
    out += std::to_string(curve.levels[i]);
    out += ',';
    out += format_double(curve.profits[i]);
    out += '\n';
  }
  return out;
}

std::string fit_to_csv(const HurstFit& fit, double delta_t) {
  std::string out = "level,lag_dt,mean_abs_increment,residual\n";
  for (std::size_t i = 0; i < fit.levels.size(); ++i) {
    out += std::to_string(fit.levels[i]);
    out += ',';
    out += format_double(std::ldexp(delta_t, fit.levels[i]));
    out += ',';
    out += format_double(fit.mean_abs_increments[i]);
    out += ',';
    out += format_double(fit.residuals[i]);
    out += '\n';
  }
  return out;
}

std::string mc_to_csv(const McExperimentResult& result) {
  std::string out = "hurst,m,profit_analytic,profit_simulated,realized_mean_abs\n";
  for (const auto& item : result.cases) {
    for (std::size_t i = 0; i < item.analytic.levels.size(); ++i) {
      out += format_double(item.hurst);
      out += ',';
      out += std::to_string(item.analytic.levels[i]);
      out += ',';
      out += format_double(item.analytic.profits[i]);
      out += ',';
      out += item.simulated.profits.empty() ? "" : format_double(item.simulated.profits[i]);
      out += ',';
      out += item.realized_mean_abs.empty() ? "" : format_double(item.realized_mean_abs[i]);
      out += '\n';
    }
  }
  return out;
}

std::string empirical_to_csv(const EmpiricalResult& result) {
  std::string out = "m,profit_empirical,profit_theory\n";
  for (std::size_t i = 0; i < result.empirical_curve.levels.size(); ++i) {
    out += std::to_string(result.empirical_curve.levels[i]);
    out += ',';
    out += format_double(result.empirical_curve.profits[i]);
    out += ',';
    out += format_double(result.theory_curve.profits[i]);
    out += '\n';
  }
  return out;
}

}  // namespace tradefreq
