#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tradefreq/dyadic_model.hpp"
#include "tradefreq/experiments.hpp"
#include "tradefreq/fbm.hpp"
#include "tradefreq/hurst.hpp"
#include "tradefreq/interval.hpp"

namespace tradefreq {

// Floats in every output format carry 17 significant digits so that parsing
// them back reproduces the exact double.
std::string format_double(double x);

// Insertion-ordered pretty JSON with two-space indentation. Keys render in
// the order written; nesting is tracked so commas land correctly.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view name);
  void value(double x);
  void value(int x);
  void value(std::int64_t x);
  void value(std::uint64_t x);
  void value(bool x);
  void value(std::string_view x);

  void key_value(std::string_view name, double x) { key(name); value(x); }
  void key_value(std::string_view name, int x) { key(name); value(x); }
  void key_value(std::string_view name, std::int64_t x) { key(name); value(x); }
  void key_value(std::string_view name, std::uint64_t x) { key(name); value(x); }
  void key_value(std::string_view name, bool x) { key(name); value(x); }
  void key_value(std::string_view name, std::string_view x) { key(name); value(x); }

  void numbers(std::string_view name, const std::vector<double>& xs);
  void integers(std::string_view name, const std::vector<int>& xs);

  // Finishes the document (trailing newline) and returns it.
  std::string take();

 private:
  void prepare_for_value(bool container);
  void indent();

  std::string out_;
  // One frame per open container. Arrays stay on one line until a container
  // element forces them multiline.
  struct Frame {
    bool object;
    bool has_element;
    bool multiline;
  };
  std::vector<Frame> stack_;
  bool pending_key_ = false;
};

std::string escape_json(std::string_view s);

// Shared JSON fragments (callers hold an open object and write fields).
void write_laziness_fields(JsonWriter& w, const LazinessSpec& spec);
void write_curve(JsonWriter& w, std::string_view name, const ProfitCurve& curve);
void write_interval(JsonWriter& w, std::string_view name, const OptimalInterval& interval);
void write_fit(JsonWriter& w, std::string_view name, const HurstFit& fit);

// CSV renderings of the same payloads.
std::string path_to_csv(const FbmPath& path);
std::string curve_to_csv(const ProfitCurve& curve);
std::string fit_to_csv(const HurstFit& fit, double delta_t);
std::string mc_to_csv(const McExperimentResult& result);
std::string empirical_to_csv(const EmpiricalResult& result);

}  // namespace tradefreq
