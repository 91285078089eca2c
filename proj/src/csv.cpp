#include "tradefreq/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "tradefreq/errors.hpp"

namespace tradefreq {

namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line the record starts on
};

std::vector<Record> parse_csv(const std::string& text) {
  std::vector<Record> records;
  Record current;
  current.line = 1;
  std::string field;
  bool quoted = false;
  bool any_field_content = false;
  std::size_t line = 1;

  auto end_field = [&] {
    current.fields.push_back(field);
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (current.fields.size() > 1 || !current.fields[0].empty() || any_field_content)
      records.push_back(std::move(current));
    current = Record{};
    current.line = line;
    any_field_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any_field_content = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;  // swallowed with the \n
        ++line;
        end_record();
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
        break;
    }
  }
  if (quoted) throw IoError("unterminated quoted field starting before line " + std::to_string(line));
  if (!field.empty() || !current.fields.empty()) end_record();
  return records;
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size() && std::isfinite(out);
}

// Days since 1970-01-01 of a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_iso_date(const std::string& s, double& out) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (s[i] < '0' || s[i] > '9') return false;
  const int year = std::stoi(s.substr(0, 4));
  const int month = std::stoi(s.substr(5, 2));
  const int day = std::stoi(s.substr(8, 2));
  if (month < 1 || month > 12 || day < 1 || day > 31) return false;
  out = static_cast<double>(days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)));
  return true;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  std::string available;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) available += ", ";
    available += header[i];
  }
  throw IoError("column '" + name + "' not found; header has: " + available);
}

struct Row {
  double time;
  double value;
  std::size_t line;
};

// Most frequent spacing, grouping values within 1e-9 relative; ties go to the
// smaller spacing.
double modal_spacing(std::vector<double> gaps) {
  std::sort(gaps.begin(), gaps.end());
  double best_value = gaps.front();
  std::size_t best_count = 0;
  std::size_t i = 0;
  while (i < gaps.size()) {
    std::size_t j = i;
    while (j + 1 < gaps.size() && gaps[j + 1] - gaps[i] <= 1e-9 * std::abs(gaps[i])) ++j;
    const std::size_t count = j - i + 1;
    if (count > best_count) {
      best_count = count;
      best_value = gaps[i + (count - 1) / 2];
    }
    i = j + 1;
  }
  return best_value;
}

}  // namespace

PricePath load_price_csv(const std::string& file, const CsvSchema& schema) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open '" + file + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);

  const auto records = parse_csv(text);
  if (records.size() < 2) throw IoError("'" + file + "' needs a header row and at least one data row");

  const auto& header = records.front().fields;
  const std::size_t date_idx = find_column(header, schema.date_column);
  const std::size_t price_idx = find_column(header, schema.price_column);

  std::vector<Row> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "line " + std::to_string(rec.line);
    if (rec.fields.size() != header.size())
      throw IoError(where + ": expected " + std::to_string(header.size()) + " fields, found " +
                    std::to_string(rec.fields.size()));
    Row row;
    row.line = rec.line;
    const std::string& date_text = rec.fields[date_idx];
    if (!parse_iso_date(date_text, row.time) && !parse_number(date_text, row.time))
      throw IoError(where + ": unparseable date '" + date_text + "'");
    const std::string& price_text = rec.fields[price_idx];
    if (!parse_number(price_text, row.value))
      throw IoError(where + ": unparseable price '" + price_text + "'");
    if (schema.log_transform) {
      if (!(row.value > 0.0))
        throw IoError(where + ": nonpositive price " + price_text + " under log transform");
      row.value = std::log(row.value);
    }
    rows.push_back(row);
  }
  if (rows.size() < 2) throw DomainError("'" + file + "' holds fewer than two data rows");

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.time < b.time; });
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!(rows[i].time < rows[i + 1].time))
      throw DomainError("duplicate timestamp at line " + std::to_string(rows[i + 1].line));

  std::vector<double> gaps(rows.size() - 1);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) gaps[i] = rows[i + 1].time - rows[i].time;
  const double dt = modal_spacing(gaps);
  bool uniform = true;
  for (double g : gaps)
    if (std::abs(g - dt) > 1e-9 * dt) {
      uniform = false;
      break;
    }

  std::vector<double> times;
  std::vector<double> values;
  if (uniform) {
    times.reserve(rows.size());
    values.reserve(rows.size());
    for (const Row& row : rows) {
      times.push_back(row.time);
      values.push_back(row.value);
    }
  } else if (schema.resample) {
    // Last observation carried forward onto the modal grid.
    const double t0 = rows.front().time;
    const double t_end = rows.back().time + 1e-9 * dt;
    std::size_t ptr = 0;
    for (std::int64_t j = 0;; ++j) {
      const double t = t0 + static_cast<double>(j) * dt;
      if (t > t_end) break;
      while (ptr + 1 < rows.size() && rows[ptr + 1].time <= t + 1e-9 * dt) ++ptr;
      times.push_back(t);
      values.push_back(rows[ptr].value);
    }
  } else {
    throw DomainError("non-uniform spacing in '" + file + "' (modal gap " + std::to_string(dt) +
                      "); pass the resample option to carry observations forward");
  }

  return PricePath::from_series(std::move(times), std::move(values));
}

}  // namespace tradefreq
