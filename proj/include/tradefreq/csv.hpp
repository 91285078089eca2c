#pragma once

#include <string>

#include "tradefreq/hurst.hpp"

namespace tradefreq {

struct CsvSchema {
  std::string date_column = "date";
  std::string price_column = "price";
  bool log_transform = true;  // input holds raw prices; take logs (prices must be > 0)
  bool resample = false;      // carry last observation forward onto the modal grid
};

// Loads a header-carrying CSV (RFC 4180 quoting, UTF-8) into a uniform
// log-price path. The date column holds either ISO dates (YYYY-MM-DD, mapped
// to day counts) or plain numbers. Rows are sorted by date ascending; the
// spacing is inferred from the modal gap. Non-uniform spacing is rejected
// unless schema.resample is set. Structural problems raise IoError with the
// 1-based source line; degenerate series raise DomainError.
PricePath load_price_csv(const std::string& file, const CsvSchema& schema);

}  // namespace tradefreq
