// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 betashrink contributors
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace betashrink::csvio {

/// Shortest decimal representation that round-trips to the same double
/// (std::to_chars). Used everywhere a number is written to CSV/JSON so that
/// identical runs produce identical bytes and re-imports are exact.
std::string format_double(double value);

struct parse_error : std::runtime_error {
  std::size_t line;
  parse_error(std::size_t line_number, const std::string& what)
      : std::runtime_error(what), line(line_number) {}
};

/// Read a numeric column from a CSV/plain-text file. Accepts either a single
/// column or comma-separated rows, taking the last field of each row (so
/// "x,y" pairs yield y). A single non-numeric leading row is treated as a
/// header; any other non-numeric row raises parse_error with its line number.
std::vector<double> read_numeric_column(const std::string& path);

/// Write text to a file, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& content);

/// Read a whole file into a string.
std::string read_file(const std::string& path);

}  // namespace betashrink::csvio
