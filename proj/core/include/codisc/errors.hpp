#pragma once

#include <stdexcept>
#include <string>

namespace codisc {

// Base of all library errors. Subclasses map onto CLI exit codes:
// usage/config -> 1, bad input data -> 2, broken internal invariant -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

// ParseError carries a 1-based source location when one is known.
struct ParseError : DataError {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
      : DataError(format(msg, line_, column_)), line(line_), column(column_) {}

 private:
  static std::string format(const std::string& msg, int line, int col) {
    if (line <= 0) return msg;
    std::string out = msg + " (line " + std::to_string(line);
    if (col > 0) out += ", col " + std::to_string(col);
    return out + ")";
  }
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace codisc
