#pragma once

#include <charconv>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "extended_real.hpp"
#include "property_report.hpp"

namespace moreau::csv {

// Shortest round-trip decimal form; +infinity prints as "inf". Keeps reruns
// byte-identical and parsing lossless.
inline std::string format(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

inline std::string format(const ExtendedReal& v) {
  return v.finite() ? format(v.value()) : std::string("inf");
}

// Comma separator, mandatory header, LF terminators. Open the target stream
// in binary mode so no platform rewrites the line endings.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& names) {
    columns_ = names.size();
    write_strings(names);
  }

  void row(const std::vector<std::string>& cells) {
    if (columns_ != 0 && cells.size() != columns_)
      throw std::invalid_argument("csv row width does not match header");
    write_strings(cells);
  }

  void row(const std::vector<ExtendedReal>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (const auto& c : cells) s.push_back(format(c));
    row(s);
  }

 private:
  // RFC 4180 quoting for cells carrying a separator, quote, or newline.
  static std::string escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }

  void write_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << escape(cells[i]);
    }
    out_ << '\n';
  }

  std::ostream& out_;
  std::size_t columns_ = 0;
};

inline void write_property_report(std::ostream& out, const PropertyReport& report) {
  Writer w(out);
  w.header({"seed", "suite", "check", "samples", "worst", "tolerance", "pass"});
  for (const auto& r : report.rows)
    w.row(std::vector<std::string>{std::to_string(report.seed), r.suite, r.check,
                                   std::to_string(r.samples), format(r.worst),
                                   format(r.tolerance), r.pass ? "1" : "0"});
}

}  // namespace moreau::csv
