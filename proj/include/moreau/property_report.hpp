#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moreau {

// One named inequality/identity check: pass iff worst <= tolerance.
struct PropertyRow {
  std::string suite;
  std::string check;
  long samples = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline PropertyRow make_row(std::string suite, std::string check, long samples, double worst,
                            double tolerance) {
  PropertyRow r{std::move(suite), std::move(check), samples, worst, tolerance, false};
  r.pass = r.worst <= r.tolerance;
  return r;
}

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<PropertyRow> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

}  // namespace moreau
