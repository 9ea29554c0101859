#pragma once

// Verification reports and their JSON-lines / CSV serialization.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "awtaylor/error.hpp"

namespace awt {

using ParamValue = std::variant<long long, double, cplx, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct Diagnostics {
  long terms = 0;
  long quadrature_nodes = 0;
  double truncation_T = 0.0;
  double tail_estimate = 0.0;
  double quadrature_error = 0.0;
};

struct VerificationReport {
  std::string formula_id;
  ParamList params;
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  double abs_error = 0.0;
  double rel_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
  Diagnostics diagnostics;
  std::string error;  // set when the point raised instead of comparing
};

/// Fills abs_error, rel_error = |lhs - rhs| / max(|lhs|, 1e-30) and pass:
/// the absolute error is compared when |lhs| < 1, the relative one otherwise.
void finalize(VerificationReport& r, double threshold);

/// Shortest round-trip text for a double ("%.17g"; non-finite values as
/// "nan", "inf", "-inf").
std::string format_double(double v);

std::string to_json_line(const VerificationReport& r);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

}  // namespace awt
