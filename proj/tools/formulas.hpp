#pragma once

// Formula registry behind the command line harness: parameter defaults,
// seeded random draws and the evaluator for each formula id.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "awtaylor/qseries.hpp"

namespace awt::cli {

using json = nlohmann::json;

struct Formula {
  std::string id;
  json defaults;  // parameter object
  // Random admissible parameter object; `base` pins user-supplied keys.
  json (*draw)(std::uint64_t seed, std::size_t index, const json& base);
  VerificationReport (*evaluate)(const json& params, const VerifyOptions& o);
};

const std::vector<Formula>& registry();
const Formula& find_formula(const std::string& id);  // DomainError when unknown

/// Numbers are given as a JSON number, a [re, im] pair, or a string
/// "re" / "re,im".
cplx get_complex(const json& p, const std::string& key);
double get_real(const json& p, const std::string& key);
long long get_int(const json& p, const std::string& key);
std::string get_string(const json& p, const std::string& key);

/// Parses "re" or "re,im".
cplx parse_complex(const std::string& s);

/// Merges `overrides` into a copy of `base`.
json merged(const json& base, const json& overrides);

/// A report for a point that raised instead of producing a comparison.
VerificationReport failed_report(const std::string& id, const json& params, const std::string& message);

/// Evaluates every point, in parallel across points, keeping input order.
/// Exceptions are turned into failed records; `status` receives 0, 1 or 2.
std::vector<VerificationReport> evaluate_points(const Formula& f, const std::vector<json>& points,
                                                const VerifyOptions& o, int& status);

}  // namespace awt::cli
