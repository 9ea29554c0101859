#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <limits>

#include "awtaylor/report.hpp"

using namespace awt;

TEST_CASE("17 significant digits round-trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("pass rule") {
  VerificationReport r;
  r.lhs = 0.5;
  r.rhs = 0.5 + 1e-11;
  finalize(r, 1e-10);
  CHECK(r.pass);  // abs error below 1
  r.lhs = 1e6;
  r.rhs = 1e6 + 1e-3;
  finalize(r, 1e-10);
  CHECK_FALSE(r.pass);
  CHECK(r.rel_error == doctest::Approx(1e-9));
}

TEST_CASE("serialization") {
  VerificationReport r;
  r.formula_id = "q-gauss";
  r.params = {{"q", 0.5}, {"n", 3LL}, {"u", cplx(1.0, -2.0)}, {"row", std::string("T")}};
  r.lhs = 1.0;
  r.rhs = std::numeric_limits<double>::quiet_NaN();
  finalize(r, 1e-9);
  const std::string j = to_json_line(r);
  CHECK(j.find("\"formula_id\":\"q-gauss\"") != std::string::npos);
  CHECK(j.find("\"u\":[1,-2]") != std::string::npos);
  CHECK(j.find("\"rhs_re\":\"nan\"") != std::string::npos);
  CHECK(j.find("\"error\"") == std::string::npos);
  r.error = "domain: boom";
  CHECK(to_json_line(r).find("\"error\":\"domain: boom\"") != std::string::npos);
  const std::string row = to_csv_row(r);
  CHECK(row.rfind("\"domain: boom\"") == row.size() - 14);
  CHECK(csv_header().substr(0, 10) == "formula_id");
}
