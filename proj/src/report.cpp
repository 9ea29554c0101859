#include "awtaylor/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace awt {

namespace {

std::string json_number(double v) {
  // JSON has no literal for non-finite numbers; they travel as strings.
  if (!std::isfinite(v)) return "\"" + format_double(v) + "\"";
  return format_double(v);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string param_json(const ParamValue& v) {
  struct {
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(double d) const { return json_number(d); }
    std::string operator()(cplx z) const { return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]"; }
    std::string operator()(const std::string& s) const { return json_string(s); }
  } visitor;
  return std::visit(visitor, v);
}

std::string param_text(const ParamValue& v) {
  struct {
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(cplx z) const { return format_double(z.real()) + (z.imag() < 0 ? "" : "+") +
                                                   format_double(z.imag()) + "i"; }
    std::string operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, v);
}

}  // namespace

void finalize(VerificationReport& r, double threshold) {
  r.threshold = threshold;
  r.abs_error = std::abs(r.lhs - r.rhs);
  const double mag = std::abs(r.lhs);
  r.rel_error = r.abs_error / std::max(mag, 1e-30);
  const double measured = mag < 1.0 ? r.abs_error : r.rel_error;
  r.pass = measured < threshold;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json_line(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"formula_id\":" << json_string(r.formula_id) << ",\"params\":{";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) os << ',';
    os << json_string(r.params[i].first) << ':' << param_json(r.params[i].second);
  }
  os << "},\"lhs_re\":" << json_number(r.lhs.real()) << ",\"lhs_im\":" << json_number(r.lhs.imag())
     << ",\"rhs_re\":" << json_number(r.rhs.real()) << ",\"rhs_im\":" << json_number(r.rhs.imag())
     << ",\"abs_error\":" << json_number(r.abs_error) << ",\"rel_error\":" << json_number(r.rel_error)
     << ",\"threshold\":" << json_number(r.threshold) << ",\"pass\":" << (r.pass ? "true" : "false")
     << ",\"diagnostics\":{\"terms\":" << r.diagnostics.terms
     << ",\"quadrature_nodes\":" << r.diagnostics.quadrature_nodes
     << ",\"truncation_T\":" << json_number(r.diagnostics.truncation_T)
     << ",\"tail_estimate\":" << json_number(r.diagnostics.tail_estimate)
     << ",\"quadrature_error\":" << json_number(r.diagnostics.quadrature_error) << '}';
  if (!r.error.empty()) os << ",\"error\":" << json_string(r.error);
  os << '}';
  return os.str();
}

std::string csv_header() {
  return "formula_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,threshold,pass,terms,"
         "quadrature_nodes,truncation_T,tail_estimate,quadrature_error,error";
}

std::string to_csv_row(const VerificationReport& r) {
  std::string params;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) params += ';';
    params += r.params[i].first + "=" + param_text(r.params[i].second);
  }
  std::ostringstream os;
  os << r.formula_id << ",\"" << params << "\"," << format_double(r.lhs.real()) << ','
     << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ',' << format_double(r.rhs.imag())
     << ',' << format_double(r.abs_error) << ',' << format_double(r.rel_error) << ','
     << format_double(r.threshold) << ',' << (r.pass ? "true" : "false") << ',' << r.diagnostics.terms << ','
     << r.diagnostics.quadrature_nodes << ',' << format_double(r.diagnostics.truncation_T) << ','
     << format_double(r.diagnostics.tail_estimate) << ',' << format_double(r.diagnostics.quadrature_error) << ",\""
     << r.error << '"';
  return os.str();
}

}  // namespace awt
