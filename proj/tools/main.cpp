// awtaylor: command line harness for the summation-formula verifiers,
// Taylor expansions of the built-in function families and the growth
// bound sweeps.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "awtaylor/bounds.hpp"
#include "formulas.hpp"

using namespace awt;
using namespace awt::cli;

namespace {

class Sink {
 public:
  Sink(const std::string& path, const std::string& format) : format_(format) {
    if (format != "jsonl" && format != "csv") throw DomainError("output format must be jsonl or csv");
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return !file_; }

  void report(const VerificationReport& r) {
    if (format_ == "csv") {
      if (!header_done_) os() << csv_header() << '\n';
      header_done_ = true;
      os() << to_csv_row(r) << '\n';
    } else {
      os() << to_json_line(r) << '\n';
    }
  }
  // Free-form records (expand, bounds): JSON lines, or CSV with the keys
  // of the first record as header.
  void record(const json& j) {
    if (format_ == "csv") {
      if (!header_done_) {
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) os() << (first ? "" : ",") << it.key(), first = false;
        os() << '\n';
        header_done_ = true;
      }
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        os() << (first ? "" : ",");
        first = false;
        if (it->is_number_float()) os() << format_double(it->get<double>());
        else if (it->is_string()) os() << it->get<std::string>();
        else os() << it->dump();
      }
      os() << '\n';
    } else {
      os() << dump(j) << '\n';
    }
  }

 private:
  // nlohmann prints doubles with up to 17 digits already; this keeps key
  // order as inserted and non-finite values as strings.
  static std::string dump(const json& j) {
    std::string out = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += (first ? "\"" : ",\"") + it.key() + "\":";
      first = false;
      if (it->is_number_float()) {
        const double v = it->get<double>();
        out += std::isfinite(v) ? format_double(v) : "\"" + format_double(v) + "\"";
      } else {
        out += it->dump();
      }
    }
    return out + "}";
  }

  std::string format_;
  std::unique_ptr<std::ofstream> file_;
  bool header_done_ = false;
};

struct Common {
  std::string out;
  std::string format = "jsonl";
  std::optional<double> tol;
  double series_tol = 1e-16;
  int max_terms = 10000;
  bool serial = false;

  VerifyOptions options() const {
    VerifyOptions o;
    o.tol.series_tol = series_tol;
    o.tol.max_terms = max_terms;
    if (tol) o.tol.identity_tol = *tol;
    if (auto warn = o.tol.validate()) std::cerr << "warning: " << *warn << '\n';
    o.threshold = tol;
    o.exec = serial ? Exec::serial : Exec::parallel;
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Report file (default: standard output)");
  app->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  app->add_option("--tol", c.tol, "Pass threshold on the residual (default per formula)");
  app->add_option("--series-tol", c.series_tol, "Term cutoff for series and products");
  app->add_option("--max-terms", c.max_terms, "Cap on series/product terms");
  app->add_flag("--serial", c.serial, "Run the serial reference kernels");
}

// Named parameter flags shared by verify and sweep; values are "re" or "re,im".
struct ParamFlags {
  std::map<std::string, std::string> values;
  std::vector<std::string> generic;
  bool exact = false;

  void attach(CLI::App* app) {
    for (const char* key : {"q", "alpha", "beta", "xi", "x", "y", "z", "u", "v", "w", "n", "k", "row", "form"})
      app->add_option(std::string("--") + key, values[key], std::string("Parameter ") + key);
    app->add_option("--param", generic, "Extra parameter as key=value");
    app->add_flag("--exact", exact, "Table II rows: also check in exact rational arithmetic");
  }

  json to_json() const {
    json j = json::object();
    auto put = [&](const std::string& key, const std::string& text) {
      if (key == "row" || key == "form") {
        j[key] = text;
        return;
      }
      const cplx z = parse_complex(text);
      if (z.imag() == 0.0) j[key] = z.real();
      else j[key] = json::array({z.real(), z.imag()});
    };
    for (const auto& [key, text] : values)
      if (!text.empty()) put(key, text);
    for (const std::string& kv : generic) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw DomainError("--param expects key=value, got '" + kv + "'");
      put(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (exact) j["exact"] = true;
    return j;
  }
};

void summary(const std::string& what, const std::vector<VerificationReport>& rs, int status) {
  long passed = 0, errors = 0;
  double worst_abs = 0.0, worst_rel = 0.0;
  for (const auto& r : rs) {
    if (!r.error.empty()) ++errors;
    else if (r.pass) ++passed;
    if (std::isfinite(r.abs_error)) worst_abs = std::max(worst_abs, r.abs_error);
    if (std::isfinite(r.rel_error)) worst_rel = std::max(worst_rel, r.rel_error);
  }
  std::printf("summary: %s points=%zu passed=%ld failed=%ld errors=%ld worst_abs=%.3e worst_rel=%.3e status=%d\n",
              what.c_str(), rs.size(), passed, static_cast<long>(rs.size()) - passed - errors, errors, worst_abs,
              worst_rel, status);
}

int run_points(const std::string& id, const std::vector<json>& points, const Common& c) {
  const Formula& f = find_formula(id);
  int status = 0;
  const auto reports = evaluate_points(f, points, c.options(), status);
  Sink sink(c.out, c.format);
  for (const auto& r : reports) sink.report(r);
  sink.os().flush();
  summary(id, reports, status);
  return status;
}

int run_verify(const std::string& id, const json& params, const Common& c) {
  const Formula& f = find_formula(id);
  return run_points(id, {merged(f.defaults, params)}, c);
}

std::vector<json> load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid file '" + path + "'");
  json g;
  try {
    in >> g;
  } catch (const json::exception& e) {
    throw DomainError(std::string("grid file is not valid JSON: ") + e.what());
  }
  if (g.is_object() && g.contains("points")) g = g["points"];
  if (!g.is_array()) throw DomainError("grid file must hold an array of parameter objects");
  std::vector<json> out;
  for (const json& p : g) {
    if (!p.is_object()) throw DomainError("grid entries must be objects");
    out.push_back(p);
  }
  return out;
}

int run_sweep(const std::string& id, const std::vector<json>& grid, long count, std::uint64_t seed, const json& pinned,
              const Common& c) {
  const Formula& f = find_formula(id);
  std::vector<json> points;
  if (!grid.empty()) {
    for (const json& p : grid) points.push_back(merged(merged(f.defaults, p), pinned));
  } else {
    if (count <= 0) throw DomainError("sweep needs --grid or a positive --count");
    for (long i = 0; i < count; ++i)
      points.push_back(merged(f.draw(seed, static_cast<std::size_t>(i), pinned), pinned));
  }
  return run_points(id, points, c);
}

// ---- expand

AnalyticFunction family_function(const std::string& family, const json& p) {
  AnalyticFunction f;
  if (family == "exp") {
    f.eval = [](cplx y) { return std::exp(y); };
  } else if (family == "rational") {
    std::vector<cplx> poles;
    if (p.contains("poles")) {
      for (const json& v : p["poles"]) poles.push_back(get_complex(json{{"p", v}}, "p"));
    } else {
      poles = {3.0, -4.0};
    }
    if (poles.empty()) throw DomainError("rational family needs at least one pole");
    double nearest = std::abs(poles[0]);
    for (cplx pole : poles) nearest = std::min(nearest, std::abs(pole));
    if (!(nearest > 0.0)) throw DomainError("rational family: poles must be nonzero");
    f.eval = [poles](cplx y) {
      cplx s(0.0, 0.0);
      for (cplx pole : poles) s += 1.0 / (y - pole);
      return s;
    };
    f.domain = Disk{0.0, nearest};
  } else if (family == "geometric") {
    const cplx alpha = get_complex(p, "alpha"), beta = get_complex(p, "beta"), q = get_complex(p, "q");
    f.eval = [=](cplx y) {
      return (q_pochhammer_inf_polar(alpha * y, q) / q_pochhammer_inf_polar(beta * y, q)).value();
    };
    if (beta != cplx(0.0, 0.0)) f.domain = Disk{0.0, 1.0 / std::abs(beta)};
  } else if (family == "trig") {
    f = trig_function(get_real(p, "alpha"), get_real(p, "beta"), get_real(p, "q"));
  } else {
    throw DomainError("unknown family '" + family + "' (rational, exp, geometric, trig)");
  }
  return f;
}

int run_expand(const std::string& family, const json& params, const Common& c) {
  json p = {{"q", 0.5}, {"alpha", 0.3}, {"beta", 0.6}, {"order", 10}, {"method", "automatic"}};
  p["form"] = family == "geometric" ? "G" : family == "trig" ? "T" : "C";
  p = merged(p, params);
  const std::string form = get_string(p, "form");
  if (!p.contains("u")) p["u"] = form == "T" ? -1.5 : form == "G" ? 0.1 : 0.0;

  const AnalyticFunction f = family_function(family, p);
  const FormTag tag = parse_form_tag(form);
  const double q = get_real(p, "q");
  const cplx u = get_complex(p, "u");
  const cplx lambda = std::sqrt(cplx(q, 0.0));
  CanonicalForm cf = tag == FormTag::T   ? CanonicalForm::trigonometric(lambda, u)
                     : tag == FormTag::G ? CanonicalForm::geometric(lambda, u)
                     : tag == FormTag::Q ? CanonicalForm::quadratic(u)
                     : tag == FormTag::A ? CanonicalForm::arithmetic(u)
                                         : CanonicalForm::continuous(u);
  const PSequence seq(cf);
  const std::string m = get_string(p, "method");
  const CoefficientMethod method = m == "contour"    ? CoefficientMethod::contour
                                   : m == "residues" ? CoefficientMethod::residues
                                   : m == "automatic"
                                       ? CoefficientMethod::automatic
                                       : throw DomainError("method must be automatic, contour or residues");
  const int order = static_cast<int>(get_int(p, "order"));
  const TaylorExpansion e =
      taylor_coefficients(f, seq, order, method, std::nullopt, c.serial ? Exec::serial : Exec::parallel);

  Sink sink(c.out, c.format);
  for (int k = 0; k <= order; ++k) {
    json r;
    r["family"] = family;
    r["form"] = form;
    r["k"] = k;
    r["node_re"] = e.nodes[k].real();
    r["node_im"] = e.nodes[k].imag();
    r["coef_re"] = e.coefficients[k].real();
    r["coef_im"] = e.coefficients[k].imag();
    sink.record(r);
  }
  if (p.contains("x")) {
    const cplx x = get_complex(p, "x");
    const cplx s = taylor_eval(e, x);
    const cplx fx = f(x);
    const cplx rem = remainder_contour(f, seq, order, x, std::nullopt, c.serial ? Exec::serial : Exec::parallel);
    json r;
    r["family"] = family;
    r["form"] = form;
    r["k"] = -1;
    r["node_re"] = x.real();
    r["node_im"] = x.imag();
    r["coef_re"] = s.real();
    r["coef_im"] = s.imag();
    r["f_re"] = fx.real();
    r["f_im"] = fx.imag();
    r["remainder_re"] = rem.real();
    r["remainder_im"] = rem.imag();
    r["residual"] = std::abs(fx - s - rem);
    sink.record(r);
  }
  sink.os().flush();
  std::printf("summary: expand %s form=%s order=%d status=0\n", family.c_str(), form.c_str(), order);
  return 0;
}

// ---- bounds

int run_bounds(const json& params, const Common& c) {
  json p = {{"q", 0.5}, {"samples", 1000}, {"rho", 0.3}, {"delta", 0.1}, {"seed", 1}, {"max_power", 10.0}};
  p = merged(p, params);
  const double q = get_real(p, "q");
  const long samples = static_cast<long>(get_int(p, "samples"));
  const auto seed = static_cast<std::uint64_t>(get_int(p, "seed"));
  std::vector<double> radii = {10.0, 100.0, 1000.0};
  if (p.contains("radii")) {
    radii.clear();
    for (const json& r : p["radii"]) radii.push_back(r.get<double>());
  }
  const Exec exec = c.serial ? Exec::serial : Exec::parallel;
  const UpperBoundSweep up = sweep_upper_bound(q, samples, get_real(p, "max_power"), seed, exec);
  const LowerRatioSweep lo =
      sweep_lower_ratio(q, get_real(p, "rho"), get_real(p, "delta"), radii, samples, seed + 1, exec);

  Sink sink(c.out, c.format);
  json r;
  r["kind"] = "upper";
  r["q"] = q;
  r["samples"] = up.samples;
  r["violations"] = up.violations;
  r["worst_log_margin"] = up.worst_log_margin;
  sink.record(r);
  for (const RatioInfimum& ri : lo.per_radius) {
    json s;
    s["kind"] = "lower";
    s["q"] = q;
    s["samples"] = ri.samples;
    s["violations"] = 0;
    s["worst_log_margin"] = std::log(ri.infimum);
    s["radius"] = ri.abs_x;
    s["infimum"] = ri.infimum;
    sink.record(s);
  }
  sink.os().flush();
  const int status = (up.violations == 0 && lo.overall_infimum > 0.0 && lo.spread < 10.0) ? 0 : 1;
  std::printf("summary: bounds q=%g upper_violations=%ld lower_infimum=%.6e spread=%.4f status=%d\n", q,
              up.violations, lo.overall_infimum, lo.spread, status);
  return status;
}

// ---- run --config

int run_config(const std::string& path, Common c) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw DomainError(std::string("config file is not valid JSON: ") + e.what());
  }
  const std::string command = cfg.value("command", "");
  const json params = cfg.value("parameters", json::object());
  if (cfg.contains("tolerances")) {
    const json& t = cfg["tolerances"];
    c.series_tol = t.value("series_tol", c.series_tol);
    c.max_terms = t.value("max_terms", c.max_terms);
    if (t.contains("identity_tol")) c.tol = t["identity_tol"].get<double>();
  }
  c.out = cfg.value("output_path", c.out);
  c.format = cfg.value("output_format", c.format);
  if (c.format == "json") c.format = "jsonl";

  if (command == "verify") return run_verify(cfg.value("formula_id", ""), params, c);
  if (command == "sweep") {
    std::vector<json> grid;
    if (cfg.contains("grid"))
      for (const json& p : cfg["grid"]) grid.push_back(p);
    return run_sweep(cfg.value("formula_id", ""), grid, cfg.value("count", 0L), cfg.value("seed", 0ULL), params, c);
  }
  if (command == "expand") return run_expand(cfg.value("formula_id", cfg.value("family", "")), params, c);
  if (command == "bounds") return run_bounds(params, c);
  throw DomainError("config command must be verify, sweep, expand or bounds");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taylor expansion with respect to the Askey-Wilson operator: verification harness"};
  app.require_subcommand(1);
  Common common;

  std::string id;
  ParamFlags flags;
  auto* verify = app.add_subcommand("verify", "Verify one formula at one parameter point");
  verify->add_option("formula", id, "Formula id")->required();
  flags.attach(verify);
  add_common(verify, common);

  std::string sweep_id, grid_path;
  long count = 0;
  std::uint64_t seed = 0;
  ParamFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Verify a formula over a grid file or seeded random points");
  sweep->add_option("formula", sweep_id, "Formula id")->required();
  sweep->add_option("--grid", grid_path, "JSON file with an array of parameter objects");
  sweep->add_option("--count", count, "Number of seeded random points (without --grid)");
  sweep->add_option("--seed", seed, "Seed for random points");
  sweep_flags.attach(sweep);
  add_common(sweep, common);

  std::string family, form, poles, method = "automatic", q_text = "0.5", u_text, x_text, alpha_text = "0.3",
                              beta_text = "0.6";
  int order = 10;
  auto* expand = app.add_subcommand("expand", "Taylor coefficients of a built-in function family");
  expand->add_option("family", family, "rational, exp, geometric or trig")->required();
  expand->add_option("--form", form, "Canonical form T, G, Q, A or C");
  expand->add_option("--order", order, "Expansion order n");
  expand->add_option("--q", q_text, "Base q (lambda = sqrt q)");
  expand->add_option("--u", u_text, "Sequence parameter u");
  expand->add_option("--alpha", alpha_text, "Family parameter alpha");
  expand->add_option("--beta", beta_text, "Family parameter beta");
  expand->add_option("--poles", poles, "Rational family poles, ';'-separated");
  expand->add_option("--x", x_text, "Also evaluate S_n f, f and R_n f at this point");
  expand->add_option("--method", method, "automatic, contour or residues");
  add_common(expand, common);

  double bq = 0.5, rho = 0.3, delta = 0.1, max_power = 10.0;
  long samples = 1000;
  std::uint64_t bseed = 1;
  auto* bounds = app.add_subcommand("bounds", "Sweep the two-sided growth bounds for (x;q)_inf");
  bounds->add_option("--q", bq, "Base q in (0,1)");
  bounds->add_option("--samples", samples, "Samples per sweep");
  bounds->add_option("--rho", rho, "Excluded disk radius (relative)");
  bounds->add_option("--delta", delta, "Excluded neighbourhood of the origin");
  bounds->add_option("--seed", bseed, "Seed");
  bounds->add_option("--max-power", max_power, "Upper sweep covers 1 < |x| < q^-max_power");
  add_common(bounds, common);

  std::string config;
  auto* run = app.add_subcommand("run", "Execute a JSON run configuration");
  run->add_option("--config", config, "Configuration file")->required();
  add_common(run, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(id, flags.to_json(), common);
    if (sweep->parsed()) {
      const std::vector<json> grid = grid_path.empty() ? std::vector<json>{} : load_grid(grid_path);
      return run_sweep(sweep_id, grid, count, seed, sweep_flags.to_json(), common);
    }
    if (expand->parsed()) {
      json p = {{"order", order}, {"method", method}, {"q", parse_complex(q_text).real()},
                {"alpha", parse_complex(alpha_text).real()}, {"beta", parse_complex(beta_text).real()}};
      if (!form.empty()) p["form"] = form;
      auto cj = [](const std::string& s) {
        const cplx z = parse_complex(s);
        return z.imag() == 0.0 ? json(z.real()) : json::array({z.real(), z.imag()});
      };
      if (!u_text.empty()) p["u"] = cj(u_text);
      if (!x_text.empty()) p["x"] = cj(x_text);
      if (!poles.empty()) {
        json list = json::array();
        std::size_t start = 0;
        while (start <= poles.size()) {
          const auto end = poles.find(';', start);
          list.push_back(cj(poles.substr(start, end == std::string::npos ? std::string::npos : end - start)));
          if (end == std::string::npos) break;
          start = end + 1;
        }
        p["poles"] = list;
      }
      return run_expand(family, p, common);
    }
    if (bounds->parsed()) {
      const json p = {{"q", bq},     {"samples", samples}, {"rho", rho},
                      {"delta", delta}, {"seed", bseed},     {"max_power", max_power}};
      return run_bounds(p, common);
    }
    if (run->parsed()) return run_config(config, common);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
