#include "formulas.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "awtaylor/binom.hpp"

namespace awt::cli {

namespace {

using Rng = std::mt19937_64;

Rng point_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(index)};
  return Rng(s);
}

double uniform(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

// A real in [lo, hi] kept at least `gap` away from zero.
double away_from_zero(Rng& g, double lo, double hi, double gap) {
  for (;;) {
    const double v = uniform(g, lo, hi);
    if (std::abs(v) >= gap) return v;
  }
}

json cjson(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

PSequence form_sequence(const std::string& form, double q, cplx u) {
  const FormTag tag = parse_form_tag(form);
  const cplx lambda = std::sqrt(cplx(q, 0.0));
  switch (tag) {
    case FormTag::T: return PSequence(CanonicalForm::trigonometric(lambda, u));
    case FormTag::G: return PSequence(CanonicalForm::geometric(lambda, u));
    case FormTag::Q: return PSequence(CanonicalForm::quadratic(u));
    case FormTag::A: return PSequence(CanonicalForm::arithmetic(u));
    case FormTag::C: return PSequence(CanonicalForm::continuous(u));
  }
  throw DomainError("unknown canonical form");
}

// ---- q-Gauss

json draw_q_gauss(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.2, 0.9));
  for (;;) {
    const double alpha = uniform(g, -0.9, 0.9), beta = away_from_zero(g, -0.9, 0.9, 0.05);
    const double xi = uniform(g, -0.9, 0.9), x = away_from_zero(g, -0.9, 0.9, 0.05);
    if (std::abs(beta * x) < 0.9 && std::abs(alpha * xi) < 0.9) {
      p["alpha"] = alpha, p["beta"] = beta, p["xi"] = xi, p["x"] = x;
      return p;
    }
  }
}

VerificationReport eval_q_gauss(const json& p, const VerifyOptions& o) {
  return verify_q_gauss(get_complex(p, "alpha"), get_complex(p, "beta"), get_complex(p, "xi"), get_complex(p, "x"),
                        get_complex(p, "q"), o);
}

// ---- Eq. New

json draw_new(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.3, 0.7));
  p["alpha"] = away_from_zero(g, -0.8, 0.8, 0.05);
  p["beta"] = uniform(g, 0.2, 0.9);
  p["xi"] = uniform(g, -2.0, -1.1);
  p["u"] = cjson(cplx(uniform(g, -3.0, -1.2), uniform(g, -1.0, 1.0)));
  return p;
}

VerificationReport eval_new(const json& p, const VerifyOptions& o) {
  return verify_new_formula(get_real(p, "alpha"), get_real(p, "beta"), get_real(p, "xi"), get_complex(p, "u"),
                            get_real(p, "q"), o);
}

// ---- non-terminating q-Saalschutz

json draw_nt(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.2, 0.7));
  p["alpha"] = uniform(g, -0.5, 0.5);
  p["beta"] = uniform(g, 0.2, 0.8);
  p["xi"] = uniform(g, -2.0, -1.05);
  p["u"] = cjson(cplx(uniform(g, -2.5, -1.1), uniform(g, -0.5, 0.5)));
  return p;
}

VerificationReport eval_nt(const json& p, const VerifyOptions& o) {
  return verify_nonterminating_q_saalschutz(get_complex(p, "alpha"), get_complex(p, "beta"), get_complex(p, "xi"),
                                            get_complex(p, "u"), get_complex(p, "q"), o);
}

// ---- q-Vandermonde

json draw_vdm(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.3, 0.7));
  p["alpha"] = uniform(g, -0.8, 0.8);
  p["beta"] = uniform(g, 0.2, 0.9);
  p["xi"] = uniform(g, -2.0, -0.5);
  p["x"] = cjson(cplx(uniform(g, -2.0, -0.2), uniform(g, -1.0, 1.0)));
  return p;
}

VerificationReport eval_vdm(const json& p, const VerifyOptions& o) {
  return verify_q_vandermonde_nonsym(get_real(p, "alpha"), get_real(p, "beta"), get_real(p, "xi"),
                                     get_complex(p, "x"), get_real(p, "q"), o);
}

// ---- Table II rows

json draw_table2(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["row"] = base.contains("row") ? base["row"] : json("T");
  p["n"] = base.contains("n") ? base["n"] : json(static_cast<long long>(uniform(g, 0.0, 10.999)));
  // exact mode needs real (dyadic rational) parameters
  const bool real = base.value("exact", false);
  auto c = [&](double r) {
    return real ? json(uniform(g, -r, r)) : cjson(cplx(uniform(g, -r, r), uniform(g, -r, r)));
  };
  auto annulus = [&] {
    const double m = uniform(g, 0.5, 2.0), t = uniform(g, 0.0, 6.283);
    return real ? json(t < 3.1415 ? m : -m) : cjson(std::polar(m, t));
  };
  const std::string row = p["row"].get<std::string>();
  if (row == "T") {
    p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.2, 0.8));
    p["u"] = annulus();
    p["v"] = annulus();
    p["w"] = annulus();
  } else if (row == "Q") {
    p["u"] = c(2.0), p["v"] = c(2.0), p["w"] = c(2.0);
  } else {
    if (row == "G") p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.2, 0.8));
    p["x"] = c(1.0), p["y"] = c(1.0), p["z"] = c(1.0);
  }
  return p;
}

RowArgs<cplx> row_args(const json& p) {
  RowArgs<cplx> a;
  for (auto [key, slot] : {std::pair{"x", &a.x}, {"y", &a.y}, {"z", &a.z}, {"u", &a.u}, {"v", &a.v}, {"w", &a.w},
                           {"q", &a.q}})
    if (p.contains(key)) *slot = get_complex(p, key);
  return a;
}

VerificationReport eval_table2(const json& p, const VerifyOptions& o) {
  const FormTag row = parse_form_tag(get_string(p, "row"));
  const int n = static_cast<int>(get_int(p, "n"));
  VerificationReport r = table2_check(row, row_args(p), n, o);
  if (p.value("exact", false)) {
    const RowArgs<cplx> c = row_args(p);
    for (cplx v : {c.x, c.y, c.z, c.u, c.v, c.w, c.q})
      if (v.imag() != 0.0) throw DomainError("table2 exact: parameters must be real (rational)");
    const ExactResidual e =
        table2_exact(row, {c.x.real(), c.y.real(), c.z.real(), c.u.real(), c.v.real(), c.w.real(), c.q.real()}, n);
    r.params.emplace_back("exact_residual", e.residual);
    r.pass = r.pass && e.zero;
  }
  return r;
}

// ---- Theorem 4.1 for two sequences of one canonical form

json draw_binomial(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["form"] = base.contains("form") ? base["form"] : json("G");
  p["n"] = base.contains("n") ? base["n"] : json(static_cast<long long>(uniform(g, 0.0, 10.999)));
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.3, 0.8));
  p["x"] = cjson(cplx(uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)));
  p["v"] = cjson(std::polar(uniform(g, 0.5, 1.5), uniform(g, 0.0, 6.283)));
  p["w"] = cjson(std::polar(uniform(g, 0.5, 1.5), uniform(g, 0.0, 6.283)));
  return p;
}

VerificationReport eval_binomial(const json& p, const VerifyOptions& o) {
  const std::string form = get_string(p, "form");
  const double q = get_real(p, "q");
  return general_binomial_check(form_sequence(form, q, get_complex(p, "v")), form_sequence(form, q, get_complex(p, "w")),
                                get_complex(p, "x"), static_cast<int>(get_int(p, "n")), o);
}

// ---- the d_k Phi_n identity

json draw_phi_partial(std::uint64_t seed, std::size_t i, const json& base) {
  Rng g = point_rng(seed, i);
  json p;
  p["form"] = base.contains("form") ? base["form"] : json("G");
  const long long n = base.contains("n") ? base["n"].get<long long>() : static_cast<long long>(uniform(g, 1.0, 6.999));
  p["n"] = n;
  p["k"] = base.contains("k") ? base["k"] : json(static_cast<long long>(uniform(g, 0.0, n + 0.999)));
  p["q"] = base.contains("q") ? base["q"] : json(uniform(g, 0.3, 0.8));
  p["u"] = cjson(std::polar(uniform(g, 0.5, 1.2), uniform(g, 0.0, 6.283)));
  p["w"] = cjson(cplx(uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)));
  return p;
}

VerificationReport eval_phi_partial(const json& p, const VerifyOptions& o) {
  return phi_partial_identity_check(static_cast<int>(get_int(p, "n")), static_cast<int>(get_int(p, "k")),
                                    form_sequence(get_string(p, "form"), get_real(p, "q"), get_complex(p, "u")),
                                    get_complex(p, "w"), o);
}

ParamList to_params(const json& p) {
  ParamList out;
  for (auto it = p.begin(); it != p.end(); ++it) {
    const json& v = it.value();
    if (v.is_number_integer()) out.emplace_back(it.key(), v.get<long long>());
    else if (v.is_number()) out.emplace_back(it.key(), v.get<double>());
    else if (v.is_array() && v.size() == 2) out.emplace_back(it.key(), cplx(v[0].get<double>(), v[1].get<double>()));
    else if (v.is_string()) out.emplace_back(it.key(), v.get<std::string>());
    else out.emplace_back(it.key(), v.dump());
  }
  return out;
}

}  // namespace

const std::vector<Formula>& registry() {
  static const std::vector<Formula> formulas = {
      {"q-gauss", {{"q", 0.5}, {"alpha", 0.3}, {"beta", 0.7}, {"xi", -0.2}, {"x", 0.4}}, draw_q_gauss, eval_q_gauss},
      {"new-saalschutz", {{"q", 0.5}, {"alpha", 0.2}, {"beta", 0.6}, {"xi", -1.5}, {"u", -2.0}}, draw_new, eval_new},
      {"nt-saalschutz", {{"q", 0.4}, {"alpha", 0.15}, {"beta", 0.5}, {"xi", -1.2}, {"u", -1.7}}, draw_nt, eval_nt},
      {"q-vandermonde", {{"q", 0.5}, {"alpha", 0.3}, {"beta", 0.8}, {"xi", -1.0}, {"x", -0.5}}, draw_vdm, eval_vdm},
      {"table2",
       {{"row", "T"}, {"n", 6}, {"q", 0.5}, {"u", -1.3}, {"v", 0.7}, {"w", 1.9}, {"x", 0.4}, {"y", -0.3}, {"z", 1.1}},
       draw_table2,
       eval_table2},
      {"binomial", {{"form", "G"}, {"n", 5}, {"q", 0.5}, {"x", 0.3}, {"v", 0.7}, {"w", 1.3}}, draw_binomial,
       eval_binomial},
      {"phi-partial", {{"form", "G"}, {"n", 3}, {"k", 1}, {"q", 0.64}, {"u", 1.0}, {"w", 0.5}}, draw_phi_partial,
       eval_phi_partial},
  };
  return formulas;
}

const Formula& find_formula(const std::string& id) {
  for (const Formula& f : registry())
    if (f.id == id) return f;
  std::string known;
  for (const Formula& f : registry()) known += (known.empty() ? "" : ", ") + f.id;
  throw DomainError("unknown formula '" + id + "' (known: " + known + ")");
}

cplx parse_complex(const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw DomainError("cannot parse number '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw DomainError("cannot parse complex number '" + s + "' (use re,im)");
  }
  std::string rest;
  if (is >> rest) throw DomainError("trailing characters in number '" + s + "'");
  return {re, im};
}

cplx get_complex(const json& p, const std::string& key) {
  if (!p.contains(key)) throw DomainError("missing parameter '" + key + "'");
  const json& v = p.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_string()) return parse_complex(v.get<std::string>());
  throw DomainError("parameter '" + key + "' is not a number");
}

double get_real(const json& p, const std::string& key) {
  const cplx z = get_complex(p, key);
  if (z.imag() != 0.0) throw DomainError("parameter '" + key + "' must be real");
  return z.real();
}

long long get_int(const json& p, const std::string& key) {
  const double v = get_real(p, key);
  if (v != std::floor(v)) throw DomainError("parameter '" + key + "' must be an integer");
  return static_cast<long long>(v);
}

std::string get_string(const json& p, const std::string& key) {
  if (!p.contains(key)) throw DomainError("missing parameter '" + key + "'");
  if (!p.at(key).is_string()) throw DomainError("parameter '" + key + "' must be a string");
  return p.at(key).get<std::string>();
}

json merged(const json& base, const json& overrides) {
  json out = base;
  for (auto it = overrides.begin(); it != overrides.end(); ++it) out[it.key()] = it.value();
  return out;
}

VerificationReport failed_report(const std::string& id, const json& params, const std::string& message) {
  VerificationReport r;
  r.formula_id = id;
  r.params = to_params(params);
  const double nan = std::nan("");
  r.lhs = r.rhs = cplx(nan, nan);
  r.abs_error = r.rel_error = nan;
  r.pass = false;
  r.error = message;
  return r;
}

std::vector<VerificationReport> evaluate_points(const Formula& f, const std::vector<json>& points,
                                                const VerifyOptions& o, int& status) {
  std::vector<VerificationReport> out(points.size());
  std::vector<int> codes(points.size(), 0);
  VerifyOptions inner = o;
  inner.exec = Exec::serial;  // parallelism is across points
  for_each_index(points.size(), o.exec, [&](std::size_t i) {
    try {
      out[i] = f.evaluate(points[i], inner);
      codes[i] = out[i].pass ? 0 : 1;
    } catch (const DomainError& e) {
      out[i] = failed_report(f.id, points[i], std::string("domain: ") + e.what());
      codes[i] = 2;
    } catch (const std::exception& e) {
      out[i] = failed_report(f.id, points[i], std::string("numerical: ") + e.what());
      codes[i] = 1;
    }
  });
  status = 0;
  for (int c : codes) status = std::max(status, c);
  return out;
}

}  // namespace awt::cli
