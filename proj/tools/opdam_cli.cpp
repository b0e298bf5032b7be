// opdam: point evaluation, tables, verification suites and oracle dumps.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 convergence failure, 4 verification failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opdam/opdam.hpp"
#include "opdam/verify.hpp"

using namespace opdam;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kConvergence = 3, kVerifyFailed = 4 };

struct Common {
  int quad_order = 48;
  double tol = 1e-8;
  unsigned jobs = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--quad-order", c.quad_order, "Gauss-Jacobi order per axis")
      ->envname("OPDAM_QUAD_ORDER")
      ->check(CLI::Range(8, 256));
  app->add_option("--tol", c.tol, "quadrature tolerance")
      ->envname("OPDAM_TOL")
      ->check(CLI::PositiveNumber);
}

void add_jobs(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "worker threads")->envname("OPDAM_JOBS")->check(CLI::Range(1u, 256u));
}

HypFContext make_context(const Common& c, double k, std::size_t n) {
  HypFContext ctx;
  ctx.k = k;
  ctx.n = static_cast<int>(n);
  ctx.quad_order = c.quad_order;
  ctx.tol = c.tol;
  ctx.validate();
  return ctx;
}

VPoint parse_x(const std::vector<double>& raw) {
  if (raw.size() < 2 || raw.size() > 4) throw ParameterError("--x needs 2 to 4 coordinates");
  const VPoint p = project_trace_zero(raw);
  double moved = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) moved = std::max(moved, std::abs(raw[i] - p[i]));
  if (moved > 1e-9) std::cerr << "warning: x projected to trace zero (moved by " << moved << ")\n";
  return p;
}

/// n reals (real lambda) or 2n reals (re, im per coordinate), projected to trace zero.
SpectralParam parse_lambda(const std::vector<double>& raw, std::size_t n) {
  std::vector<Complex> l(n);
  if (raw.size() == n) {
    for (std::size_t i = 0; i < n; ++i) l[i] = raw[i];
  } else if (raw.size() == 2 * n) {
    for (std::size_t i = 0; i < n; ++i) l[i] = Complex(raw[2 * i], raw[2 * i + 1]);
  } else {
    throw ParameterError("--lambda needs " + std::to_string(n) + " or " + std::to_string(2 * n) +
                         " reals");
  }
  const auto p = project_trace_zero_complex(l);
  double moved = 0;
  for (std::size_t i = 0; i < n; ++i) moved = std::max(moved, std::abs(l[i] - p[i]));
  if (moved > 1e-9) std::cerr << "warning: lambda projected to trace zero (moved by " << moved << ")\n";
  return SpectralParam(p);
}

json complex_list(const std::vector<Complex>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back({c.real(), c.imag()});
  return a;
}

struct EvalRequest {
  std::string function;
  double k = 1.0;
  std::vector<double> lambda;
  std::vector<double> x;
  std::vector<double> eta = {0.0};
  double t = 0;
  std::vector<double> y;
  int grid_order = 20;
};

EvalResult evaluate(const EvalRequest& r, const Common& c, const VPoint& x, const SpectralParam& l) {
  const std::string& f = r.function;
  if (f == "f") return f_total(make_context(c, r.k, x.size()), l, x);
  if (f == "g") {
    if (x.size() != 3) throw ParameterError("g: rank 2 only (n = 3)");
    return g_a2(make_context(c, r.k, 3), l, x);
  }
  if (f == "fstar") {
    if (x.size() != 3) throw ParameterError("fstar: rank 2 only (n = 3)");
    return fstar_total(make_context(c, r.k, 3), l, x);
  }
  if (f == "kernel") {
    if (x.size() != 3) throw ParameterError("kernel: rank 2 only (n = 3)");
    MultiplicityK{r.k};
    const ChamberPoint cx(x);
    if (!r.y.empty()) {
      if (r.y.size() != 2) throw ParameterError("--y needs two reals y1,y2");
      return r_kernel(r.k, cx, r.y[0], r.y[1], c.quad_order, c.tol);
    }
    EvalResult e;
    e.value = kernel_transform(r.k, l, cx, r.grid_order);
    const int cells = static_cast<int>(detail::support_cells(cx).size());
    e.nodes_used = cells * r.grid_order * r.grid_order;
    e.converged = true;
    return e;
  }
  throw ParameterError("unknown function " + f);
}

int run_eval(const EvalRequest& r, const Common& c) {
  json out;
  out["function"] = r.function;
  out["k"] = r.k;
  EvalResult e;
  if (r.function == "phi") {
    MultiplicityK{r.k};
    if (r.eta.empty() || r.eta.size() > 2) throw ParameterError("--eta needs re or re,im");
    const Complex eta(r.eta[0], r.eta.size() == 2 ? r.eta[1] : 0.0);
    e.value = jacobi_phi(r.k, eta, r.t);
    e.nodes_used = 0;
    out["eta"] = {eta.real(), eta.imag()};
    out["t"] = r.t;
  } else {
    if (r.x.empty()) throw ParameterError("--x is required");
    const VPoint x = parse_x(r.x);
    const SpectralParam l = r.lambda.empty() ? SpectralParam(std::vector<Complex>(x.size()))
                                             : parse_lambda(r.lambda, x.size());
    e = evaluate(r, c, x, l);
    out["lambda"] = complex_list(l.vec());
    out["x"] = x.vec();
  }
  out["value_re"] = e.value.real();
  out["value_im"] = e.value.imag();
  out["err_estimate"] = e.err_estimate;
  out["nodes_used"] = e.nodes_used;
  out["converged"] = e.converged;
  std::cout << out.dump() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct Range {
  double lo = -0.5, hi = 0.5;
  int count = 5;
};

Range parse_range(const std::vector<double>& v) {
  if (v.size() != 3 || v[2] < 1 || v[2] != std::floor(v[2])) {
    throw ParameterError("ranges are lo,hi,count with count a positive integer");
  }
  return {v[0], v[1], static_cast<int>(v[2])};
}

double range_at(const Range& r, int i) {
  return r.count == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (r.count - 1);
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string error_flag(const std::exception& e) {
  if (dynamic_cast<const WallError*>(&e)) return "wall";
  if (dynamic_cast<const SingularSpectralParam*>(&e)) return "singular";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence";
  return "error";
}

struct TableRequest {
  EvalRequest eval;
  std::string vary = "x";
  bool imag = false;
  std::vector<double> u = {-0.5, 0.5, 5};
  std::vector<double> v = {-0.5, 0.5, 5};
};

/// Rectangular grid in the plane spanned by (1,-1,0)/sqrt2 and (1,1,-2)/sqrt6 around the
/// given x (or lambda).
int run_table(const TableRequest& t, const Common& c) {
  const auto& r = t.eval;
  if (r.function == "phi") throw ParameterError("table: phi is not supported");
  if (t.vary != "x" && t.vary != "lambda") throw ParameterError("--vary must be x or lambda");
  if (r.x.size() != 3) throw ParameterError("table: --x needs 3 coordinates");
  const VPoint x0 = parse_x(r.x);
  const SpectralParam l0 =
      r.lambda.empty() ? SpectralParam(std::vector<Complex>(3)) : parse_lambda(r.lambda, 3);
  const Range ru = parse_range(t.u), rv = parse_range(t.v);
  const std::array<double, 3> eu = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  const std::array<double, 3> ev = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};

  struct Row {
    double u, v;
    std::vector<double> coords;
    EvalResult e;
    std::string flag;
  };
  const std::size_t n = static_cast<std::size_t>(ru.count) * rv.count;
  auto rows = verify::parallel_map<Row>(n, c.jobs, [&](std::size_t idx) {
    Row row;
    row.u = range_at(ru, static_cast<int>(idx / rv.count));
    row.v = range_at(rv, static_cast<int>(idx % rv.count));
    VPoint x = x0;
    SpectralParam l = l0;
    std::vector<double> xs(3);
    std::vector<Complex> ls(3);
    for (std::size_t i = 0; i < 3; ++i) {
      const double d = row.u * eu[i] + row.v * ev[i];
      xs[i] = x0[i] + (t.vary == "x" ? d : 0.0);
      ls[i] = l0[i] + (t.vary == "lambda" ? (t.imag ? Complex(0, d) : Complex(d)) : Complex(0));
    }
    x = project_trace_zero(xs);
    l = SpectralParam(project_trace_zero_complex(ls));
    if (t.vary == "x") {
      row.coords = x.vec();
    } else {
      for (const auto& z : l.vec()) row.coords.push_back(t.imag ? z.imag() : z.real());
    }
    try {
      row.e = evaluate(r, c, x, l);
    } catch (const std::exception& ex) {
      row.e.value = Complex(NAN, NAN);
      row.e.err_estimate = NAN;
      row.flag = error_flag(ex);
    }
    return row;
  });
  const std::string p = t.vary == "x" ? "x" : (t.imag ? "lambda_im" : "lambda_re");
  std::cout << "u,v," << p << "1," << p << "2," << p << "3,value_re,value_im,err_estimate,flag\n";
  for (const auto& row : rows) {
    std::cout << csv_double(row.u) << ',' << csv_double(row.v);
    for (double z : row.coords) std::cout << ',' << csv_double(z);
    std::cout << ',' << csv_double(row.e.value.real()) << ',' << csv_double(row.e.value.imag())
              << ',' << csv_double(row.e.err_estimate) << ',' << row.flag << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyRequest {
  std::vector<std::string> suites;
  std::uint64_t seed = verify::Options{}.seed;
  std::vector<double> ks;
  std::vector<std::string> overrides;
  bool timing = false;
};

int run_verify(const VerifyRequest& r, const Common& c) {
  verify::Options o;
  o.seed = r.seed;
  o.quad_order = c.quad_order;
  o.tol = c.tol;
  o.jobs = c.jobs;
  o.ks = r.ks;
  for (const auto& s : r.overrides) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParameterError("--set expects name=value, got " + s);
    try {
      o.tolerance[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw ParameterError("--set: bad number in " + s);
    }
  }
  const auto suites = r.suites.empty() ? verify::suite_names() : r.suites;
  for (const auto& s : suites) {
    const auto& known = verify::suite_names();
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw ParameterError("unknown suite " + s);
    }
  }
  bool all = true;
  for (const auto& s : suites) {
    const auto res = verify::run_suite(s, o);
    for (const auto& rec : res.records) {
      json j = {{"suite", rec.suite},         {"case", rec.params},
                {"residual", rec.residual},   {"tolerance", rec.tolerance},
                {"pass", rec.pass}};
      if (!rec.note.empty()) j["note"] = rec.note;
      if (r.timing) j["runtime_ms"] = rec.runtime_ms;
      std::cout << j.dump() << "\n";
    }
    json summary = {{"suite", s},
                    {"summary", true},
                    {"cases", res.records.size()},
                    {"failed", res.failures()},
                    {"max_residual", res.max_residual()},
                    {"pass", res.pass()}};
    if (r.timing) summary["runtime_s"] = res.runtime_s;
    std::cout << summary.dump() << std::endl;
    all = all && res.pass();
  }
  return all ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

oracle::Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      const double d = std::stod(s);
      const double twice = 2 * d;
      if (twice != std::floor(twice)) throw ParameterError("k must be a ratio p/q or a half-integer");
      return oracle::Rational(static_cast<long>(twice), 2);
    }
    return oracle::Rational(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParameterError("bad rational " + s);
  }
}

struct OracleRequest {
  std::string which = "G";
  std::string k = "1";
  std::vector<int> mu = {0, 0};
};

int run_oracle(const OracleRequest& r) {
  using namespace oracle;
  const Rational k = parse_rational(r.k);
  if (k <= 0) throw ParameterError("k must be positive");
  if (r.mu.size() != 2 || r.mu[0] < 0 || r.mu[1] < 0) {
    throw ParameterError("--mu expects a,b >= 0 (a omega_1 + b omega_2)");
  }
  const auto mu = LatticeWeight::fundamental(r.mu[0], r.mu[1]);
  const int h = std::max(4, mu.height() + 2);
  ExpPoly p;
  json extra = json::object();
  if (r.which == "E") {
    const auto e = opdam_E(k, mu, h);
    p = e.poly;
    extra["eigenvalue"] = {to_string(e.eigenvalue[0]), to_string(e.eigenvalue[1]),
                           to_string(e.eigenvalue[2])};
  } else if (r.which == "F") {
    p = f_exact(k, mu);
  } else if (r.which == "G") {
    p = g_exact(k, mu, h);
  } else if (r.which == "Fstar") {
    p = fstar_exact(k, mu);
  } else if (r.which == "P") {
    p = jacobi_P(k, mu);
  } else {
    throw ParameterError("--which must be one of E, F, G, Fstar, P");
  }
  const RVec L = spectral_param(k, mu);
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    terms.push_back({{"weight", {to_string(w.coord(0)), to_string(w.coord(1)), to_string(w.coord(2))}},
                     {"coeff", to_string(c)}});
  }
  json out = {{"polynomial", r.which},
              {"k", to_string(k)},
              {"mu", mu.str()},
              {"spectral_param", {to_string(L[0]), to_string(L[1]), to_string(L[2])}},
              {"terms", terms}};
  out.update(extra);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

/// CLI11 silently drops environment values that fail validation; reject them instead.
void check_environment() {
  struct Var {
    const char* name;
    double lo, hi;
    bool integer;
  };
  for (const Var& v : {Var{"OPDAM_QUAD_ORDER", 8, 256, true}, Var{"OPDAM_TOL", 0, 1, false},
                       Var{"OPDAM_JOBS", 1, 256, true}}) {
    const char* s = std::getenv(v.name);
    if (!s) continue;
    char* end = nullptr;
    const double d = std::strtod(s, &end);
    const bool ok = end != s && *end == '\0' && d >= v.lo && d <= v.hi && d != 0 &&
                    (!v.integer || d == std::floor(d));
    if (!ok) throw ParameterError(std::string(v.name) + ": invalid value '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heckman-Opdam hypergeometric functions: evaluation, tables and verification"};
  app.require_subcommand(1);
  Common common;

  EvalRequest ev;
  auto* eval = app.add_subcommand("eval", "evaluate one value, JSON output");
  eval->add_option("function", ev.function, "f | g | fstar | phi | kernel")
      ->required()
      ->check(CLI::IsMember({"f", "g", "fstar", "phi", "kernel"}));
  eval->add_option("--k", ev.k, "multiplicity");
  eval->add_option("--lambda", ev.lambda, "n reals or 2n reals (re,im per coordinate)")->delimiter(',');
  eval->add_option("--x", ev.x, "point, projected to trace zero")->delimiter(',');
  eval->add_option("--eta", ev.eta, "phi: eta as re or re,im")->delimiter(',');
  eval->add_option("--t", ev.t, "phi: argument");
  eval->add_option("--y", ev.y, "kernel: evaluate the density R_k at y1,y2")->delimiter(',');
  eval->add_option("--grid-order", ev.grid_order, "kernel: Gauss order per triangle axis")
      ->check(CLI::Range(2, 200));
  add_common(eval, common);

  TableRequest tb;
  auto* table = app.add_subcommand("table", "tabulate over a 2-D grid, CSV output");
  table->add_option("function", tb.eval.function, "f | g | fstar | kernel")
      ->required()
      ->check(CLI::IsMember({"f", "g", "fstar", "kernel"}));
  table->add_option("--k", tb.eval.k, "multiplicity");
  table->add_option("--lambda", tb.eval.lambda, "3 or 6 reals")->delimiter(',');
  table->add_option("--x", tb.eval.x, "centre point")->delimiter(',')->required();
  table->add_option("--vary", tb.vary, "x or lambda")->check(CLI::IsMember({"x", "lambda"}));
  table->add_flag("--imag", tb.imag, "vary the imaginary part of lambda");
  table->add_option("--u", tb.u, "lo,hi,count along (1,-1,0)/sqrt2")->delimiter(',');
  table->add_option("--v", tb.v, "lo,hi,count along (1,1,-2)/sqrt6")->delimiter(',');
  table->add_option("--grid-order", tb.eval.grid_order, "kernel: Gauss order per triangle axis");
  add_common(table, common);
  add_jobs(table, common);

  VerifyRequest vr;
  auto* ver = app.add_subcommand("verify", "run verification suites, JSON lines output");
  ver->add_option("--suite", vr.suites, "suite name (repeatable); default all")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", vr.seed, "seed for sampled suites");
  ver->add_option("--k", vr.ks, "override the k-list")->delimiter(',');
  ver->add_option("--set", vr.overrides, "tolerance override name=value (repeatable)");
  ver->add_flag("--timing", vr.timing, "include runtime fields");
  add_common(ver, common);
  add_jobs(ver, common);

  OracleRequest orq;
  auto* orc = app.add_subcommand("oracle", "dump exact coefficients as JSON");
  orc->add_option("--which", orq.which, "E | F | G | Fstar | P");
  orc->add_option("--k", orq.k, "rational multiplicity, e.g. 3/2");
  orc->add_option("--mu", orq.mu, "a,b for a omega_1 + b omega_2")->delimiter(',');

  try {
    check_environment();
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(ev, common);
    if (table->parsed()) return run_table(tb, common);
    if (ver->parsed()) return run_verify(vr, common);
    if (orc->parsed()) return run_oracle(orq);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kConvergence;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const WallError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
