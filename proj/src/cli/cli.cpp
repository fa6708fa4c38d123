#include "jhull/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "jhull/certificates.hpp"
#include "jhull/error.hpp"
#include "jhull/hull.hpp"
#include "jhull/multiprecision.hpp"
#include "jhull/ruelle.hpp"
#include "setup.hpp"

#ifndef JHULL_VERSION_STRING
#define JHULL_VERSION_STRING "0.1.0"
#endif

namespace jhull::cli {

using Json = nlohmann::ordered_json;

std::map<std::string, double> default_tolerances() {
  return {
      {"atom_plateau", 0.1},      {"closed_form", 1e-9},      {"float_relations", 1e-12},
      {"fN_slack", 1e-9},         {"interpolation", 1e-10},   {"invariance", 1e-6},
      {"jminus", 1e-8},           {"mass_ratio", 10.0},       {"pullback", 1e-5},
      {"reflection", 1e-8},       {"renormalization", 1e-5},  {"v_identity", 1e-4},
      {"w_agreement", 1e-10},
  };
}

double RunConfig::tol(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end()) throw ConfigError("no tolerance named " + key);
  return it->second;
}

void RunConfig::set_tolerance(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--tol expects key=value, got " + assignment);
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  if (!tolerances.contains(key)) throw ConfigError("unknown tolerance key: " + key);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ConfigError("bad tolerance value in " + assignment);
  }
  if (!(value > 0.0)) throw ConfigError("tolerance must be positive: " + assignment);
  tolerances[key] = value;
}

std::string artifact_version() { return std::string("jhull ") + JHULL_VERSION_STRING; }

Json make_header(const RunConfig& config) {
  Json h;
  h["lambda"] = config.lambda;
  h["M"] = config.digits;
  h["N"] = config.truncation;
  h["table_depth"] = config.depth;
  h["seed"] = config.seed;
  Json tol = Json::object();
  for (const auto& [k, v] : config.tolerances) tol[k] = v;
  h["tolerances"] = tol;
  if (config.corrupt_row >= 0) h["corrupt_row"] = config.corrupt_row;
  h["version"] = artifact_version();
  return h;
}

namespace {

/// Writes either to the stream given to run() or to the --out file.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& fallback) : out_(&fallback) {
    if (!config.out.empty()) {
      file_.open(config.out);
      if (!file_) throw ConfigError("cannot open output file " + config.out);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

/// CSV outputs carry the header as a leading comment line.
void write_csv_header(std::ostream& os, const RunConfig& config, const std::string& note = "") {
  Json h = make_header(config);
  if (!note.empty()) h["note"] = note;
  os << "# " << h.dump() << '\n';
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

Json matrix_json(const Eigen::Matrix2d& m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

DyadicInt parse_kappa(const RunConfig& config, const std::string& text) {
  return DyadicInt::parse(text, config.digits);
}

std::complex<double> parse_complex(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("bad complex number (expected re,im): " + text);
  }
}

int pass_code(bool pass) { return pass ? kExitPass : kExitCheckFailure; }

// ---- dyadic ---------------------------------------------------------------

int cmd_dyadic(const RunConfig& config, const std::string& kappa_text, int steps, std::ostream& os) {
  const DyadicInt k = parse_kappa(config, kappa_text);
  if (steps < 0 || steps >= k.precision()) throw ConfigError("--steps must lie in [0, M)");
  Json j;
  j["header"] = make_header(config);
  j["kappa"] = k.to_string();
  j["representative"] = k.representative(std::min(k.precision(), 63));
  j["negation"] = negate(k).to_string();
  Json orbit = Json::array();
  DyadicInt cur = k;
  for (int i = 0; i <= steps; ++i) {
    orbit.push_back(cur.to_string());
    if (i < steps) cur = modified_shift(cur);
  }
  j["modified_shift_orbit"] = orbit;
  j["kappa_map"] = kappa_map(k, k.precision() - 1).to_string();
  const RunProfile p = run_profile(k, k.precision());
  j["runs"] = {{"max_zero_run", p.max_zero_run},
               {"max_one_run", p.max_one_run},
               {"class", "F_" + std::to_string(p.max_run()) + " within window " + std::to_string(p.window)}};
  write_json(os, j);
  return kExitPass;
}

// ---- dynamics -------------------------------------------------------------

int cmd_dynamics_w(const RunConfig& config, int n_max, int points, std::ostream& os) {
  const Setup s = make_setup(config);
  if (n_max < 0 || n_max + 1 > s.model.orbit->max_order()) throw ConfigError("--n out of range");
  write_csv_header(os, config);
  os << "x,n,w_value,lower_bound,upper_bound,within_bounds\n";
  bool ok = true;
  for (double x : uniform_grid(s.model.xi(), points)) {
    for (int n = 0; n <= n_max; ++n) {
      const WValue w = w_eval(*s.model.orbit, x, n);
      ok = ok && w.within_bounds;
      os << fmt(x) << ',' << n << ',' << fmt(w.value) << ',' << fmt(w.lower_bound) << ',' << fmt(w.upper_bound)
         << ',' << (w.within_bounds ? "true" : "false") << '\n';
    }
  }
  return pass_code(ok);
}

int cmd_dynamics_preimages(const RunConfig& config, double root, int depth, std::ostream& os) {
  const MapParams params = MapParams::make(parse_rational(config.lambda).get_d());
  const PreimageTree tree = preimage_tree(params, root, depth);
  write_csv_header(os, config);
  os << "# forward_residual=" << fmt(forward_residual(params, tree)) << '\n';
  os << "leaf\n";
  for (double y : tree.leaves) os << fmt(y) << '\n';
  return kExitPass;
}

int cmd_dynamics_invariance(const RunConfig& config, std::ostream& os) {
  const MapParams params = MapParams::make(parse_rational(config.lambda).get_d());
  write_csv_header(os, config);
  os << "depth,f,residual\n";
  bool ok = true;
  for (int p : {2, 4}) {
    for (int depth : {8, 12, 16}) {
      const double r =
          balanced_invariance_residual(params, balanced_quadrature(params, depth), [p](double x) { return std::pow(x, p); });
      if (depth == 16) ok = ok && r < config.tol("invariance");
      os << depth << ",x^" << p << ',' << fmt(r) << '\n';
    }
  }
  return pass_code(ok);
}

// ---- coeffs ---------------------------------------------------------------

int cmd_coeffs_dump(const RunConfig& config, std::ostream& os) {
  const Setup s = make_setup(config);
  const CoeffTable& t = *s.model.table;
  write_csv_header(os, config);
  os << "n,a_sq_num,a_sq_den,a_float\n";
  for (std::size_t n = 0; n < t.exact_rows(); ++n) {
    const mpq_class& q = t.a_sq(n);
    os << n << ',' << q.get_num().get_str() << ',' << q.get_den().get_str() << ',' << fmt(t.a_float(n)) << '\n';
  }
  return kExitPass;
}

int cmd_coeffs_at(const RunConfig& config, const std::string& kappa_text, std::ostream& os) {
  const Setup s = make_setup(config);
  const CoeffTable& t = *s.model.table;
  DyadicInt k = parse_kappa(config, kappa_text);
  Json j;
  j["header"] = make_header(config);
  if (k.precision() > t.float_depth()) {
    j["truncated_to"] = t.float_depth();
    k = k.truncated(t.float_depth());
  }
  const DyadicCoeff c = a_at(t, k);
  j["kappa"] = k.to_string();
  j["value"] = c.value;
  j["error_bound"] = c.error_bound;
  j["representative"] = c.representative;
  write_json(os, j);
  return kExitPass;
}

// ---- hull -----------------------------------------------------------------

struct HullOptions {
  std::string kappa = "0";
  std::string z = "1,1";
  int degree = 8;
  double x = 0.0;
  int bits = 0;
};

int cmd_hull_v(const RunConfig& config, const HullOptions& o, std::ostream& os) {
  const Setup s = make_setup(config);
  const auto z = parse_complex(o.z);
  Json j;
  j["header"] = make_header(config);
  j["identity"] = "V";
  j["kappa"] = o.kappa;
  j["N"] = config.truncation;
  j["z"] = {z.real(), z.imag()};
  bool pass = false;
  if (o.bits > 0) {
    // Multiprecision path: integer kappa only.
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(o.kappa, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != o.kappa.size()) throw ConfigError("--bits needs an integer --kappa");
    const LimitCoefficients lc(*s.model.table, 2 * config.truncation + static_cast<int>(std::llabs(2 * k)) + 2,
                               o.bits);
    const auto r = check_V_identity_mp(lc, k, z, config.truncation);
    pass = r.log10_residual < std::log10(config.tol("v_identity"));
    j["bits"] = o.bits;
    j["log10_residual"] = r.log10_residual;
  } else {
    const auto r = check_V_identity(s.model, parse_kappa(config, o.kappa), z, config.truncation);
    pass = r.residual < config.tol("v_identity");
    j["residual"] = r.residual;
  }
  j["pass"] = pass;
  write_json(os, j);
  return pass_code(pass);
}

int cmd_hull_renorm(const RunConfig& config, const HullOptions& o, std::ostream& os) {
  const Setup s = make_setup(config);
  const auto r = check_renormalization(s.model, parse_kappa(config, o.kappa), o.degree, config.truncation);
  const bool pass = r.max_residual < config.tol("renormalization");
  Json j;
  j["header"] = make_header(config);
  j["identity"] = "renormalization";
  j["kappa"] = o.kappa;
  j["N"] = config.truncation;
  j["degree"] = o.degree;
  j["residual"] = r.max_residual;
  j["pass"] = pass;
  write_json(os, j);
  return pass_code(pass);
}

int cmd_hull_reflection(const RunConfig& config, const HullOptions& o, std::ostream& os) {
  const Setup s = make_setup(config);
  const auto r = reflection_check(*s.model.table, parse_kappa(config, o.kappa), config.truncation, o.degree);
  const bool pass = r.residual < config.tol("reflection");
  Json j;
  j["header"] = make_header(config);
  j["identity"] = "reflection";
  j["kappa"] = o.kappa;
  j["N"] = config.truncation;
  j["degree"] = o.degree;
  j["residual"] = r.residual;
  j["pass"] = pass;
  write_json(os, j);
  return pass_code(pass);
}

int cmd_hull_atoms(const RunConfig& config, const HullOptions& o, std::ostream& os) {
  const Setup s = make_setup(config);
  const auto sigma = spectral_measure(build_truncation(*s.model.table, parse_kappa(config, o.kappa), config.truncation));
  write_csv_header(os, config);
  os << "x,W11,W12,W22\n";
  for (const auto& a : sigma.atoms) {
    os << fmt(a.x) << ',' << fmt(a.weight(0, 0)) << ',' << fmt(a.weight(0, 1)) << ',' << fmt(a.weight(1, 1)) << '\n';
  }
  return kExitPass;
}

int cmd_hull_probe(const RunConfig& config, const HullOptions& o, std::ostream& os) {
  const Setup s = make_setup(config);
  const TruncatedJacobi j = build_truncation(*s.model.table, parse_kappa(config, o.kappa), config.truncation);
  const double etas[] = {1e-1, 1e-2, 1e-3};
  const auto p = atom_probe(j, o.x, etas, eta_floor(j));
  Json out;
  out["header"] = make_header(config);
  out["kappa"] = o.kappa;
  out["x"] = o.x;
  out["eta_floor"] = p.eta_min;
  out["etas"] = p.etas;
  out["values"] = p.values;
  out["reliable"] = p.reliable;
  out["decreasing"] = p.decreasing;
  write_json(os, out);
  return kExitPass;
}

// ---- ruelle ---------------------------------------------------------------

int cmd_ruelle_coeffs(const RunConfig& config, const std::string& kappa_text, int n, std::ostream& os) {
  require_digits(config, n + 2, "h iteration");
  const Setup s = make_setup(config);
  const auto hs = iterate_h(s.model, parse_kappa(config, kappa_text), n);
  Json j;
  j["header"] = make_header(config);
  j["kappa"] = kappa_text;
  j["n"] = n;
  Json coeffs = Json::array();
  for (const auto& a : hs.back().coeffs()) coeffs.push_back(matrix_json(a));
  j["coefficients"] = coeffs;
  write_json(os, j);
  return kExitPass;
}

int cmd_ruelle_certificate(const RunConfig& config, const std::string& kappa_text, int n, int grid,
                           std::ostream& os) {
  require_digits(config, n + 3, "positivity certificate");
  const Setup s = make_setup(config);
  const auto c = positivity_certificate(s.model, parse_kappa(config, kappa_text), n, grid);
  Json j;
  j["header"] = make_header(config);
  j["kappa"] = c.kappa.to_string();
  j["N_window"] = c.run_bound;
  j["n"] = c.n;
  j["min_eig"] = c.min_eig;
  j["predicted_C1"] = c.predicted_c1;
  j["pass"] = c.pass;
  write_json(os, j);
  return pass_code(c.pass);
}

int cmd_ruelle_sandwich(const RunConfig& config, const std::string& kappa_text, int n, int grid, std::ostream& os) {
  require_digits(config, n + 2, "trace sandwich");
  const Setup s = make_setup(config);
  const auto r = trace_sandwich(s.model, parse_kappa(config, kappa_text), n, grid, config.truncation);
  Json j;
  j["header"] = make_header(config);
  j["kappa"] = kappa_text;
  j["n"] = n;
  j["integral"] = r.integral;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["min_trace"] = r.min_trace;
  j["max_trace"] = r.max_trace;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  write_json(os, j);
  return pass_code(r.pass);
}

// ---- explore-measures -----------------------------------------------------

int cmd_explore(const RunConfig& config, const std::string& ka, const std::string& kb, int bins, std::ostream& os) {
  if (bins < 1) throw ConfigError("--bins must be >= 1");
  const Setup s = make_setup(config);
  const double xi = s.model.xi();
  auto histogram = [&](const std::string& text) {
    const auto sigma = spectral_measure(build_truncation(*s.model.table, parse_kappa(config, text), config.truncation));
    std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
    for (const auto& a : sigma.atoms) {
      int b = static_cast<int>(std::floor((a.x + xi) / (2.0 * xi) * bins));
      b = std::clamp(b, 0, bins - 1);
      h[static_cast<std::size_t>(b)] += a.weight.trace();
    }
    return h;
  };
  const auto ha = histogram(ka);
  const auto hb = histogram(kb);
  write_csv_header(os, config, "exploratory: no singularity claim");
  os << "# kappa_a=" << ka << " kappa_b=" << kb << '\n';
  os << "bin_lo,bin_hi,mass_a,mass_b\n";
  for (int b = 0; b < bins; ++b) {
    const double lo = -xi + 2.0 * xi * b / bins;
    const double hi = -xi + 2.0 * xi * (b + 1) / bins;
    os << fmt(lo) << ',' << fmt(hi) << ',' << fmt(ha[static_cast<std::size_t>(b)]) << ','
       << fmt(hb[static_cast<std::size_t>(b)]) << '\n';
  }
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hull of limit-periodic Jacobi matrices from the Julia set of z^2 - lambda"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", artifact_version());

  RunConfig config;
  std::vector<std::string> tol_overrides;
  app.add_option("--lambda", config.lambda, "Map parameter as a rational, e.g. 4 or 7/2");
  app.add_option("--digits", config.digits, "Dyadic digits M per kappa")->check(CLI::Range(1, 4096));
  app.add_option("--depth", config.depth, "Exact coefficient table depth (2^depth rows)")->check(CLI::Range(1, 16));
  app.add_option("--truncation", config.truncation, "Window half-width N (sites -N..N)")->check(CLI::Range(4, 1 << 16));
  app.add_option("--tol", tol_overrides, "Tolerance override key=value (repeatable)");
  app.add_option("--seed", config.seed, "Seed for sampled-kappa suites");
  app.add_option("--out", config.out, "Write output to this file instead of stdout");
  app.add_flag("--allow-small-lambda", config.allow_small_lambda, "Permit 2 < lambda <= 3");
  app.add_option("--corrupt-row", config.corrupt_row, "Fault injection: perturb this exact coefficient row");

  std::function<int(std::ostream&)> action;

  std::string kappa = "0";
  int steps = 8;
  auto* dy = app.add_subcommand("dyadic", "Inspect a dyadic integer: shifts, kappa map, run profile");
  dy->add_option("--kappa", kappa, "Integer, digits:0110, 0110(M=4) or pattern 1(10)*")->required();
  dy->add_option("--steps", steps, "Modified-shift iterates to list");
  dy->callback([&] { action = [&](std::ostream& os) { return cmd_dyadic(config, kappa, steps, os); }; });

  int n = 12;
  int points = 200;
  double root = 1.0;
  int tree_depth = 10;
  auto* dyn = app.add_subcommand("dynamics", "Pole basis values and preimage trees (CSV)");
  dyn->require_subcommand(1);
  auto* dyn_w = dyn->add_subcommand("w", "w_x^n(T(0)) on a grid with its two-sided bounds");
  dyn_w->add_option("--n", n, "Largest n");
  dyn_w->add_option("--points", points, "Grid points on [-xi, xi]");
  dyn_w->callback([&] { action = [&](std::ostream& os) { return cmd_dynamics_w(config, n, points, os); }; });
  auto* dyn_tree = dyn->add_subcommand("preimages", "Leaves of the inverse-iteration tree");
  dyn_tree->add_option("--root", root, "Root point");
  dyn_tree->add_option("--tree-depth", tree_depth, "Tree depth")->check(CLI::Range(0, 24));
  dyn_tree->callback(
      [&] { action = [&](std::ostream& os) { return cmd_dynamics_preimages(config, root, tree_depth, os); }; });
  auto* dyn_inv = dyn->add_subcommand("invariance", "Balanced-measure invariance residuals");
  dyn_inv->callback([&] { action = [&](std::ostream& os) { return cmd_dynamics_invariance(config, os); }; });

  auto* co = app.add_subcommand("coeffs", "Jacobi coefficient table");
  co->require_subcommand(1);
  auto* co_dump = co->add_subcommand("dump", "Exact rows as CSV");
  co_dump->callback([&] { action = [&](std::ostream& os) { return cmd_coeffs_dump(config, os); }; });
  auto* co_at = co->add_subcommand("at", "a at a dyadic argument (JSON)");
  co_at->add_option("--kappa", kappa)->required();
  co_at->callback([&] { action = [&](std::ostream& os) { return cmd_coeffs_at(config, kappa, os); }; });

  HullOptions ho;
  auto* hu = app.add_subcommand("hull", "Identities and spectral data of truncated hull elements");
  hu->require_subcommand(1);
  auto add_kappa = [&](CLI::App* c) { c->add_option("--kappa", ho.kappa, "Hull element"); };
  auto* hu_v = hu->add_subcommand("v-identity", "G_{2 kappa}(2i, 2j) against the scaled G_kappa at T(z)");
  add_kappa(hu_v);
  hu_v->add_option("--z", ho.z, "Spectral parameter re,im");
  hu_v->add_option("--bits", ho.bits, "Use this many bits of floating point (integer kappa); 0 means double")
      ->check(CLI::Range(0, 8192));
  hu_v->callback([&] { action = [&](std::ostream& os) { return cmd_hull_v(config, ho, os); }; });
  auto* hu_r = hu->add_subcommand("renorm", "Renormalization pairing on monomials");
  add_kappa(hu_r);
  hu_r->add_option("--degree", ho.degree);
  hu_r->callback([&] { action = [&](std::ostream& os) { return cmd_hull_renorm(config, ho, os); }; });
  auto* hu_f = hu->add_subcommand("reflection", "Moments of the reflected window");
  add_kappa(hu_f);
  hu_f->add_option("--degree", ho.degree);
  hu_f->callback([&] { action = [&](std::ostream& os) { return cmd_hull_reflection(config, ho, os); }; });
  auto* hu_a = hu->add_subcommand("atoms", "Spectral matrix measure atoms (CSV)");
  add_kappa(hu_a);
  hu_a->callback([&] { action = [&](std::ostream& os) { return cmd_hull_atoms(config, ho, os); }; });
  auto* hu_p = hu->add_subcommand("probe", "eta Im tr m(x + i eta) for shrinking eta");
  add_kappa(hu_p);
  hu_p->add_option("--x", ho.x)->required();
  hu_p->callback([&] { action = [&](std::ostream& os) { return cmd_hull_probe(config, ho, os); }; });

  int grid = 200;
  auto* ru = app.add_subcommand("ruelle", "Matrix Ruelle iteration and certificates");
  ru->require_subcommand(1);
  auto* ru_c = ru->add_subcommand("coeffs", "Pole-basis coefficients of h_n (JSON)");
  ru_c->add_option("--kappa", kappa);
  ru_c->add_option("--n", n);
  ru_c->callback([&] { action = [&](std::ostream& os) { return cmd_ruelle_coeffs(config, kappa, n, os); }; });
  auto* ru_p = ru->add_subcommand("certificate", "Positivity certificate");
  ru_p->add_option("--kappa", kappa);
  ru_p->add_option("--n", n);
  ru_p->add_option("--grid", grid);
  ru_p->callback(
      [&] { action = [&](std::ostream& os) { return cmd_ruelle_certificate(config, kappa, n, grid, os); }; });
  auto* ru_s = ru->add_subcommand("sandwich", "Trace bounds for h_m, m <= n");
  ru_s->add_option("--kappa", kappa);
  ru_s->add_option("--n", n);
  ru_s->add_option("--grid", grid);
  ru_s->callback([&] { action = [&](std::ostream& os) { return cmd_ruelle_sandwich(config, kappa, n, grid, os); }; });

  auto* ve = app.add_subcommand("verify", "Run every invariant suite; exit 0 iff all pass");
  ve->callback([&] {
    action = [&](std::ostream& os) {
      const VerifyOutcome v = cmd_verify(config);
      write_json(os, v.report);
      return pass_code(v.pass);
    };
  });

  std::string kappa_b = "1(10)*";
  int bins = 64;
  auto* ex = app.add_subcommand("explore-measures", "Binned trace masses of two spectral measures (CSV)");
  ex->add_option("--kappa-a", kappa, "First hull element");
  ex->add_option("--kappa-b", kappa_b, "Second hull element");
  ex->add_option("--bins", bins);
  ex->callback([&] { action = [&](std::ostream& os) { return cmd_explore(config, kappa, kappa_b, bins, os); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << artifact_version() << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    for (const auto& t : tol_overrides) config.set_tolerance(t);
    Sink sink(config, out);
    return action(sink.stream());
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const RegimeError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const PrecisionError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const Error& e) {
    err << "check failure: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

}  // namespace jhull::cli
