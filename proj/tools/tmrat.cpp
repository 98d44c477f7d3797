// tmrat: build Takenaka-Malmquist approximants of weighted Bergman kernels,
// tabulate their errors and run the verification suite.
//
// Exit codes: 0 ok, 1 usage / invalid input, 2 a check or sweep row failed,
// 3 internal error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "tmrat/bergman_approx.hpp"
#include "tmrat/oracle.hpp"
#include "tmrat/serialize.hpp"
#include "tmrat/verify.hpp"

using namespace tmrat;

namespace {

enum Exit { ok = 0, usage = 1, failed = 2, internal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values given on the command line; anything unset falls back to the config
// file, then to the defaults in RunConfig.
struct Flags {
  std::string config;
  std::optional<int> alpha;
  std::optional<std::string> w;
  std::optional<std::string> poles;
  std::optional<std::size_t> random_poles;
  std::optional<std::uint64_t> seed;
  std::optional<double> max_modulus;
  std::optional<int> n;
  std::optional<std::size_t> grid;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::vector<std::string> only;
  std::optional<double> tolerance;
  std::optional<std::string> alphas;
  std::optional<std::string> ns;
  std::optional<std::string> ws;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> samples;
  std::optional<double> radius;
};

struct RunConfig {
  int alpha = 0;
  Complex w{0.5L, 0};
  std::optional<std::vector<Complex>> poles;
  std::size_t random_poles = 0;
  std::uint64_t seed = 1;
  Real max_modulus = 0.9L;
  std::optional<int> n;
  std::optional<std::size_t> grid;
  std::string out;
  std::string format;
  std::vector<std::string> only;
  std::optional<Real> tolerance;
  std::vector<int> alphas;
  std::vector<int> ns;
  std::vector<Complex> ws;
  std::size_t trials = 100;
  std::size_t samples = 8;
  Real radius = 0.5L;
};

Real parse_real(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long double v = std::strtold(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || *end != '\0') throw UsageError("not a number: '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "re,im" or a bare real.
Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw UsageError("expected 're,im', got '" + text + "'");
}

// "re,im;re,im;..."
std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& item : split(text, ';')) out.push_back(parse_complex(item));
  return out;
}

// "0,2,5" or "0..5" or a mix such as "0..3,7".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        for (int k = lo; k <= hi; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list item '" + item + "'");
    }
  }
  return out;
}

Complex json_complex(const Json& j) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number()) return {j.get<double>(), 0};
  return complex_from_json(j);
}

std::vector<int> json_ints(const Json& j) {
  if (j.is_string()) return parse_int_list(j.get<std::string>());
  return j.get<std::vector<int>>();
}

void apply_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const Json& v = it.value();
      if (key == "alpha") c.alpha = v.get<int>();
      else if (key == "w") c.w = json_complex(v);
      else if (key == "poles") {
        std::vector<Complex> poles;
        for (const auto& p : v) poles.push_back(json_complex(p));
        c.poles = poles;
      }
      else if (key == "random_poles") c.random_poles = v.get<std::size_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "max_modulus") c.max_modulus = v.get<double>();
      else if (key == "n") c.n = v.get<int>();
      else if (key == "grid") c.grid = v.get<std::size_t>();
      else if (key == "out") c.out = v.get<std::string>();
      else if (key == "format") c.format = v.get<std::string>();
      else if (key == "only") c.only = v.is_string() ? split(v.get<std::string>(), ',') : v.get<std::vector<std::string>>();
      else if (key == "tolerance") c.tolerance = v.get<double>();
      else if (key == "alphas") c.alphas = json_ints(v);
      else if (key == "ns") c.ns = json_ints(v);
      else if (key == "ws") {
        c.ws.clear();
        if (v.is_string()) c.ws = parse_complex_list(v.get<std::string>());
        else for (const auto& p : v) c.ws.push_back(json_complex(p));
      }
      else if (key == "trials") c.trials = v.get<std::size_t>();
      else if (key == "samples") c.samples = v.get<std::size_t>();
      else if (key == "radius") c.radius = v.get<double>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

RunConfig resolve(const Flags& f, const std::string& default_format) {
  RunConfig c;
  c.format = default_format;
  if (!f.config.empty()) apply_file(c, f.config);
  if (f.alpha) c.alpha = *f.alpha;
  if (f.w) c.w = parse_complex(*f.w);
  if (f.poles) c.poles = parse_complex_list(*f.poles);
  if (f.random_poles) c.random_poles = *f.random_poles;
  if (f.seed) c.seed = *f.seed;
  if (f.max_modulus) c.max_modulus = *f.max_modulus;
  if (f.n) c.n = *f.n;
  if (f.grid) c.grid = *f.grid;
  if (f.out) c.out = *f.out;
  if (f.format) c.format = *f.format;
  if (!f.only.empty()) {
    c.only.clear();
    for (const auto& item : f.only)
      for (const auto& name : split(item, ',')) c.only.push_back(name);
  }
  if (f.tolerance) c.tolerance = *f.tolerance;
  if (f.alphas) c.alphas = parse_int_list(*f.alphas);
  if (f.ns) c.ns = parse_int_list(*f.ns);
  if (f.ws) c.ws = parse_complex_list(*f.ws);
  if (f.trials) c.trials = *f.trials;
  if (f.samples) c.samples = *f.samples;
  if (f.radius) c.radius = *f.radius;

  if (c.alpha < 0) throw UsageError("alpha must be >= 0");
  for (const int a : c.alphas)
    if (a < 0) throw UsageError("alpha must be >= 0");
  if (c.format != "csv" && c.format != "json") throw UsageError("format must be csv or json");
  if (c.grid && (*c.grid < 256 || (*c.grid & (*c.grid - 1)) != 0))
    throw UsageError("grid must be a power of two >= 256");
  if (c.grid && *c.grid > max_grid_size) throw UsageError("grid exceeds 2^20 nodes");
  if (!(c.max_modulus >= 0 && c.max_modulus < 1)) throw UsageError("max-modulus must lie in [0, 1)");
  if (c.poles && c.random_poles > 0) throw UsageError("give either --poles or --random-poles, not both");
  return c;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Free poles for order n: explicit list (must have n - alpha entries when n is
// given), a random draw, or zeros.
PoleSequence free_poles_for(const RunConfig& c, int alpha, std::optional<int> n) {
  if (c.poles) {
    const std::size_t count = c.poles->size();
    if (n) {
      const std::size_t want = free_pole_count(static_cast<std::size_t>(*n), static_cast<unsigned>(alpha));
      if (want > count)
        throw InvalidArgument("order n = " + std::to_string(*n) + " needs " + std::to_string(want) +
                              " free poles, only " + std::to_string(count) + " given");
      return PoleSequence(*c.poles).prefix(want);
    }
    return PoleSequence(*c.poles);
  }
  if (!n) {
    if (c.random_poles > 0) return random_poles(c.random_poles, c.seed, c.max_modulus);
    return PoleSequence{};
  }
  const std::size_t want = free_pole_count(static_cast<std::size_t>(*n), static_cast<unsigned>(alpha));
  if (c.random_poles > 0) {
    // Prefixes of one draw, so orders are nested.
    return random_poles(std::max(want, c.random_poles), c.seed, c.max_modulus).prefix(want);
  }
  return PoleSequence(std::vector<Complex>(want, Complex(0)));
}

Json residual_table(const Approximant& r) {
  const auto residuals = interpolation_residuals(r);
  const PoleSequence& poles = r.basis().poles();
  Json rows = Json::array();
  for (std::size_t m = 0; m < poles.size(); ++m) {
    Json row;
    row["m"] = m;
    row["pole"] = complex_to_json(poles[m]);
    row["multiplicity"] = poles.multiplicity(m);
    row["residual"] = double(residuals[m]);
    rows.push_back(row);
  }
  return rows;
}

int cmd_basis(const RunConfig& c) {
  PoleSequence poles = c.poles ? PoleSequence(*c.poles)
                               : c.random_poles > 0 ? random_poles(c.random_poles, c.seed, c.max_modulus)
                                                    : PoleSequence{};
  if (c.n) {
    if (*c.n < 0) throw UsageError("n must be >= 0");
    const auto size = static_cast<std::size_t>(*c.n) + 1;
    if (!c.poles && c.random_poles == 0) poles = PoleSequence(std::vector<Complex>(size, Complex(0)));
    else if (size > poles.size()) throw UsageError("n exceeds the number of poles minus one");
    else poles = poles.prefix(size);
  }
  if (poles.empty()) throw UsageError("basis needs --poles, --random-poles or --n");
  if (!(c.radius >= 0 && Disk::admissible(Complex(c.radius)))) throw UsageError("radius must lie in [0, 1)");

  const TMBasis basis(poles);
  const CircleGrid& grid = shared_grid(c.grid.value_or(default_grid_size));
  const auto gram = gram_matrix(basis, grid);
  const Real deviation = gram_max_deviation(gram, basis.size());

  Rng rng(c.seed);
  Real cd = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const Disk z(rng.point_in_disk(0.95L));
    const Disk zeta(rng.point_in_disk(0.95L));
    cd = std::max(cd, christoffel_darboux_residual(basis, basis.size(), z, zeta));
  }

  std::vector<Complex> values(basis.size());
  Output out(c.out);
  if (c.format == "csv") {
    std::ostream& os = out.stream();
    os << "k,z_re,z_im,phi_re,phi_im\n";
    for (std::size_t j = 0; j < c.samples; ++j) {
      const Complex z = std::polar(c.radius, 2 * pi * Real(j) / Real(c.samples));
      basis.evaluate(z, values);
      for (std::size_t k = 0; k < values.size(); ++k)
        os << k << ',' << format_number(z.real()) << ',' << format_number(z.imag()) << ','
           << format_number(values[k].real()) << ',' << format_number(values[k].imag()) << '\n';
    }
    std::cerr << "gram_max_deviation " << format_number(deviation) << "\ncd_max_residual " << format_number(cd)
              << '\n';
    return ok;
  }
  Json j;
  j["poles"] = poles_to_json(poles);
  Json samples = Json::array();
  for (std::size_t s = 0; s < c.samples; ++s) {
    const Complex z = std::polar(c.radius, 2 * pi * Real(s) / Real(c.samples));
    basis.evaluate(z, values);
    Json row;
    row["z"] = complex_to_json(z);
    Json phi = Json::array();
    for (const Complex v : values) phi.push_back(complex_to_json(v));
    row["phi"] = phi;
    samples.push_back(row);
  }
  j["samples"] = samples;
  Json g = Json::array();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) row.push_back(complex_to_json(gram[r * basis.size() + k]));
    g.push_back(row);
  }
  j["gram"] = g;
  j["gram_max_deviation"] = double(deviation);
  j["cd_pairs"] = 100;
  j["cd_max_residual"] = double(cd);
  out.stream() << j.dump(2) << '\n';
  return ok;
}

Approximant approximant_for(const RunConfig& c, int alpha, Complex w, std::optional<int> n) {
  if (n && *n < 0) throw UsageError("n must be >= 0");
  const KernelSpec spec(alpha, Disk(w));
  return Approximant::build(spec, free_poles_for(c, alpha, n), c.grid);
}

int cmd_approximate(const RunConfig& c) {
  const Approximant r = approximant_for(c, c.alpha, c.w, c.n);
  const ErrorReport report = error_report(r);
  Output out(c.out);
  if (c.format == "csv") {
    out.stream() << report_csv_header() << '\n' << report_csv_row(report) << '\n';
    return ok;
  }
  Json j;
  j["approximant"] = approximant_to_json(r);
  j["report"] = report_to_json(report);
  j["interpolation"] = residual_table(r);
  out.stream() << j.dump(2) << '\n';
  return ok;
}

int cmd_sweep(const RunConfig& c) {
  if (c.format != "csv") throw UsageError("sweep writes csv only");
  struct Row {
    int alpha;
    int n;
    Complex w;
    std::string line;
  };
  std::vector<Row> rows;
  bool any_failed = false;
  for (const int alpha : c.alphas) {
    for (const int n : c.ns) {
      for (const Complex w : c.ws) {
        std::string line;
        try {
          const Approximant r = approximant_for(c, alpha, w, n);
          line = report_csv_row(error_report(r)) + ",";
        } catch (const Error& e) {
          any_failed = true;
          std::string message = e.what();
          std::replace(message.begin(), message.end(), ',', ';');
          std::replace(message.begin(), message.end(), '\n', ' ');
          line = std::to_string(n) + "," + std::to_string(alpha) + "," + format_number(w.real()) + "," +
                 format_number(w.imag()) + ",,,,,," + message;
        }
        rows.push_back({alpha, n, w, line});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::make_tuple(a.alpha, a.n, std::abs(a.w), std::arg(a.w)) <
           std::make_tuple(b.alpha, b.n, std::abs(b.w), std::arg(b.w));
  });
  Output out(c.out);
  std::ostream& os = out.stream();
  os << report_csv_header() << ",error\n";
  for (const Row& row : rows) os << row.line << '\n';
  return any_failed ? failed : ok;
}

int cmd_verify(const RunConfig& c) {
  VerifyOptions options;
  options.only = c.only;
  options.tolerance = c.tolerance;
  options.seed = c.seed;
  std::vector<CheckResult> results;
  try {
    results = run_verification(options, [](const CheckResult& r) {
      std::cout << summary_line(r) << std::endl;
      if (!r.numeric_pass())
        for (const Measurement& m : r.parts)
          if (!m.pass)
            std::cout << "      failed: " << m.label << " = " << format_number(m.value) << " > "
                      << format_number(m.bound) << std::endl;
    });
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(e.what()) + " (known: orthonormality, christoffel_darboux, mu_exactness, "
                                             "oracle_equivalence, nu_exactness, interpolation, remainder, "
                                             "proof_inequality, parseval_gap, degenerate_boundary or 1..10)");
  }
  const bool pass = all_pass(results);
  std::cout << (pass ? "verify: all checks pass" : "verify: FAILED") << std::endl;
  if (!c.out.empty()) {
    Output out(c.out);
    out.stream() << verdict_json(results, options).dump(2) << '\n';
  }
  return pass ? ok : failed;
}

int cmd_oracle(const RunConfig& c) {
  if (c.format != "json") throw UsageError("oracle writes json only");
  const Approximant r = approximant_for(c, c.alpha, c.w, c.n);
  Json j;
  j["approximant"] = approximant_to_json(r);
  const LeastSquaresSolution lsq =
      lsq_minimize(LeastSquaresProblem(r.spec(), r.basis(), c.grid.value_or(default_grid_size)));
  Json l;
  l["minimum"] = double(lsq.minimum);
  l["normal_minimum"] = double(lsq.normal_minimum);
  l["mu_closed"] = double(mu_min_closed_form(r.spec(), r.free_poles()));
  l["route_gap"] = double(lsq.route_gap);
  l["condition_number"] = double(lsq.condition_number);
  l["orthogonality_residual"] = double(lsq.orthogonality_residual);
  j["least_squares"] = l;
  j["scan"] = scan_to_json(uniform_competitor_scan(r, c.trials, c.seed));
  if (c.alpha == 0 && r.free_poles().empty()) {
    const ExhaustiveReport e = small_instance_exhaustive(r.spec());
    Json x;
    x["grid_minimum"] = double(e.grid_minimum);
    x["argmin"] = complex_to_json(e.argmin);
    x["fourier_coefficient"] = complex_to_json(e.fourier_coefficient);
    x["closed_form"] = double(e.closed_form);
    x["spacing"] = double(e.spacing);
    j["exhaustive"] = x;
  }
  Output out(c.out);
  out.stream() << j.dump(2) << '\n';
  return ok;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON config file; flags override its values")->check(CLI::ExistingFile);
  app->add_option("--seed", f.seed, "seed for random poles and sampling");
  app->add_option("--out", f.out, "output path (default stdout)");
}

void add_problem(CLI::App* app, Flags& f) {
  app->add_option("--alpha", f.alpha, "kernel weight alpha >= 0");
  app->add_option("--w", f.w, "kernel point as re,im");
  app->add_option("--poles", f.poles, "free poles as re,im;re,im;...");
  app->add_option("--random-poles", f.random_poles, "draw this many free poles uniformly in |a| <= max-modulus");
  app->add_option("--max-modulus", f.max_modulus, "bound on random pole moduli (default 0.9)");
  app->add_option("--n", f.n, "total order n (free poles = n - alpha)");
  app->add_option("--grid", f.grid, "quadrature nodes (power of two >= 256)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Takenaka-Malmquist approximation of weighted Bergman kernels"};
  app.require_subcommand(1);
  Flags f;

  auto* basis = app.add_subcommand("basis", "tabulate phi_k, the Gram matrix and Christoffel-Darboux residuals");
  add_common(basis, f);
  add_problem(basis, f);
  basis->add_option("--samples", f.samples, "points on the circle |z| = radius (default 8)");
  basis->add_option("--radius", f.radius, "sample radius (default 0.5)");
  basis->add_option("--format", f.format, "json (default) or csv");

  auto* approximate = app.add_subcommand("approximate", "build r_{alpha,n} and report its errors");
  add_common(approximate, f);
  add_problem(approximate, f);
  approximate->add_option("--format", f.format, "json (default) or csv");

  auto* sweep = app.add_subcommand("sweep", "error reports over an (alpha, n, w) lattice as CSV");
  add_common(sweep, f);
  add_problem(sweep, f);
  sweep->add_option("--alphas", f.alphas, "alpha values, e.g. 0..3 or 0,2");
  sweep->add_option("--ns", f.ns, "orders, e.g. 0..5");
  sweep->add_option("--ws", f.ws, "kernel points re,im;re,im;...");
  sweep->add_option("--format", f.format, "csv");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  add_common(verify, f);
  verify->add_option("--only", f.only, "check names or numbers (comma separated or repeated)");
  verify->add_option("--tolerance", f.tolerance, "replace every tolerance with this value");

  auto* oracle = app.add_subcommand("oracle", "least squares, competitor scan and exhaustive grid");
  add_common(oracle, f);
  add_problem(oracle, f);
  oracle->add_option("--trials", f.trials, "competitor scan trials (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*basis) return cmd_basis(resolve(f, "json"));
    if (*approximate) return cmd_approximate(resolve(f, "json"));
    if (*sweep) return cmd_sweep(resolve(f, "csv"));
    if (*verify) return cmd_verify(resolve(f, "json"));
    if (*oracle) return cmd_oracle(resolve(f, "json"));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
