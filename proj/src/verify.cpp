#include "tmrat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "tmrat/bergman_approx.hpp"
#include "tmrat/oracle.hpp"
#include "tmrat/random.hpp"

namespace tmrat {

bool CheckResult::numeric_pass() const {
  return std::all_of(parts.begin(), parts.end(), [](const Measurement& m) { return m.pass; });
}

const Measurement& CheckResult::worst() const {
  const auto ratio = [](const Measurement& m) {
    if (!m.pass) return Real(INFINITY);
    return m.bound > 0 ? m.value / m.bound : m.value;
  };
  return *std::max_element(parts.begin(), parts.end(),
                           [&](const Measurement& a, const Measurement& b) { return ratio(a) < ratio(b); });
}

namespace {

constexpr Real max_free_modulus = 0.9L;

struct Context {
  std::uint64_t seed;
  std::optional<Real> tolerance;
};

// Accumulates the running maximum of one quantity across samples.
struct Worst {
  Real value = -INFINITY;
  void see(Real v) {
    if (!(v <= value)) value = v;  // NaN sticks
  }
};

class Recorder {
 public:
  Recorder(const Context& ctx, CheckResult& result) : ctx_(ctx), result_(result) {}

  // value <= bound
  void at_most(std::string label, Real value, Real bound, bool tolerance = true) {
    if (tolerance && ctx_.tolerance) bound = *ctx_.tolerance;
    result_.parts.push_back({std::move(label), value, bound, tolerance, value <= bound});
  }

  void diagnostic(std::string label, Real value, Real bound) {
    result_.diagnostics.push_back({std::move(label), value, bound, true, value <= bound});
  }

 private:
  const Context& ctx_;
  CheckResult& result_;
};

std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  // splitmix64 over the combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (1 + a + 64 * b + 4096 * c);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Real rel(Real a, Real b) { return std::fabs(a - b) / std::fabs(b); }

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Random pole sequence for checks 1 and 2: n in 1..20.
PoleSequence basis_sequence(const Context& ctx, unsigned index) {
  const std::size_t n = 1 + index % 20;
  return random_poles(n + 1, derive(ctx.seed, 1, index), max_free_modulus);
}

struct LatticePoint {
  unsigned alpha;
  Real modulus;
  unsigned draw;
  std::size_t n;
  Complex w;
  PoleSequence free;
};

const std::vector<Real>& lattice_moduli() {
  static const std::vector<Real> m{0.1L, 0.3L, 0.5L, 0.7L};
  return m;
}

// For fixed (alpha, |w|, draw) the free poles are nested prefixes of one draw
// of ten, and arg w is drawn once.
LatticePoint lattice_point(const Context& ctx, unsigned alpha, std::size_t wi, unsigned draw, std::size_t n) {
  Rng rng(derive(ctx.seed, 3, alpha * 16 + wi, draw));
  const Real modulus = lattice_moduli()[wi];
  const Complex w = std::polar(modulus, 2 * pi * rng.uniform());
  const PoleSequence all = random_poles(10, derive(ctx.seed, 4, alpha * 16 + wi, draw), max_free_modulus);
  return {alpha, modulus, draw, n, w, all.prefix(n - alpha)};
}

std::vector<LatticePoint> full_lattice(const Context& ctx) {
  std::vector<LatticePoint> out;
  for (unsigned alpha = 0; alpha <= 3; ++alpha)
    for (std::size_t wi = 0; wi < lattice_moduli().size(); ++wi)
      for (unsigned draw = 0; draw < 3; ++draw)
        for (std::size_t n = alpha; n <= alpha + 10; ++n) out.push_back(lattice_point(ctx, alpha, wi, draw, n));
  return out;
}

// One configuration per (alpha, |w|) for the competitor suites.
std::vector<LatticePoint> competitor_lattice(const Context& ctx) {
  std::vector<LatticePoint> out;
  for (unsigned alpha = 0; alpha <= 3; ++alpha)
    for (std::size_t wi = 0; wi < lattice_moduli().size(); ++wi)
      out.push_back(lattice_point(ctx, alpha, wi, 0, alpha + 5));
  return out;
}

Approximant build(const LatticePoint& p) { return Approximant::build(KernelSpec(int(p.alpha), Disk(p.w)), p.free); }

Approximant spot_approximant() { return Approximant::build(KernelSpec(0, Disk(0.5L)), PoleSequence({0.0L})); }

void orthonormality(const Context& ctx, Recorder& rec) {
  Worst dev;
  const CircleGrid& grid = shared_grid(4096);
  for (unsigned k = 0; k < 20; ++k) {
    const TMBasis basis(basis_sequence(ctx, k));
    dev.see(gram_max_deviation(gram_matrix(basis, grid), basis.size()));
  }
  rec.at_most("max |Gram - I|, 20 sequences, 4096 nodes", dev.value, 1e-12L);
}

void christoffel_darboux(const Context& ctx, Recorder& rec) {
  Worst residual;
  for (unsigned k = 0; k < 20; ++k) {
    const TMBasis basis(basis_sequence(ctx, k));
    Rng rng(derive(ctx.seed, 2, k));
    for (int pair = 0; pair < 100; ++pair) {
      const Disk z(rng.point_in_disk(0.95L));
      const Disk zeta(rng.point_in_disk(0.95L));
      residual.see(christoffel_darboux_residual(basis, basis.size(), z, zeta));
    }
  }
  rec.at_most("max CD residual, 100 pairs x 20 sequences", residual.value, 1e-12L);
}

void mu_exactness(const Context& ctx, Recorder& rec) {
  Worst err;
  for (const LatticePoint& p : full_lattice(ctx)) {
    const Approximant r = build(p);
    const auto [mu, nodes] = mu_functional_adaptive(r.spec(), [&](Complex x) { return r(x); }, r.grid_size());
    (void)nodes;
    err.see(rel(mu, mu_min_closed_form(r.spec(), r.free_poles())));
  }
  rec.at_most("max relative error mu_quad vs mu_closed, 528 configs", err.value, 1e-10L);

  const Approximant spot = spot_approximant();
  const auto [mu, nodes] = mu_functional_adaptive(spot.spec(), [&](Complex x) { return spot(x); }, spot.grid_size());
  (void)nodes;
  rec.at_most("spot alpha=0 n=1 w=0.5: relative error of mu_quad vs 4/27", rel(mu, Real(4) / 27), 1e-10L);
  rec.at_most("spot: relative error of mu_closed vs 4/27",
              rel(mu_min_closed_form(spot.spec(), spot.free_poles()), Real(4) / 27), 1e-15L);
}

void oracle_equivalence(const Context& ctx, Recorder& rec) {
  Worst minimum, routes, condition;
  for (const LatticePoint& p : full_lattice(ctx)) {
    const KernelSpec spec(static_cast<int>(p.alpha), Disk(p.w));
    const TMBasis basis(p.free.with_trailing(p.w, p.alpha + 1));
    const LeastSquaresSolution s = lsq_minimize(LeastSquaresProblem(spec, basis));
    const Real mu = mu_min_closed_form(spec, p.free);
    minimum.see(rel(s.normal_minimum, mu));
    minimum.see(rel(s.minimum, mu));
    routes.see(s.route_gap);
    condition.see(s.condition_number - 1);
  }
  rec.at_most("max relative error lsq minimum vs mu_closed", minimum.value, 1e-8L);
  rec.at_most("max |projection - normal equations| coefficient gap", routes.value, 1e-9L);
  rec.at_most("max (condition number - 1) of the discrete Gram matrix", condition.value, 1e-8L);
}

void nu_exactness(const Context& ctx, Recorder& rec) {
  Worst err, equi;
  const CircleGrid& fine = shared_grid(std::size_t{1} << 16);
  const CircleGrid& coarse = shared_grid(4096);
  for (const LatticePoint& p : full_lattice(ctx)) {
    const Approximant r = build(p);
    const RationalFunction f = [&](Complex x) { return r(x); };
    err.see(rel(nu_functional(r.spec(), f, fine), nu_min_closed_form(r.spec(), r.free_poles())));
    equi.see(equimodularity_variation(r.spec(), f, coarse));
  }
  rec.at_most("max relative error nu_grid vs nu_closed, 2^16 nodes + refinement", err.value, 1e-6L);
  rec.at_most("max equimodularity variation (max-min)/mean, 4096 nodes", equi.value, 1e-9L);

  Worst beaten;
  std::size_t k = 0;
  for (const LatticePoint& p : competitor_lattice(ctx)) {
    const ScanReport scan = uniform_competitor_scan(build(p), 100, derive(ctx.seed, 5, k++));
    beaten.see(-scan.margin);
  }
  rec.at_most("max (nu_closed - best competitor nu), 100 trials x 16 configs", beaten.value, 1e-9L);

  const Approximant spot = spot_approximant();
  rec.at_most("spot alpha=0 n=1 w=0.5: relative error of nu_grid vs 1/3",
              rel(nu_functional(spot.spec(), [&](Complex x) { return spot(x); }, fine), Real(1) / 3), 1e-6L);
}

void interpolation(const Context& ctx, Recorder& rec) {
  Worst closed, residual;
  for (unsigned alpha = 0; alpha <= 2; ++alpha) {
    Rng rng(derive(ctx.seed, 6, alpha));
    const Complex w = std::polar(Real(0.5), 2 * pi * rng.uniform());
    const Complex b = rng.point_in_disk(0.8L);
    const Complex c = rng.point_in_disk(0.8L);
    const std::vector<PoleSequence> cases{
        random_poles(5, derive(ctx.seed, 7, alpha), max_free_modulus),
        PoleSequence({b, c, b, b}),
        PoleSequence({c, w, b}),
    };
    for (const PoleSequence& free : cases) {
      const Approximant r = Approximant::build(KernelSpec(static_cast<int>(alpha), Disk(w)), free);
      for (int j = 0; j < 50; ++j) {
        const Complex z = j % 2 == 0 ? std::polar(Real(1), 2 * pi * rng.uniform()) : rng.point_in_disk(0.99L);
        closed.see(std::abs(r(z) - r.closed_form(z)));
      }
      for (const Real v : interpolation_residuals(r)) residual.see(v);
    }
  }
  rec.at_most("max |closed form - (1 - x conj(w)) S_{n+1}| at 50 circle/disk points", closed.value, 1e-12L);
  rec.at_most("max interpolation residual (multiplicity 3, w block, free pole = w)", residual.value, 1e-8L);
}

void remainder(const Context& ctx, Recorder& rec) {
  Worst identity, modulus, phase;
  for (unsigned alpha = 0; alpha <= 3; ++alpha) {
    Rng rng(derive(ctx.seed, 8, alpha));
    const Complex w = std::polar(Real(0.6), 2 * pi * rng.uniform());
    const KernelSpec spec(static_cast<int>(alpha), Disk(w));
    const Approximant r = Approximant::build(spec, random_poles(4, derive(ctx.seed, 9, alpha), max_free_modulus));
    const CircleGrid& grid = shared_grid(r.grid_size());
    for (int j = 0; j < 50; ++j) {
      const Complex z = rng.point_in_disk(0.95L);
      identity.see(std::abs(bergman_eval(spec, z) - r.partial_sum(z) -
                            remainder_closed_form(spec, r.basis(), r.order(), z)));
      if (j % 5 == 0) {
        const Complex quad = remainder_integral_J(spec, r.basis(), r.order(), Disk(z), grid);
        const Complex exact = closed_form_J(spec, r.basis(), r.order(), Disk(z));
        modulus.see(rel(std::abs(quad), std::abs(exact)));
        phase.see(std::abs(quad - exact) / std::abs(exact));
      }
    }
  }
  rec.at_most("max |K - S_{n+1} - closed remainder| at 50 disk points per alpha", identity.value, 1e-10L);
  rec.at_most("max relative error | |J_quad| - |J_closed| |", modulus.value, 1e-10L);
  rec.diagnostic("max relative error |J_quad - J_closed| (phase aligned)", phase.value, 1e-10L);
}

// Competitors for checks 8 and 9: R = (1 - x conj(w)) sum c_m phi_m.
std::vector<Complex> perturbed(const std::vector<Complex>& optimum, Rng& rng, Real scale) {
  std::vector<Complex> c(optimum);
  for (auto& v : c) v += scale * rng.complex_normal();
  return c;
}

void proof_inequality(const Context& ctx, Recorder& rec) {
  Worst excess;
  std::size_t k = 0;
  for (const LatticePoint& p : competitor_lattice(ctx)) {
    const Approximant r = build(p);
    const CircleGrid& grid = shared_grid(r.grid_size());
    const Real w2 = std::norm(p.w);
    Real size = 0;
    for (const Complex c : r.coefficients()) size = std::max(size, std::abs(c));
    Rng rng(derive(ctx.seed, 10, k++));
    for (int trial = 0; trial < 100; ++trial) {
      // Mix of small perturbations of the optimum and unrelated draws.
      const Real scale = trial % 3 == 0 ? size : trial % 3 == 1 ? Real(0.1) * size : Real(1e-3) * size;
      const auto c = trial % 3 == 0 ? perturbed(std::vector<Complex>(r.coefficients().size()), rng, scale)
                                    : perturbed(r.coefficients(), rng, scale);
      const FixedPoleRational competitor(r, c);
      const RationalFunction f = [&](Complex x) { return competitor(x); };
      const Real mu = mu_functional(r.spec(), f, grid);
      const Real nu = nu_functional(r.spec(), f, grid);
      excess.see(mu * (1 - w2) - nu * nu);
    }
  }
  rec.at_most("max mu(R)(1-|w|^2) - nu(R)^2 over 100 competitors x 16 configs", excess.value, 1e-12L);
}

void parseval_gap(const Context& ctx, Recorder& rec) {
  Worst gap;
  std::size_t k = 0;
  for (const LatticePoint& p : competitor_lattice(ctx)) {
    const Approximant r = build(p);
    const CircleGrid& grid = shared_grid(r.grid_size());
    const Real mu_min = mu_min_closed_form(r.spec(), r.free_poles());
    Rng rng(derive(ctx.seed, 11, k++));
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = perturbed(r.coefficients(), rng, Real(0.01) * Real(1 + trial % 4));
      Real expected = 0;
      for (std::size_t m = 0; m < c.size(); ++m) expected += std::norm(c[m] - r.coefficients()[m]);
      const FixedPoleRational competitor(r, c);
      const Real mu = mu_functional(r.spec(), [&](Complex x) { return competitor(x); }, grid);
      gap.see(std::fabs(mu - mu_min - expected));
    }
  }
  rec.at_most("max |mu(R) - mu_min - sum |dc_m|^2| over 20 perturbations x 16 configs", gap.value, 1e-10L);
}

void degenerate_boundary(const Context& ctx, Recorder& rec) {
  Worst zero;
  for (unsigned alpha = 0; alpha <= 3; ++alpha) {
    const Approximant r =
        Approximant::build(KernelSpec(static_cast<int>(alpha), Disk(0)), random_poles(3, derive(ctx.seed, 12, alpha), max_free_modulus));
    const ErrorReport e = error_report(r, {.nu_nodes = 4096});
    for (const Real v : {e.mu_quad, e.mu_closed, e.nu_grid, e.nu_closed, e.max_interp_residual}) zero.see(std::fabs(v));
  }
  rec.at_most("w = 0: largest error field (must be exactly 0)", zero.value, 0, false);

  Worst mu, nu, equi;
  const CircleGrid& fine = shared_grid(std::size_t{1} << 16);
  for (unsigned alpha = 0; alpha <= 3; ++alpha) {
    Rng rng(derive(ctx.seed, 13, alpha));
    const Complex w = std::polar(Real(0.95), 2 * pi * rng.uniform());
    const KernelSpec spec(static_cast<int>(alpha), Disk(w));
    const PoleSequence all = random_poles(6, derive(ctx.seed, 14, alpha), max_free_modulus);
    for (std::size_t free = 0; free <= 6; free += 3) {
      const Approximant r = Approximant::build(spec, all.prefix(free));
      const RationalFunction f = [&](Complex x) { return r(x); };
      const Real value = mu_functional_adaptive(spec, f, r.grid_size()).first;
      mu.see(rel(value, mu_min_closed_form(spec, r.free_poles())));
      nu.see(rel(nu_functional(spec, f, fine), nu_min_closed_form(spec, r.free_poles())));
      equi.see(equimodularity_variation(spec, f, shared_grid(r.grid_size())));
    }
  }
  rec.at_most("|w| = 0.95: max relative error of mu", mu.value, 1e-8L);
  rec.at_most("|w| = 0.95: max relative error of nu", nu.value, 1e-5L);
  rec.at_most("|w| = 0.95: max equimodularity variation", equi.value, 1e-5L);

  std::size_t accepted = 0;
  for (const Complex z : {Complex(1 - 1e-10L), Complex(1 - 1e-9L), Complex(0, 1), Complex(-1.5L),
                          Complex(0.8L, 0.6L), Complex(NAN, 0)}) {
    try {
      (void)Disk(z);
      ++accepted;
    } catch (const OutsideDisk&) {
    }
  }
  rec.at_most("points with |w| >= 1 - 1e-9 accepted at construction", Real(accepted), 0, false);
}

struct CheckDef {
  int criterion;
  const char* name;
  double budget;
  void (*run)(const Context&, Recorder&);
};

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs{
      {1, "orthonormality", 5, orthonormality},
      {2, "christoffel_darboux", 2, christoffel_darboux},
      {3, "mu_exactness", 60, mu_exactness},
      {4, "oracle_equivalence", 0, oracle_equivalence},
      {5, "nu_exactness", 30, nu_exactness},
      {6, "interpolation", 0, interpolation},
      {7, "remainder", 0, remainder},
      {8, "proof_inequality", 0, proof_inequality},
      {9, "parseval_gap", 0, parseval_gap},
      {10, "degenerate_boundary", 0, degenerate_boundary},
  };
  return defs;
}

bool selected(const CheckDef& def, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(),
                     [&](const std::string& s) { return s == def.name || s == std::to_string(def.criterion); });
}

Json measurement_json(const Measurement& m) {
  Json j;
  j["pass"] = m.pass;
  j["value"] = double(m.value);
  j["bound"] = double(m.bound);
  return j;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : definitions()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_done) {
  for (const std::string& s : options.only) {
    const bool known = std::any_of(definitions().begin(), definitions().end(), [&](const CheckDef& d) {
      return s == d.name || s == std::to_string(d.criterion);
    });
    if (!known) throw InvalidArgument("unknown check '" + s + "'");
  }
  const Context ctx{options.seed, options.tolerance};
  std::vector<CheckResult> results;
  for (const CheckDef& def : definitions()) {
    if (!selected(def, options.only)) continue;
    CheckResult result;
    result.criterion = def.criterion;
    result.name = def.name;
    result.budget_seconds = def.budget;
    Recorder rec(ctx, result);
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(ctx, rec);
    } catch (const Error& e) {
      rec.at_most(std::string("raised: ") + e.what(), 1, 0, false);
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(result);
    results.push_back(std::move(result));
  }
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass(); });
}

Json verdict_json(const std::vector<CheckResult>& results, const VerifyOptions& options) {
  Json j;
  j["seed"] = options.seed;
  j["pass"] = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.numeric_pass(); });
  Json checks = Json::object();
  Json diagnostics = Json::object();
  for (const CheckResult& r : results) {
    const Measurement& w = r.worst();
    Json c;
    c["criterion"] = r.criterion;
    c["pass"] = r.numeric_pass();
    c["value"] = double(w.value);
    c["bound"] = double(w.bound);
    Json parts = Json::object();
    for (const Measurement& m : r.parts) parts[m.label] = measurement_json(m);
    c["parts"] = parts;
    checks[r.name] = c;
    for (const Measurement& m : r.diagnostics) diagnostics[r.name + ": " + m.label] = measurement_json(m);
  }
  j["checks"] = checks;
  j["diagnostics"] = diagnostics;
  return j;
}

Json timings_json(const std::vector<CheckResult>& results) {
  Json j = Json::object();
  for (const CheckResult& r : results) {
    Json t;
    t["seconds"] = r.seconds;
    t["budget"] = r.budget_seconds;
    t["within_budget"] = r.within_budget();
    j[r.name] = t;
  }
  return j;
}

std::string summary_line(const CheckResult& result) {
  const Measurement& w = result.worst();
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s  %2d %-20s %-11s <= %-9s %7.2fs%s  %s", result.pass() ? "PASS" : "FAIL",
                result.criterion, result.name.c_str(), fmt("%.3e", double(w.value)).c_str(),
                fmt("%.1e", double(w.bound)).c_str(), result.seconds,
                result.within_budget() ? "" : fmt(" (budget %.0fs exceeded)", result.budget_seconds).c_str(),
                w.label.c_str());
  return buf;
}

}  // namespace tmrat
