#include "tmrat/serialize.hpp"

#include <cstdio>

namespace tmrat {

std::string format_number(Real value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(value));
  return buf;
}

namespace {

// Numbers go into JSON through a double so that dumps are stable text.
double as_double(Real v) { return static_cast<double>(v); }

Json reals_to_json(Complex z) { return Json::array({as_double(z.real()), as_double(z.imag())}); }

Json complexes_to_json(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const Complex v : values) out.push_back(reals_to_json(v));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return reals_to_json(z); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgument("complex numbers are encoded as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json poles_to_json(const PoleSequence& poles) {
  return complexes_to_json(std::vector<Complex>(poles.points().begin(), poles.points().end()));
}

PoleSequence poles_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("poles are encoded as an array of [re, im] pairs");
  std::vector<Complex> points;
  for (const auto& item : j) points.push_back(complex_from_json(item));
  return PoleSequence(std::move(points));
}

Json expansion_to_json(const FourierExpansion& expansion) {
  Json j;
  j["poles"] = poles_to_json(expansion.basis().poles());
  j["coefficients"] = complexes_to_json(expansion.coefficients());
  j["source"] = expansion.source();
  return j;
}

Json approximant_to_json(const Approximant& approximant) {
  Json j;
  j["alpha"] = approximant.spec().alpha();
  j["w"] = reals_to_json(approximant.spec().w());
  j["n"] = approximant.order();
  j["free_poles"] = poles_to_json(approximant.free_poles());
  j["poles"] = poles_to_json(approximant.basis().poles());
  j["coefficients"] = complexes_to_json(approximant.coefficients());
  j["grid_size"] = approximant.grid_size();
  return j;
}

Json report_to_json(const ErrorReport& r) {
  Json j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["w"] = reals_to_json(r.w);
  j["free_poles"] = complexes_to_json(r.free_poles);
  j["mu_quad"] = as_double(r.mu_quad);
  j["mu_closed"] = as_double(r.mu_closed);
  j["nu_grid"] = as_double(r.nu_grid);
  j["nu_closed"] = as_double(r.nu_closed);
  j["max_interp_residual"] = as_double(r.max_interp_residual);
  j["coefficient_grid"] = r.coefficient_grid;
  j["mu_grid"] = r.mu_grid;
  j["nu_grid_nodes"] = r.nu_grid_nodes;
  j["free_pole_equals_w"] = r.free_pole_equals_w;
  return j;
}

Json scan_to_json(const ScanReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["min_nu"] = as_double(r.min_nu);
  j["argmin_coefficients"] = complexes_to_json(r.argmin_coefficients);
  j["closed_form"] = as_double(r.closed_form);
  j["margin"] = as_double(r.margin);
  j["optimum_nu"] = as_double(r.optimum_nu);
  return j;
}

std::string report_csv_header() {
  return "n,alpha,w_re,w_im,mu_quad,mu_closed,nu_grid,nu_closed,max_interp_residual";
}

std::string report_csv_row(const ErrorReport& r) {
  std::string row = std::to_string(r.n) + "," + std::to_string(r.alpha);
  for (const Real v : {r.w.real(), r.w.imag(), r.mu_quad, r.mu_closed, r.nu_grid, r.nu_closed,
                       r.max_interp_residual})
    row += "," + format_number(v);
  return row;
}

}  // namespace tmrat
