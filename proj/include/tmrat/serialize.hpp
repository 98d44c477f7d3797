#pragma once

// JSON and CSV forms of poles, expansions, approximants and reports. Numbers
// are written as doubles with 17 significant digits.

#include <string>
#include <vector>

#include "json.hpp"

#include "tmrat/bergman_approx.hpp"
#include "tmrat/expansion.hpp"
#include "tmrat/oracle.hpp"

namespace tmrat {

using Json = nlohmann::ordered_json;

std::string format_number(Real value);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// Poles as an array of [re, im] pairs, order preserved.
Json poles_to_json(const PoleSequence& poles);
PoleSequence poles_from_json(const Json& j);

Json expansion_to_json(const FourierExpansion& expansion);
Json approximant_to_json(const Approximant& approximant);
Json report_to_json(const ErrorReport& report);
Json scan_to_json(const ScanReport& report);

// n,alpha,w_re,w_im,mu_quad,mu_closed,nu_grid,nu_closed,max_interp_residual
std::string report_csv_header();
std::string report_csv_row(const ErrorReport& report);

}  // namespace tmrat
