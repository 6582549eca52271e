#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "apolar/poly.hpp"

namespace apolar {

/// What to include in a report; analyze turns everything on.
struct ReportOptions {
  bool hilbert = false;
  bool decomposition = false;
  bool standard_form = false;
  bool orbit = false;
  bool hs_tangent = false;
  bool annihilator = false;
  bool gm_limit = false;
  std::optional<int> cat_degree;
  std::optional<int> secant_r;
  std::optional<std::string> ray_partial;  // operator expression
  int ray_degree = 2;
  bool ray = false;
  bool flatness = false;

  static ReportOptions analyze() {
    ReportOptions o;
    o.hilbert = o.decomposition = o.standard_form = o.orbit = o.hs_tangent =
        o.annihilator = true;
    return o;
  }
};

/// Canonical JSON report for one input polynomial.  Keys are sorted, arrays
/// follow the global monomial order, and every number is a decimal string
/// (exact rationals as "p/q"), so reports are bit-stable across runs.
nlohmann::json build_report(const DpPoly& f, const ReportOptions& opts);

/// Human-readable rendering of the same data.
std::string render_text(const nlohmann::json& report);

}  // namespace apolar

#endif
