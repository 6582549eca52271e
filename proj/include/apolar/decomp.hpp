#ifndef APOLAR_DECOMP_HPP
#define APOLAR_DECOMP_HPP

#include <optional>
#include <vector>

#include "apolar/actions.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Iarrobino's symmetric decomposition of the Hilbert function of
/// Apolar(f): rows Delta_a for 0 <= a <= d-2, Delta_a identified with
/// (Delta_a(0), ..., Delta_a(d-a)).  Row a is symmetric about (d-a)/2 and
/// the columns sum to the Hilbert function.
struct SymDecomp {
  int socle_degree = 0;
  std::vector<std::vector<int>> rows;

  const std::vector<int>& row(int a) const { return rows.at(a); }
};

SymDecomp symmetric_decomposition(const DpPoly& f);

/// The canonical flag L(f)^0 <= ... <= L(f)^(d-2) of subspaces of P_1,
/// L(f)^a = P_1 cap m^(d-a-1) f.  Each space is given by an echelon basis
/// of linear forms.
struct LinearFiltration {
  std::vector<std::vector<DpPoly>> spaces;

  int levels() const { return static_cast<int>(spaces.size()); }
  int dim(int a) const { return static_cast<int>(spaces.at(a).size()); }
};

LinearFiltration linear_filtration(const DpPoly& f);

/// Standard-form test: every component f_{d-i} must lie in the divided
/// power subring on L(f)^i.  On failure, witness is the degree d-i of the
/// first violating component.
struct StandardFormCheck {
  bool is_standard = false;
  std::optional<int> violating_degree;
};

StandardFormCheck is_standard_form(const DpPoly& f);

/// A member of the Gamma-orbit of f in standard form, together with the
/// automorphism and unit that produce it: g = unit -| phi^v(f).
struct StandardFormResult {
  DpPoly g;
  AutomorphismData phi;
  Operator scaling;
};

StandardFormResult standard_form(const DpPoly& f);

/// Gamma-orbit normalization around a pivot variable with dx^d -| f != 0:
/// afterwards dx^d -| g = 1 and g has no monomials x^[i] (i < d) or
/// x^[i]*x_j (j != pivot).
DpPoly top_degree_twist(const DpPoly& f, int pivot);

/// Splits a standard form f with Delta_{d-2} = (0,q,0) as g + q diagonal
/// quadric squares in fresh variables; over non-closed fields the diagonal
/// coefficients stay arbitrary nonzero scalars.
struct QuadricSplit {
  DpPoly g;        // part in the first e variables
  DpPoly quadric;  // sum of c_i x_{e+i}^[2]
  int essential_vars = 0;
  int quadric_rank = 0;
  bool hilbert_checked = false;  // certificate: equal H and Delta
};

QuadricSplit quadric_split(const DpPoly& f);

}  // namespace apolar

#endif
