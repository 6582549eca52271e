#ifndef APOLAR_ORBITS_HPP
#define APOLAR_ORBITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "apolar/actions.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Tangent spaces to the Gamma-orbit of f and its unipotent variant:
/// t.f = Sf + sum_i m_S(x_i f),  t+.f = m_S f + sum_i m_S^2 (x_i f),
/// both inside P_{<= deg f}.
struct OrbitTangent {
  DpPoly f;
  int dim_tangent = 0;
  int dim_unipotent = 0;
  std::vector<DpPoly> tangent_basis;
  std::vector<DpPoly> unipotent_basis;
};

OrbitTangent orbit_tangent(const DpPoly& f);

/// dim t.f for each entry (the orbit dimension in characteristic zero).
std::vector<int> orbit_dimension_table(const std::vector<DpPoly>& fs);

/// Triangular basis of (t f)^perp (or (t+ f)^perp) in operator degrees
/// <= max_degree, computed from the predicate description
/// { sigma : deg(sigma -| f) <= c0, deg(d sigma/d dx_i -| f) <= c1 } with
/// (c0, c1) = (0, 0) for t and (0, 1) for t+.
std::vector<Operator> tangent_perp(const DpPoly& f, bool unipotent,
                                   int max_degree);

/// t-compressed test: H(i) maximal for i <= t and H(d-1) = n.
bool is_t_compressed(const DpPoly& f, int t);
/// Largest t >= 1 for which f is t-compressed, when one exists.
std::optional<int> max_compression(const DpPoly& f);

/// Canonical gradedness certificate.
///  - graded: a chain of units and unipotent automorphisms reduces f to its
///    top form (P_{<= t+1} inside t+.f_d);
///  - obstruction: a low-degree homogeneous operator perpendicular to
///    t+.f_d witnesses the failure;
///  - inconclusive: the compression hypotheses do not hold.
struct GradednessCertificate {
  enum class Kind { graded, obstruction, inconclusive } kind =
      Kind::inconclusive;
  std::optional<DpPoly> reduced;        // equals the top form when graded
  std::vector<Operator> unit_chain;     // units applied by contraction
  std::vector<AutomorphismData> autos;  // unipotent automorphisms applied
  std::optional<Operator> obstruction;
  std::string note;
};

GradednessCertificate canonical_gradedness_certificate(const DpPoly& f);

}  // namespace apolar

#endif
