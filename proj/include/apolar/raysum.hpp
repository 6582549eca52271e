#ifndef APOLAR_RAYSUM_HPP
#define APOLAR_RAYSUM_HPP

#include <optional>
#include <vector>

#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// The d-th ray sum of f with respect to partial:
/// g = sum_{i>=0} x_new^[d*i] * (partial^i -| f), one fresh variable
/// appended after the existing ones.
struct RaySumSpec {
  DpPoly f;
  Operator partial;
  int d = 2;
};

/// The ray sum polynomial, in n+1 variables.
DpPoly ray_sum(const RaySumSpec& spec);

/// Ann of the ray sum by the closed formula: generated by Ann_S(f),
/// alpha*Ann_S(partial -| f), and alpha^d - partial.  Agrees with the
/// directly computed annihilator of ray_sum(spec).
TruncatedIdeal ray_sum_annihilator(const RaySumSpec& spec);

/// Predicted Hilbert function after a 2nd ray sum in the special regime
/// f_2 = f_1 = f_0 = 0, partial of order >= 2, partial -| f linear:
/// H_B(i) = H_A(i) + 1 for i = 1, 2.  verified records agreement with the
/// directly computed Hilbert function.
struct RaySumHilbert {
  std::vector<int> predicted;
  std::vector<int> actual;
  bool verified = false;
};

RaySumHilbert hf_after_ray_sum(const DpPoly& f, const Operator& partial);

/// The tangent-preserving flatness criterion for the lower ray family:
/// I cap J^2 cap (I^2 : partial) inside I*J, where I = Ann(f) and
/// J = Ann(partial -| f).  Requires partial^2 -| f = 0.  On failure the
/// witness lies in the left side but not in I*J.
struct FlatnessVerdict {
  bool holds = false;
  std::optional<Operator> witness;
};

FlatnessVerdict flatness_criterion(const DpPoly& f, const Operator& partial);

/// Cleavability of a stretched dual generator f = x_pivot^[d] + g: verdict
/// "cleavable" when dx^c -| g = 0 for some c with 2c <= d (the criterion is
/// sufficient, not necessary).
struct CleavableVerdict {
  bool cleavable = false;
  std::optional<int> c;
};

CleavableVerdict cleavable_stretched(const DpPoly& f, int pivot = 0);

}  // namespace apolar

#endif
