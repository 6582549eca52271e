#ifndef APOLAR_SCHEME_HPP
#define APOLAR_SCHEME_HPP

#include <optional>
#include <vector>

#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// The i-th binomial expansion of h: the unique a_i > a_{i-1} > ... > a_1 >= 0
/// with h = sum_j C(a_j, j); returned as (a_i, ..., a_1).
std::vector<long> binomial_expansion(long h, int i);

/// Macaulay's bound h^<i> = sum_j C(a_j + 1, j + 1).
long macaulay_bound(long h, int i);

/// O-sequence test: H(0) = 1 and H(i+1) <= H(i)^<i> for all i >= 1.
/// Admissibility is necessary, not sufficient, for Gorenstein Hilbert
/// functions (some admissible vectors admit no Gorenstein algebra).
bool is_o_sequence(const std::vector<int>& h);

/// Gotzmann-style maximal growth at position i: H(i+1) = H(i)^<i>.
bool max_growth_at(const std::vector<int>& h, int i);

/// Stanley's condition: symmetric H whose first-difference vector on the
/// first half is a nonnegative O-sequence.
bool si_check(const std::vector<int>& h);

/// Hilbert-scheme tangent certificate at [Spec S/I]: tangent_dim = dim I/I^2
/// (= dim S/I^2 - dim S/I for Gorenstein points).  The unobstructed flag
/// records tangent_dim == r*n only; smoothability is a separate input the
/// caller must assert (the definition presupposes a smoothable scheme).
struct HSchemeCertificate {
  int n = 0;
  long r = 0;  // degree of the scheme, dim_k S/I
  long tangent_dim = 0;
  bool tangent_minimal = false;  // tangent_dim == r*n
  bool gorenstein = true;
  std::vector<int> hilbert_of_I2;  // Gorenstein route only
};

HSchemeCertificate hs_tangent_dim(const DpPoly& f);
HSchemeCertificate hs_tangent_dim(const TruncatedIdeal& ideal);

/// The Gm-limit of Spec Apolar(f): the initial ideal of the annihilator.
/// Colength is preserved.
TruncatedIdeal gm_limit(const DpPoly& f);

}  // namespace apolar

#endif
