#ifndef APOLAR_APOLAR_HPP
#define APOLAR_APOLAR_HPP

#include <vector>

#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Ann(f) inside S/m^D with the default bound D = deg f + 2 (enough for all
/// single-ideal uses; callers needing I^2 re-embed).  Computed degreewise as
/// the kernel of sigma -> sigma -| f.
TruncatedIdeal annihilator(const DpPoly& f);
TruncatedIdeal annihilator(const DpPoly& f, int trunc_exp);

/// Common annihilator of several polynomials (intersection of the single
/// annihilators).
TruncatedIdeal annihilator_of_set(const std::vector<DpPoly>& fs, int trunc_exp);

/// Hilbert function of Apolar(f) via spaces of partials:
/// H(i) = dim(Sf cap P_{<=i}) - dim(Sf cap P_{<=i-1}).
std::vector<int> hilbert_function(const DpPoly& f);

/// dim_k of Apolar(f) = dim Sf.
long apolar_degree(const DpPoly& f);

/// dim_k { a in S/I : m*a in I }: 1 exactly for Gorenstein quotients.
int socle_dimension(const TruncatedIdeal& ideal);

/// The matrix of the contraction pairing S_a x P_d -> P_{d-a} against
/// monomial bases, for homogeneous F of degree d.
struct Catalecticant {
  int a = 0;
  std::vector<Monomial> row_labels;            // monomials of P_{d-a}
  std::vector<Monomial> col_labels;            // monomials of S_a
  std::vector<std::vector<Scalar>> matrix;     // rows x cols
  int rank = 0;
};

Catalecticant catalecticant(const DpPoly& F, int a);

/// Rank test on the middle catalecticant: true iff
/// rank Cat_{floor(d/2)}(F) <= r.  proven_sharp is set when d >= 2r and
/// r < 14, the regime where the rank condition cuts out the secant variety
/// set-theoretically.
struct SecantVerdict {
  bool rank_at_most_r = false;
  int middle_rank = 0;
  bool proven_sharp = false;
};

SecantVerdict secant_membership(const DpPoly& F, int r);

/// Invariants of Apolar(f) bundled for reports.
struct ApolarSummary {
  DpPoly f;
  long degree = 0;           // dim_k Apolar(f)
  int socle_degree = 0;      // = deg f
  std::vector<int> hilbert;
  std::vector<Operator> ann_generators;
};

ApolarSummary apolar_summary(const DpPoly& f);

/// Echelon basis of the space of partials m^order * f, with filtered
/// dimension profile; the shared engine behind hilbert_function and the
/// symmetric decomposition.
Echelon partials_space(const DpPoly& f, int min_order,
                       const MonomialTable& table);

}  // namespace apolar

#endif
