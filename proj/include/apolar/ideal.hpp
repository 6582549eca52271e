#ifndef APOLAR_IDEAL_HPP
#define APOLAR_IDEAL_HPP

#include <memory>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// An ideal of S with finite-colength semantics, represented exactly by its
/// image in S/m^D: a triangular echelon basis of the span of all its
/// elements of degree < D.  The represented ideal is (generators)*S + m^D.
///
/// The nilpotency bound N is the least exponent with m^N inside the ideal,
/// certified from the representation (N == D when no certificate exists at
/// this truncation; quotient dimensions then raise PrecisionError).
class TruncatedIdeal {
 public:
  /// Build from generators inside S/m^D by degreewise saturation.
  static TruncatedIdeal from_generators(std::vector<Operator> gens, int trunc_exp);

  int vars() const { return n_; }
  const FieldSpec& field() const { return field_; }
  /// The truncation exponent D.
  int truncation() const { return trunc_; }
  /// Least certified N with m^N inside the ideal; == truncation() when
  /// uncertified.
  int nilpotency_bound() const { return nilp_; }
  bool nilpotency_certified() const { return nilp_ < trunc_; }

  /// Minimal-by-degree generating set, pivots chosen under the global
  /// monomial order (deterministic).
  const std::vector<Operator>& generators() const { return gens_; }

  bool contains(const Operator& sigma) const;
  bool contains(const TruncatedIdeal& other) const;
  bool equals(const TruncatedIdeal& other) const;

  /// Residue of sigma modulo the ideal (canonical, truncated below D).
  Operator reduce(const Operator& sigma) const;

  /// dim_k S/I.  Requires a certified nilpotency bound.
  long quotient_dimension() const;
  /// Graded Hilbert function of gr(S/I) (by the degree filtration),
  /// trailing zeros trimmed.  Requires a certified nilpotency bound.
  std::vector<int> quotient_hilbert() const;

  /// The ideal of top degree forms of all elements.
  TruncatedIdeal initial_ideal() const;

  /// Recompute from the generators at a larger truncation.
  TruncatedIdeal reembedded(int new_trunc) const;
  /// Project onto a smaller truncation.
  TruncatedIdeal restricted(int new_trunc) const;

  bool is_homogeneous() const;

  const Echelon& echelon() const { return ech_; }
  const MonomialTable& table() const { return *table_; }

 private:
  TruncatedIdeal(int n, FieldSpec field, int trunc);
  void saturate(std::vector<SparseVec> seeds);
  void detect_nilpotency();
  void extract_generators();
  void check_closure() const;
  SparseVec var_mul(const SparseVec& v, int k) const;

  int n_;
  FieldSpec field_;
  int trunc_;
  int nilp_;
  std::shared_ptr<const MonomialTable> table_;
  Echelon ech_;
  std::vector<Operator> gens_;
};

enum class IdealCombineKind { sum, product, intersection };

/// Sum, product or intersection.  The product re-embeds both operands from
/// their generators at N_I + N_J + 1 when both bounds are certified.
TruncatedIdeal ideal_combine(IdealCombineKind kind, const TruncatedIdeal& a,
                             const TruncatedIdeal& b);

/// The colon ideal (I : sigma) = { tau : tau*sigma in I }, inside S/m^D.
TruncatedIdeal colon(const TruncatedIdeal& ideal, const Operator& sigma);

inline long quotient_dimension(const TruncatedIdeal& ideal) {
  return ideal.quotient_dimension();
}
inline std::vector<int> hilbert_function_of_quotient(const TruncatedIdeal& ideal) {
  return ideal.quotient_hilbert();
}
inline TruncatedIdeal initial_ideal(const TruncatedIdeal& ideal) {
  return ideal.initial_ideal();
}

}  // namespace apolar

#endif
