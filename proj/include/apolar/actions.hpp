#ifndef APOLAR_ACTIONS_HPP
#define APOLAR_ACTIONS_HPP

#include <vector>

#include "apolar/poly.hpp"

namespace apolar {

/// An automorphism phi of the power series ring S, stored through the
/// differences D_i = phi(dx_i) - dx_i, each of order >= 1.  phi is a valid
/// automorphism iff the linear parts of dx_i + D_i are independent.
class AutomorphismData {
 public:
  AutomorphismData(int n, const FieldSpec& field);
  explicit AutomorphismData(std::vector<Operator> images_minus_identity);

  static AutomorphismData identity(int n, const FieldSpec& field) {
    return AutomorphismData(n, field);
  }

  int vars() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Operator>& differences() const { return d_; }
  /// phi(dx_i) = dx_i + D_i.
  Operator image(int i) const;
  void set_difference(int i, Operator d);

  /// phi applied to an operator (substitute dx_i -> image(i)).
  Operator apply(const Operator& sigma) const;

  /// Composition: (a.compose(b))(dx_i) = a(b(dx_i)).
  AutomorphismData compose(const AutomorphismData& o) const;

  /// Throws InvalidAutomorphismError when linear parts are dependent.
  void validate() const;

  bool is_identity() const;

 private:
  int n_;
  FieldSpec field_;
  std::vector<Operator> d_;
};

/// The dual action phi^v(f) = sum_a x^[a] * (D^a -| f).  Requires char 0 or
/// char > deg f.  Ann(result) = phi(Ann(f)).
DpPoly apply_dual_automorphism(const AutomorphismData& phi, const DpPoly& f);

/// The dual of the derivation D with D(dx_i) = D_i:
/// D^v(f) = sum_i x_i * (D_i -| f).
DpPoly apply_dual_derivation(const std::vector<Operator>& d, const DpPoly& f);

/// Truncation to degree up_to of f * exp_dp(sum w_i x_i), where
/// exp_dp(w) = sum_a w^a x^[a].  The annihilator of the result is the
/// w-translate of Ann(f) below the degree bound.  Requires char 0 or
/// char > up_to, and up_to >= deg f.
DpPoly translate(const DpPoly& f, const std::vector<Scalar>& w, int up_to);

}  // namespace apolar

#endif
