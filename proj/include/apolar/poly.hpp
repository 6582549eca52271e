#ifndef APOLAR_POLY_HPP
#define APOLAR_POLY_HPP

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

/// Degree of the zero polynomial: a sentinel below every integer.
constexpr int kDegNegInf = INT_MIN;

namespace detail {

/// Shared term-map plumbing of DpPoly and Operator.  Terms are kept with
/// nonzero coefficients only, ordered leading-first.
template <class Derived>
class TermPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialGreater>;

  TermPoly(int n, const FieldSpec& field) : n_(n), field_(field) {}

  int vars() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Max term degree; kDegNegInf for the zero polynomial.
  int degree() const {
    return terms_.empty() ? kDegNegInf : terms_.begin()->first.degree();
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return self();
  }
  Derived& operator-=(const Derived& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return self();
  }
  Derived operator+(const Derived& o) const { Derived r(self()); r += o; return r; }
  Derived operator-(const Derived& o) const { Derived r(self()); r -= o; return r; }
  Derived operator-() const {
    Derived r(self());
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Derived operator*(const Scalar& s) const {
    Derived r(n_, field_);
    if (s.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  /// The degree-d homogeneous part.
  Derived homogeneous_component(int d) const {
    Derived r(n_, field_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  /// Parts of degree <= d.
  Derived truncated(int d) const {
    Derived r(n_, field_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= d) r.terms_.emplace(m, c);
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Leading term under the global order.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  /// Same polynomial over n more trailing variables.
  Derived extended(int new_n) const {
    Derived r(new_n, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(new_n), c);
    return r;
  }

  bool operator==(const Derived& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const Derived& o) const { return !(*this == o.self()); }

  void check_compatible(const TermPoly& o) const;

 protected:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  int n_;
  FieldSpec field_;
  TermMap terms_;
};

}  // namespace detail

class Operator;

/// An element of the divided power ring P = k_dp[x1..xn]: a finite sum of
/// terms c * x^[a].  Multiplication follows x^[a] * x^[b] = C(a+b,a) x^[a+b].
class DpPoly : public detail::TermPoly<DpPoly> {
 public:
  DpPoly(int n, const FieldSpec& field) : TermPoly(n, field) {}

  static DpPoly zero(int n, const FieldSpec& f) { return DpPoly(n, f); }
  static DpPoly constant(int n, const FieldSpec& f, const Scalar& c) {
    DpPoly p(n, f);
    p.add_term(Monomial::unit(n), c);
    return p;
  }
  /// The basis element x^[a].
  static DpPoly dp_monomial(int n, const FieldSpec& f, const Monomial& a) {
    DpPoly p(n, f);
    p.add_term(a, Scalar::one(f));
    return p;
  }

  DpPoly operator*(const DpPoly& o) const;
  DpPoly operator*(const Scalar& s) const { return TermPoly::operator*(s); }

  /// Multiplication by the variable x_i: x^[a] -> (a_i+1) x^[a+e_i].
  DpPoly x_mul(int i) const;

  std::string str() const;
};

/// An element of the dual polynomial ring S = k[d1..dn] acting on P by
/// contraction.  Ordinary polynomial multiplication.
class Operator : public detail::TermPoly<Operator> {
 public:
  Operator(int n, const FieldSpec& field) : TermPoly(n, field) {}

  static Operator zero(int n, const FieldSpec& f) { return Operator(n, f); }
  static Operator one(int n, const FieldSpec& f) {
    Operator p(n, f);
    p.add_term(Monomial::unit(n), Scalar::one(f));
    return p;
  }
  static Operator constant(int n, const FieldSpec& f, const Scalar& c) {
    Operator p(n, f);
    p.add_term(Monomial::unit(n), c);
    return p;
  }
  static Operator monomial(int n, const FieldSpec& f, const Monomial& a) {
    Operator p(n, f);
    p.add_term(a, Scalar::one(f));
    return p;
  }
  static Operator variable(int n, const FieldSpec& f, int i) {
    return monomial(n, f, Monomial::variable(n, i));
  }

  Operator operator*(const Operator& o) const;
  Operator operator*(const Scalar& s) const { return TermPoly::operator*(s); }
  Operator pow(int k) const;

  /// Minimal term degree; order 0 iff invertible in the power series ring.
  /// INT_MAX for the zero operator.
  int order() const;

  /// Formal partial derivative with respect to the i-th dual variable.
  Operator partial_derivative(int i) const;

  std::string str() const;
};

/// Throws MismatchError unless both live over the same n and field.
template <class A, class B>
void check_same_ambient(const A& a, const B& b) {
  if (a.vars() != b.vars())
    throw MismatchError("variable count mismatch: " + std::to_string(a.vars()) +
                        " vs " + std::to_string(b.vars()));
  if (a.field() != b.field())
    throw MismatchError("field mismatch: " + a.field().str() + " vs " +
                        b.field().str());
}

/// The contraction action sigma -| f.  Monomial rule:
/// d^a -| x^[b] = x^[b-a] when b >= a componentwise, else 0.
DpPoly contract(const Operator& sigma, const DpPoly& f);

/// The pairing <sigma, f>: the coefficient of the matching monomials,
/// i.e. the constant term of sigma -| f.
Scalar pairing(const Operator& sigma, const DpPoly& f);

/// Char-0 dictionary: the ring isomorphism Omega sends x^[a] to x^a / a!.
/// omega_image re-expresses a DpPoly by the coefficients of its Omega image
/// (coefficient of x^a), from_omega_image inverts that.  Both require
/// char 0 or char > deg.
DpPoly omega_image(const DpPoly& f);
DpPoly from_omega_image(const DpPoly& f);

}  // namespace apolar

#endif
