#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "apolar/errors.hpp"

namespace apolar {

/// The base field: exact rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() : p_(0) {}

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime_field(unsigned long p);

  /// 0 means rationals, otherwise the (prime) characteristic.
  unsigned long characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  std::string str() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
  }

 private:
  unsigned long p_;
};

/// An exact field element.  Rational values are arbitrary-precision
/// fractions; F_p values are residues in [0, p).  Arithmetic between
/// scalars of different fields throws MismatchError.
class Scalar {
 public:
  Scalar() : p_(0) {}
  Scalar(const FieldSpec& f, long v) : p_(f.characteristic()), q_(v) { reduce(); }
  Scalar(const FieldSpec& f, const mpq_class& v);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  FieldSpec field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p_);
  }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator+(const Scalar& o) const { Scalar r(*this); r += o; return r; }
  Scalar operator-(const Scalar& o) const { Scalar r(*this); r -= o; return r; }
  Scalar operator*(const Scalar& o) const { Scalar r(*this); r *= o; return r; }
  Scalar operator/(const Scalar& o) const { Scalar r(*this); r /= o; return r; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// The underlying rational value (for F_p, the canonical residue).
  const mpq_class& rational() const { return q_; }

  /// "3", "-2/5", ... exact decimal string.
  std::string str() const;

 private:
  void reduce();
  void check_field(const Scalar& o) const {
    if (p_ != o.p_)
      throw MismatchError("scalar field mismatch: " + field().str() + " vs " +
                          o.field().str());
  }

  unsigned long p_;
  mpq_class q_;
};

}  // namespace apolar

#endif
