#include "apolar/field.hpp"

namespace apolar {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime(p))
    throw Error("prime field modulus must be prime, got " + std::to_string(p));
  FieldSpec f;
  f.p_ = p;
  return f;
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& v)
    : p_(f.characteristic()), q_(v) {
  q_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = q_.get_den();
  mpz_class num = q_.get_num();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("coefficient not in field: denominator " + den.get_str() +
                  " is not invertible mod " + p.get_str());
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  q_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.q_ = -r.q_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  q_ += o.q_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  q_ -= o.q_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  q_ *= o.q_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r(*this);
  if (p_ == 0) {
    r.q_ = 1 / q_;
  } else {
    mpz_class p(static_cast<unsigned long>(p_)), inv;
    mpz_class num = q_.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("non-invertible residue");
    r.q_ = mpq_class(inv);
    r.reduce();
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  *this *= o.inverse();
  return *this;
}

std::string Scalar::str() const { return q_.get_str(); }

}  // namespace apolar
