#include "apolar/monomial.hpp"

#include <gmpxx.h>

#include "apolar/errors.hpp"
#include "apolar/field.hpp"

namespace apolar {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < vars(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < vars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r(o);
  for (int i = 0; i < vars(); ++i) {
    r.e_[i] -= e_[i];
    if (r.e_[i] < 0) return std::nullopt;
  }
  return r;
}

Monomial Monomial::extended(int new_n) const {
  std::vector<int> e(e_);
  e.resize(new_n, 0);
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return e_ < o.e_;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int x : e_) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void enumerate(int n, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[pos] = remaining;
    out.push_back(Monomial(cur));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    enumerate(n, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> cur(n, 0);
  enumerate(n, 0, d, cur, out);
  // enumerate() emits larger leading exponents later, which is exactly the
  // increasing lex order within the fixed degree.
  return out;
}

Scalar dp_binomial(const FieldSpec& field, const Monomial& a, const Monomial& b) {
  mpz_class c = 1;
  for (int i = 0; i < a.vars(); ++i) {
    mpz_class bi;
    mpz_bin_uiui(bi.get_mpz_t(), a.exponent(i) + b.exponent(i), a.exponent(i));
    c *= bi;
  }
  return Scalar(field, mpq_class(c));
}

Scalar monomial_factorial(const FieldSpec& field, const Monomial& a) {
  mpz_class c = 1;
  for (int i = 0; i < a.vars(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), a.exponent(i));
    c *= f;
  }
  return Scalar(field, mpq_class(c));
}

}  // namespace apolar
