#include "apolar/poly.hpp"

#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

namespace detail {

template <class Derived>
void TermPoly<Derived>::check_compatible(const TermPoly& o) const {
  if (n_ != o.n_)
    throw MismatchError("variable count mismatch: " + std::to_string(n_) +
                        " vs " + std::to_string(o.n_));
  if (field_ != o.field_)
    throw MismatchError("field mismatch: " + field_.str() + " vs " +
                        o.field_.str());
}

template class TermPoly<DpPoly>;
template class TermPoly<Operator>;

}  // namespace detail

DpPoly DpPoly::operator*(const DpPoly& o) const {
  check_compatible(o);
  DpPoly r(n_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma * mb, ca * cb * dp_binomial(field_, ma, mb));
  return r;
}

DpPoly DpPoly::x_mul(int i) const {
  DpPoly r(n_, field_);
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m * Monomial::variable(n_, i);
    r.add_term(m2, c * Scalar(field_, m.exponent(i) + 1));
  }
  return r;
}

Operator Operator::operator*(const Operator& o) const {
  check_compatible(o);
  Operator r(n_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Operator Operator::pow(int k) const {
  Operator r = Operator::one(n_, field_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

int Operator::order() const {
  if (terms_.empty()) return INT_MAX;
  int o = INT_MAX;
  for (const auto& [m, c] : terms_) o = std::min(o, m.degree());
  return o;
}

Operator Operator::partial_derivative(int i) const {
  Operator r(n_, field_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(i);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[i] -= 1;
    r.add_term(Monomial(std::move(exps)), c * Scalar(field_, e));
  }
  return r;
}

DpPoly contract(const Operator& sigma, const DpPoly& f) {
  check_same_ambient(sigma, f);
  DpPoly r(f.vars(), f.field());
  for (const auto& [ms, cs] : sigma.terms())
    for (const auto& [mf, cf] : f.terms())
      if (auto q = ms.divide(mf)) r.add_term(*q, cs * cf);
  return r;
}

Scalar pairing(const Operator& sigma, const DpPoly& f) {
  check_same_ambient(sigma, f);
  Scalar acc = Scalar::zero(f.field());
  for (const auto& [ms, cs] : sigma.terms()) {
    auto it = f.terms().find(ms);
    if (it != f.terms().end()) acc += cs * it->second;
  }
  return acc;
}

namespace {

void check_char_for_factorials(const DpPoly& f, const char* what) {
  unsigned long p = f.field().characteristic();
  if (p != 0 && static_cast<long>(p) <= f.degree())
    throw UnsupportedCharacteristicError(
        std::string(what) + " requires char 0 or char > deg, got char " +
        std::to_string(p) + " and degree " + std::to_string(f.degree()));
}

template <class P>
std::string poly_str(const P& p, const char* var_prefix, bool divided) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    std::ostringstream mono;
    bool have_var = false;
    for (int i = 0; i < m.vars(); ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (have_var) mono << "*";
      mono << var_prefix << (i + 1);
      if (e > 1) {
        if (divided)
          mono << "^[" << e << "]";
        else
          mono << "^" << e;
      } else if (divided && e == 1) {
        // bare variable means first divided power
      }
      have_var = true;
    }
    if (!have_var) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace

std::string DpPoly::str() const { return poly_str(*this, "x", true); }

std::string Operator::str() const { return poly_str(*this, "dx", false); }

DpPoly omega_image(const DpPoly& f) {
  check_char_for_factorials(f, "omega_image");
  DpPoly r(f.vars(), f.field());
  for (const auto& [m, c] : f.terms())
    r.add_term(m, c / monomial_factorial(f.field(), m));
  return r;
}

DpPoly from_omega_image(const DpPoly& f) {
  check_char_for_factorials(f, "from_omega_image");
  DpPoly r(f.vars(), f.field());
  for (const auto& [m, c] : f.terms())
    r.add_term(m, c * monomial_factorial(f.field(), m));
  return r;
}

}  // namespace apolar
