#include "apolar/actions.hpp"

#include <functional>

#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

AutomorphismData::AutomorphismData(int n, const FieldSpec& field)
    : n_(n), field_(field), d_(n, Operator::zero(n, field)) {}

AutomorphismData::AutomorphismData(std::vector<Operator> images_minus_identity)
    : n_(static_cast<int>(images_minus_identity.size())),
      field_(images_minus_identity.at(0).field()),
      d_(std::move(images_minus_identity)) {
  for (const auto& d : d_) {
    check_same_ambient(d, d_[0]);
    if (!d.is_zero() && d.order() < 1)
      throw InvalidAutomorphismError("difference has a constant term");
  }
}

Operator AutomorphismData::image(int i) const {
  return Operator::variable(n_, field_, i) + d_[i];
}

void AutomorphismData::set_difference(int i, Operator d) {
  if (!d.is_zero() && d.order() < 1)
    throw InvalidAutomorphismError("difference has a constant term");
  d_[i] = std::move(d);
}

Operator AutomorphismData::apply(const Operator& sigma) const {
  check_same_ambient(sigma, d_[0]);
  Operator out = Operator::zero(n_, field_);
  for (const auto& [m, c] : sigma.terms()) {
    Operator t = Operator::one(n_, field_) * c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m.exponent(i); ++k) t = t * image(i);
    out += t;
  }
  return out;
}

AutomorphismData AutomorphismData::compose(const AutomorphismData& o) const {
  AutomorphismData r(n_, field_);
  for (int i = 0; i < n_; ++i)
    r.set_difference(i, apply(o.image(i)) - Operator::variable(n_, field_, i));
  return r;
}

void AutomorphismData::validate() const {
  // Rank of the n x n matrix of linear parts of the images.
  Echelon ech;
  for (int i = 0; i < n_; ++i) {
    SparseVec row;
    Operator im = image(i);
    for (int j = n_ - 1; j >= 0; --j) {
      Scalar c = im.coefficient(Monomial::variable(n_, j));
      if (!c.is_zero()) row.emplace_back(j, c);
    }
    ech.insert(std::move(row));
  }
  if (ech.rank() != n_)
    throw InvalidAutomorphismError(
        "images have linearly dependent linear parts");
}

bool AutomorphismData::is_identity() const {
  for (const auto& d : d_)
    if (!d.is_zero()) return false;
  return true;
}

namespace {

void check_char(const FieldSpec& field, int bound, const char* what) {
  unsigned long p = field.characteristic();
  if (p != 0 && static_cast<long>(p) <= bound)
    throw UnsupportedCharacteristicError(
        std::string(what) + " requires char 0 or char > " +
        std::to_string(bound) + ", got char " + std::to_string(p));
}

// Multi-indices a with sum_i a_i * w_i <= bound, skipping indices where the
// weight is "infinite" (zero operator).
void enumerate_weighted(const std::vector<int>& weights, int bound, int pos,
                        std::vector<int>& cur, int used,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == static_cast<int>(weights.size())) {
    fn(cur);
    return;
  }
  if (weights[pos] < 0) {  // component must stay zero
    cur[pos] = 0;
    enumerate_weighted(weights, bound, pos + 1, cur, used, fn);
    return;
  }
  for (int a = 0; used + a * weights[pos] <= bound; ++a) {
    cur[pos] = a;
    enumerate_weighted(weights, bound, pos + 1, cur, used + a * weights[pos], fn);
  }
  cur[pos] = 0;
}

}  // namespace

DpPoly apply_dual_automorphism(const AutomorphismData& phi, const DpPoly& f) {
  check_same_ambient(phi.differences()[0], f);
  if (f.is_zero()) return f;
  // Linear automorphisms act by classical substitution in any
  // characteristic; the guard is needed only for genuinely nonlinear ones.
  bool nonlinear = false;
  for (const auto& d : phi.differences())
    if (!d.is_zero() && d.degree() >= 2) nonlinear = true;
  if (nonlinear) check_char(f.field(), f.degree(), "apply_dual_automorphism");
  phi.validate();

  int n = f.vars();
  const FieldSpec& field = f.field();
  int d = f.degree();

  std::vector<int> weights(n);
  for (int i = 0; i < n; ++i) {
    const Operator& di = phi.differences()[i];
    weights[i] = di.is_zero() ? -1 : di.order();
  }

  DpPoly out(n, field);
  std::vector<int> cur(n, 0);
  enumerate_weighted(weights, d, 0, cur, 0, [&](const std::vector<int>& a) {
    DpPoly g = f;
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      for (int k = 0; k < a[i]; ++k) {
        g = contract(phi.differences()[i], g);
        if (g.is_zero()) {
          dead = true;
          break;
        }
      }
    }
    if (dead) return;
    out += DpPoly::dp_monomial(n, field, Monomial(a)) * g;
  });
  return out;
}

DpPoly apply_dual_derivation(const std::vector<Operator>& d, const DpPoly& f) {
  DpPoly out(f.vars(), f.field());
  for (int i = 0; i < f.vars(); ++i) {
    check_same_ambient(d[i], f);
    out += contract(d[i], f).x_mul(i);
  }
  return out;
}

DpPoly translate(const DpPoly& f, const std::vector<Scalar>& w, int up_to) {
  if (static_cast<int>(w.size()) != f.vars())
    throw MismatchError("translation vector length differs from variable count");
  if (up_to < f.degree())
    throw Error("translate: degree bound below deg f");
  check_char(f.field(), up_to, "translate");

  int n = f.vars();
  const FieldSpec& field = f.field();
  DpPoly expw(n, field);
  for (int e = 0; e <= up_to; ++e) {
    for (const auto& m : monomials_of_degree(n, e)) {
      Scalar c = Scalar::one(field);
      for (int i = 0; i < n && !c.is_zero(); ++i)
        for (int k = 0; k < m.exponent(i); ++k) c *= w[i];
      expw.add_term(m, c);
    }
  }
  return (f * expw).truncated(up_to);
}

}  // namespace apolar
