#include <doctest.h>

#include "apolar/parse.hpp"
#include "apolar/poly.hpp"
#include "test_support.hpp"

using namespace apolar;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

DpPoly p(const char* s, int n, const FieldSpec& f = kQ) {
  return parse_poly(s, n, f);
}
Operator op(const char* s, int n, const FieldSpec& f = kQ) {
  return parse_operator(s, n, f);
}
}  // namespace

TEST_CASE("divided power multiplication") {
  // x1 * x1 = 2 x1^[2], forced by the defining binomial
  CHECK(p("x1", 1) * p("x1", 1) == p("2*x1^[2]", 1));
  // x1^[2] * x1^[3] = C(5,2) x1^[5]
  CHECK(p("x1^[2]", 1) * p("x1^[3]", 1) == p("10*x1^[5]", 1));
  // over F_2 the square of a variable vanishes
  FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK((p("x1", 1, f2) * p("x1", 1, f2)).is_zero());
}

TEST_CASE("dp ring axioms on small inputs") {
  DpPoly a = p("x1^[2] + x2", 2), b = p("x1 - x2^[3]", 2), c = p("1 + x1*x2", 2);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * DpPoly::constant(2, kQ, Scalar::one(kQ)) == a);
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("contraction monomial rule") {
  CHECK(contract(op("dx1^2", 1), p("x1^[5]", 1)) == p("x1^[3]", 1));
  // paper's example of partials
  CHECK(contract(op("dx3", 4), p("x1^[3]*x2 + x3^[3] + x4^[2]", 4)) ==
        p("x3^[2]", 4));
  CHECK(contract(op("dx1*dx2", 3), p("x3^[2]", 3)).is_zero());
}

TEST_CASE("contraction is an S-module action") {
  Operator s = op("dx1 + dx2^2", 2), t = op("dx2 - 2*dx1", 2);
  DpPoly f = p("x1^[3]*x2 + x2^[4] - x1", 2);
  CHECK(contract(s * t, f) == contract(s, contract(t, f)));
}

TEST_CASE("degree of zero is the sentinel") {
  DpPoly z = DpPoly::zero(2, kQ);
  CHECK(z.degree() == kDegNegInf);
  CHECK(kDegNegInf < -1000000);
  CHECK(Operator::zero(2, kQ).order() == INT_MAX);
  CHECK(op("1 + dx1", 2).order() == 0);  // invertible
  CHECK(op("dx1*dx2 + dx1^3", 2).order() == 2);
}

namespace {
// ordinary polynomial multiplication on coefficient data, for the Omega
// cross-check (Operator multiplies without divided-power binomials)
Operator as_plain(const DpPoly& f) {
  Operator out(f.vars(), f.field());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  return out;
}
}  // namespace

TEST_CASE("omega is a ring isomorphism in characteristic zero") {
  DpPoly f = p("x1^[3] + 2*x1*x2 - x2^[2]", 2);
  CHECK(from_omega_image(omega_image(f)) == f);
  // Omega(f * g) = Omega(f) Omega(g) with the product on the right taken in
  // the ordinary polynomial ring
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + rep % 3;
    DpPoly a = apolar::testing::random_poly(rng, n, kQ, 3);
    DpPoly b = apolar::testing::random_poly(rng, n, kQ, 3);
    CHECK(as_plain(omega_image(a * b)) ==
          as_plain(omega_image(a)) * as_plain(omega_image(b)));
  }
}

TEST_CASE("homogeneous parts and truncation") {
  DpPoly f = p("x1^[4] + x1^[2]*x2 + x1 - 3", 2);
  CHECK(f.homogeneous_component(3) == p("x1^[2]*x2", 2));
  CHECK(f.truncated(1) == p("x1 - 3", 2));
  CHECK(f.is_homogeneous() == false);
  CHECK(p("x1^[2]+x1*x2", 2).is_homogeneous());
}

TEST_CASE("operator partial derivative") {
  CHECK(op("dx1^2", 2).partial_derivative(0) == op("2*dx1", 2));
  CHECK(op("dx1^2", 2).partial_derivative(1).is_zero());
  CHECK(op("dx1^3*dx2", 2).partial_derivative(1) == op("dx1^3", 2));
}

TEST_CASE("ambient mismatches are rejected") {
  CHECK_THROWS_AS(p("x1", 1) + p("x1", 2), MismatchError);
  CHECK_THROWS_AS(contract(op("dx1", 2), p("x1", 1)), MismatchError);
  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK_THROWS_AS(p("x1", 1) * p("x1", 1, f5), MismatchError);
}
