#include <doctest.h>

#include "apolar/apolar.hpp"
#include "apolar/parse.hpp"
#include "test_support.hpp"

using namespace apolar;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

DpPoly p(const char* s, int n) { return parse_poly(s, n, kQ); }
Operator op(const char* s, int n) { return parse_operator(s, n, kQ); }
}  // namespace

TEST_CASE("annihilator worked examples") {
  // kk[[x,y]]/(xy, x^2 - y^2)
  TruncatedIdeal a = annihilator(p("x1^[2]+x2^[2]", 2));
  CHECK(a.contains(op("dx1*dx2", 2)));
  CHECK(a.contains(op("dx1^2 - dx2^2", 2)));
  CHECK(a.equals(TruncatedIdeal::from_generators(
      {op("dx1*dx2", 2), op("dx1^2 - dx2^2", 2)}, a.truncation())));

  // monomial dual generators give complete intersections
  TruncatedIdeal b = annihilator(p("x1^[2]*x2^[3]", 2));
  CHECK(b.equals(TruncatedIdeal::from_generators(
      {op("dx1^3", 2), op("dx2^4", 2)}, b.truncation())));

  // f = x1^[2] + x2^[3] + x3^[3] (k = 1, n = 3 of the cubic family):
  // H = (1, n, n-k, 1) and the listed generators annihilate
  DpPoly f = p("x1^[2] + x2^[3] + x3^[3]", 3);
  CHECK(hilbert_function(f) == std::vector<int>{1, 3, 2, 1});
  TruncatedIdeal c = annihilator(f);
  for (const char* g : {"dx1*dx2", "dx1*dx3", "dx2*dx3", "dx2^3 - dx3^3",
                        "dx1^2 - dx2^3"})
    CHECK(c.contains(op(g, 3)));
}

TEST_CASE("annihilator rejects zero") {
  CHECK_THROWS_AS(annihilator(DpPoly::zero(2, kQ)), ZeroInputError);
}

TEST_CASE("hilbert function worked examples") {
  CHECK(hilbert_function(p("x1^[5]+x2^[4]+x3^[3]", 3)) ==
        std::vector<int>{1, 3, 3, 2, 1, 1});
  CHECK(hilbert_function(p("x1^[3]*x2+x3^[3]+x4^[2]", 4)) ==
        std::vector<int>{1, 4, 3, 2, 1});
  CHECK(hilbert_function(p("1", 2)) == std::vector<int>{1});
}

TEST_CASE("hilbert function symmetry for homogeneous forms") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 2 + rep % 3;
    DpPoly f = testing::random_poly(rng, n, kQ, 4).homogeneous_component(4);
    if (f.is_zero()) continue;
    std::vector<int> h = hilbert_function(f);
    int d = f.degree();
    for (int i = 0; i <= d; ++i) CHECK(h[i] == h[d - i]);
  }
}

TEST_CASE("H(1) counts essential variables") {
  // f uses two of four variables
  DpPoly f = p("x1^[3]*x2 + x2^[2]", 4);
  CHECK(hilbert_function(f)[1] == 2);
  // a disguised one-variable polynomial: the divided square of x1 + x2
  DpPoly g = p("x1^[2] + x1*x2 + x2^[2]", 2);
  CHECK(hilbert_function(g)[1] == 1);
}

TEST_CASE("socle dimensions") {
  TruncatedIdeal m2 = TruncatedIdeal::from_generators(
      {op("dx1^2", 2), op("dx1*dx2", 2), op("dx2^2", 2)}, 4);
  CHECK(socle_dimension(m2) == 2);  // smallest non-Gorenstein
  CHECK(socle_dimension(annihilator(p("x1^[2]+x2^[2]", 2))) == 1);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    DpPoly f = testing::random_nonzero_poly(rng, 2 + rep % 2, kQ, 3);
    CHECK(socle_dimension(annihilator(f)) == 1);
  }
}

TEST_CASE("catalecticant ranks") {
  DpPoly f444 = p("x1^[4]+x2^[4]+x3^[4]", 3);
  CHECK(catalecticant(f444, 2).rank == 3);
  for (int a = 0; a <= 4; ++a) CHECK(catalecticant(p("x1^[4]", 2), a).rank == 1);
  // rank Cat_a(F) = H(a) and the transpose pairing
  std::vector<int> h = hilbert_function(f444);
  for (int a = 0; a <= 4; ++a) {
    CHECK(catalecticant(f444, a).rank == h[a]);
    CHECK(catalecticant(f444, a).rank == catalecticant(f444, 4 - a).rank);
  }
  CHECK_THROWS_AS(catalecticant(p("x1^[2]+x2", 2), 1), Error);
}

TEST_CASE("generic cubic in 6 variables has middle rank 6") {
  DpPoly f = p("x1*x2*x4 - x1*x5^[2] + x2*x3^[2] + x3*x5*x6 + x4*x6^[2]", 6);
  CHECK(hilbert_function(f) == std::vector<int>{1, 6, 6, 1});
  CHECK(catalecticant(f, 1).rank == 6);
}

TEST_CASE("secant membership") {
  std::mt19937_64 rng(9);
  // sums of r independent d-th powers pass the rank test, d >= 2r, r <= 4
  for (int r = 1; r <= 4; ++r) {
    int d = 2 * r;
    int n = r;  // independence forces n >= r
    DpPoly f(n, kQ);
    for (int j = 0; j < r; ++j) {
      DpPoly ell(n, kQ);
      for (int i = 0; i < n; ++i) {
        long c = (i == j) ? 1 : (i + j) % 3 - 1;
        if (c != 0) ell.add_term(Monomial::variable(n, i), Scalar(kQ, c));
      }
      f += testing::dp_power_of_linear(ell, d);
    }
    SecantVerdict v = secant_membership(f, r);
    CHECK(v.rank_at_most_r);
    CHECK(v.proven_sharp);
  }
  // rank 3 > 2 for the Fermat quartic
  SecantVerdict w = secant_membership(p("x1^[4]+x2^[4]+x3^[4]", 3), 2);
  CHECK_FALSE(w.rank_at_most_r);
  CHECK(w.middle_rank == 3);
  // outside the regime the verdict is flagged
  DpPoly q4 = p("x1^[4]+x2^[4]+x3^[4]+x1*x2*x3^[2]", 3);
  SecantVerdict u = secant_membership(q4, 4);
  CHECK_FALSE(u.proven_sharp);  // d = 4 < 2r = 8
  CHECK(u.middle_rank == hilbert_function(q4)[2]);
  CHECK(u.rank_at_most_r == (u.middle_rank <= 4));
}

TEST_CASE("apolar summary bundles the invariants") {
  ApolarSummary s = apolar_summary(p("x1^[5]+x2^[4]+x3^[3]", 3));
  CHECK(s.degree == 11);
  CHECK(s.socle_degree == 5);
  CHECK(s.hilbert == std::vector<int>{1, 3, 3, 2, 1, 1});
  CHECK(s.ann_generators.size() == 6);
}
