#ifndef APOLAR_PROPERTY_SUITES_HPP
#define APOLAR_PROPERTY_SUITES_HPP

#include <optional>
#include <sstream>
#include <string>

#include "apolar/apolar.hpp"
#include "apolar/decomp.hpp"
#include "apolar/ideal.hpp"
#include "apolar/raysum.hpp"
#include "test_support.hpp"

// Randomized property suites shared between the unit tests (small case
// counts) and the acceptance run (>= 500 cases each).  Every suite returns
// nullopt on success or a description of the first failing case.

namespace apolar::testing {

inline FieldSpec suite_field(int which) {
  switch (which % 4) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::prime_field(2);
    case 2: return FieldSpec::prime_field(5);
    default: return FieldSpec::prime_field(13);
  }
}

/// sigma -| (x_i f) - x_i (sigma -| f) = (d sigma / d dx_i) -| f, all fields.
inline std::optional<std::string> commutator_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int rep = 0; rep < cases; ++rep) {
    FieldSpec field = suite_field(rep);
    int n = 1 + rep % 3;
    DpPoly f = random_poly(rng, n, field, 4);
    Operator s = random_operator(rng, n, field, 3);
    for (int i = 0; i < n; ++i) {
      DpPoly lhs = contract(s, f.x_mul(i)) - contract(s, f).x_mul(i);
      DpPoly rhs = contract(s.partial_derivative(i), f);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "commutator fails at case " << rep << " over " << field.str();
        return os.str();
      }
    }
  }
  return std::nullopt;
}

/// contract(sigma*tau, f) = contract(sigma, contract(tau, f)).
inline std::optional<std::string> action_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int rep = 0; rep < cases; ++rep) {
    FieldSpec field = suite_field(rep + 1);
    int n = 1 + rep % 3;
    DpPoly f = random_poly(rng, n, field, 4);
    Operator s = random_operator(rng, n, field, 2);
    Operator t = random_operator(rng, n, field, 2);
    if (contract(s * t, f) != contract(s, contract(t, f)))
      return "contraction action fails at case " + std::to_string(rep);
  }
  return std::nullopt;
}

/// Row symmetry and column sums of the symmetric decomposition.
inline std::optional<std::string> decomposition_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int rep = 0; rep < cases; ++rep) {
    int n = 1 + rep % 3;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 4);
    SymDecomp dec = symmetric_decomposition(f);
    std::vector<int> h = hilbert_function(f);
    int d = dec.socle_degree;
    int nrows = static_cast<int>(dec.rows.size());
    for (int a = 0; a < nrows; ++a)
      for (int i = 0; i <= d - a; ++i) {
        if (dec.rows[a][i] < 0)
          return "negative decomposition entry at case " + std::to_string(rep);
        if (dec.rows[a][i] != dec.rows[a][d - a - i])
          return "row symmetry fails at case " + std::to_string(rep);
      }
    for (int i = 0; i <= d; ++i) {
      int col = 0;
      for (int a = 0; a < nrows; ++a)
        if (i <= d - a) col += dec.rows[a][i];
      if (col != h[i])
        return "column sum fails at case " + std::to_string(rep);
    }
  }
  return std::nullopt;
}

/// Tail perturbations below degree d - delta keep rows a < delta.
inline std::optional<std::string> perturbation_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    int n = 1 + done % 3;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 4);
    int d = f.degree();
    if (d < 2) continue;
    std::uniform_int_distribution<int> dd(1, d);
    int delta = dd(rng);
    DpPoly g = f + random_poly(rng, n, FieldSpec::rationals(), d - delta);
    if (g.is_zero() || g.degree() != d) continue;
    SymDecomp df = symmetric_decomposition(f);
    SymDecomp dg = symmetric_decomposition(g);
    for (int a = 0; a < delta && a <= d - 2; ++a)
      if (df.rows[a] != dg.rows[a])
        return "perturbation stability fails at case " + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// Delta_0 equals the Hilbert function of the top form.
inline std::optional<std::string> top_row_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    int n = 1 + done % 3;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 4);
    if (f.degree() < 1) continue;
    SymDecomp dec = symmetric_decomposition(f);
    if (dec.rows[0] != hilbert_function(f.homogeneous_component(f.degree())))
      return "Delta_0 differs from the top form HF at case " +
             std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// Ray-sum annihilator formula against the direct annihilator.
inline std::optional<std::string> ray_formula_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    int n = 1 + done % 2;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 3);
    Operator partial = random_operator(rng, n, FieldSpec::rationals(), 2, 0.4);
    if (partial.is_zero() || partial.order() < 1) continue;
    if (contract(partial, f).is_zero()) continue;
    std::uniform_int_distribution<int> dd(2, 3);
    RaySumSpec spec{f, partial, dd(rng)};
    DpPoly g = ray_sum(spec);
    if (!ray_sum_annihilator(spec).equals(annihilator(g, g.degree() + 2)))
      return "ray-sum annihilator formula fails at case " + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// colon(Ann f, sigma) = Ann(sigma -| f).
inline std::optional<std::string> colon_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    int n = 1 + done % 2;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 4);
    Operator s = random_operator(rng, n, FieldSpec::rationals(), 2, 0.4);
    DpPoly sf = contract(s, f);
    if (s.is_zero() || sf.is_zero()) continue;
    TruncatedIdeal ann = annihilator(f);
    if (!colon(ann, s).equals(annihilator(sf, ann.truncation())))
      return "colon identity fails at case " + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// initial_ideal preserves the colength.
inline std::optional<std::string> initial_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    int n = 1 + done % 3;
    DpPoly f = random_nonzero_poly(rng, n, FieldSpec::rationals(), 4);
    TruncatedIdeal ann = annihilator(f);
    if (ann.initial_ideal().quotient_dimension() != ann.quotient_dimension())
      return "initial ideal changes colength at case " + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// Apolar algebras are Gorenstein: socle dimension one.
inline std::optional<std::string> socle_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < cases) {
    FieldSpec field = suite_field(done);
    int n = 1 + done % 3;
    DpPoly f = random_poly(rng, n, field, 4);
    if (f.is_zero()) continue;
    if (socle_dimension(annihilator(f)) != 1)
      return "socle dimension differs from 1 at case " + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

/// Characteristic 2: squares of linear forms vanish in the dp ring.
inline std::optional<std::string> char2_square_suite(int cases, unsigned seed) {
  std::mt19937_64 rng(seed);
  FieldSpec f2 = FieldSpec::prime_field(2);
  for (int rep = 0; rep < cases; ++rep) {
    int n = 1 + rep % 4;
    DpPoly ell(n, f2);
    for (int i = 0; i < n; ++i) {
      Scalar c = random_scalar(rng, f2);
      if (!c.is_zero()) ell.add_term(Monomial::variable(n, i), c);
    }
    if (!(ell * ell).is_zero())
      return "char-2 square of a linear form survives at case " +
             std::to_string(rep);
  }
  return std::nullopt;
}

}  // namespace apolar::testing

#endif
