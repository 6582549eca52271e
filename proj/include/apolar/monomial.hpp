#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

/// An exponent vector of fixed length n.  The global term order is graded
/// with a lexicographic tie-break (compare total degree first, then the
/// exponent vectors entry by entry from x1 on).  Every basis, pivot choice
/// and printed term in the library follows this single order.
class Monomial {
 public:
  explicit Monomial(int n) : e_(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial unit(int n) { return Monomial(n); }
  static Monomial variable(int n, int i) {
    Monomial m(n);
    m.e_[i] = 1;
    return m;
  }
  static Monomial power(int n, int i, int k) {
    Monomial m(n);
    m.e_[i] = k;
    return m;
  }

  int vars() const { return static_cast<int>(e_.size()); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int exponent(int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  bool is_unit() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this, or nullopt when *this does not divide o.
  std::optional<Monomial> divide(const Monomial& o) const;

  /// Append extra trailing variables with exponent zero.
  Monomial extended(int new_n) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// The global graded-lex order.
  bool operator<(const Monomial& o) const;
  bool operator>(const Monomial& o) const { return o < *this; }

  std::size_t hash() const;

 private:
  std::vector<int> e_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials in n variables of the exact degree d, listed increasing in
/// the global order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// Binomial coefficient C(a+b, a) taken componentwise over the exponent
/// vectors: the structure constant of the divided power multiplication.
/// Returned as an exact integer string-free mpz via long chain.
class Scalar;
class FieldSpec;
Scalar dp_binomial(const FieldSpec& field, const Monomial& a, const Monomial& b);

/// a! = prod_i (a_i!), as a field element (used by the char-0 dictionary).
Scalar monomial_factorial(const FieldSpec& field, const Monomial& a);

}  // namespace apolar

#endif
