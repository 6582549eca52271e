#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "apolar/poly.hpp"

namespace apolar {

/// Indexes the monomials of degree <= bound in n variables, increasing in
/// the global order, so index comparisons agree with the term order.
class MonomialTable {
 public:
  MonomialTable(int n, int max_degree);

  int vars() const { return n_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(list_.size()); }

  int index(const Monomial& m) const;
  const Monomial& monomial(int idx) const { return list_[idx]; }
  int degree_of(int idx) const { return list_[idx].degree(); }
  /// First index of degree e (== size() when e > max_degree).
  int degree_start(int e) const;
  /// Number of monomials of degree exactly e.
  int degree_count(int e) const;

 private:
  int n_, max_degree_;
  std::vector<Monomial> list_;
  std::unordered_map<Monomial, int, MonomialHash> pos_;
  std::vector<int> starts_;
};

/// Sparse vector over the scalar field: (index, coeff) pairs with strictly
/// decreasing indices and nonzero coefficients.  Entry 0 is the leading one.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sv_scaled(const SparseVec& v, const Scalar& c);
/// dst += c * src, preserving the representation invariants.
SparseVec sv_add_scaled(const SparseVec& dst, const SparseVec& src, const Scalar& c);

/// A triangular basis of a subspace: one row per pivot (the row's leading
/// index), rows normalized monic.  Insertion reduces against existing rows;
/// reduce() computes canonical residues, so membership is exact.
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(const MonomialTable* table) : table_(table) {}

  /// Reduce and store; returns true when the rank grew.
  bool insert(SparseVec v);
  /// Canonical residue of v modulo the span.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Number of pivots of degree <= e / degree == e (requires a table).
  int rank_degree_le(int e) const;
  int rank_degree_eq(int e) const;

  const std::map<int, SparseVec, std::greater<int>>& rows() const {
    return rows_;
  }
  const MonomialTable* table() const { return table_; }

 private:
  const MonomialTable* table_ = nullptr;
  std::map<int, SparseVec, std::greater<int>> rows_;
  mutable std::map<int, int> rank_by_degree_;  // pivot degree -> count
};

/// Incremental kernel/solver machine.  Vectors are fed in with integer
/// labels; when a fed vector is dependent on the earlier ones the machine
/// reports the (triangular) linear combination over the labels.  solve()
/// expresses an external target in terms of the fed vectors, preferring
/// earlier-fed labels (the least-pivot solution).
class LinearSolver {
 public:
  explicit LinearSolver(const FieldSpec& field) : field_(field) {}

  /// Returns the kernel combination (over labels, leading label = the fed
  /// one) when v is dependent; nullopt when it increased the rank.
  std::optional<SparseVec> feed(int label, SparseVec v);

  /// Combination of fed labels expressing target exactly, or nullopt.
  std::optional<SparseVec> solve(const SparseVec& target) const;

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  FieldSpec field_;
  struct Row {
    SparseVec image;  // monic on its pivot
    SparseVec combo;  // labels expressing image
  };
  std::map<int, Row, std::greater<int>> rows_;  // image pivot -> row
};

/// Conversions between polynomials and sparse vectors over a table.
SparseVec to_vec(const DpPoly& f, const MonomialTable& t);
SparseVec to_vec(const Operator& f, const MonomialTable& t);
DpPoly vec_to_dp(const SparseVec& v, const MonomialTable& t, int n,
                 const FieldSpec& field);
Operator vec_to_op(const SparseVec& v, const MonomialTable& t, int n,
                   const FieldSpec& field);

}  // namespace apolar

#endif
