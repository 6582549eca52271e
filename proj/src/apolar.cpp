#include "apolar/apolar.hpp"

#include "apolar/errors.hpp"

namespace apolar {

TruncatedIdeal annihilator(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("annihilator of the zero polynomial");
  return annihilator(f, f.degree() + 2);
}

TruncatedIdeal annihilator(const DpPoly& f, int trunc_exp) {
  return annihilator_of_set({f}, trunc_exp);
}

TruncatedIdeal annihilator_of_set(const std::vector<DpPoly>& fs, int trunc_exp) {
  if (fs.empty()) throw ZeroInputError("empty polynomial set");
  int n = fs[0].vars();
  const FieldSpec& field = fs[0].field();
  int dmax = kDegNegInf;
  for (const auto& f : fs) {
    check_same_ambient(f, fs[0]);
    if (f.is_zero()) throw ZeroInputError("annihilator of the zero polynomial");
    dmax = std::max(dmax, f.degree());
  }

  MonomialTable sops(n, trunc_exp - 1);
  MonomialTable pmons(n, dmax);
  // Kernel of sigma -> (sigma -| f_1, ..., sigma -| f_r), fed in increasing
  // operator order so the kernel basis is triangular with graded pivots.
  LinearSolver solver(field);
  std::vector<Operator> gens;
  int block = pmons.size();
  for (int idx = 0; idx < sops.size(); ++idx) {
    Operator mu = Operator::monomial(n, field, sops.monomial(idx));
    SparseVec image;
    for (int j = static_cast<int>(fs.size()) - 1; j >= 0; --j) {
      DpPoly g = contract(mu, fs[j]);
      for (const auto& [m, c] : g.terms())
        image.emplace_back(j * block + pmons.index(m), c);
    }
    if (auto combo = solver.feed(idx, std::move(image)))
      gens.push_back(vec_to_op(*combo, sops, n, field));
  }
  if (gens.empty())
    throw PrecisionError("no annihilator elements below the truncation");
  return TruncatedIdeal::from_generators(std::move(gens), trunc_exp);
}

Echelon partials_space(const DpPoly& f, int min_order,
                       const MonomialTable& table) {
  Echelon ech(&table);
  int n = f.vars();
  int d = f.degree();
  for (int e = min_order; e <= d; ++e)
    for (const auto& m : monomials_of_degree(n, e)) {
      DpPoly g = contract(Operator::monomial(n, f.field(), m), f);
      if (!g.is_zero()) ech.insert(to_vec(g, table));
    }
  return ech;
}

std::vector<int> hilbert_function(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("hilbert_function of zero");
  int d = f.degree();
  MonomialTable table(f.vars(), std::max(d, 0));
  Echelon sf = partials_space(f, 0, table);
  std::vector<int> h(d + 1);
  for (int i = 0; i <= d; ++i)
    h[i] = sf.rank_degree_le(i) - (i ? sf.rank_degree_le(i - 1) : 0);
  return h;
}

long apolar_degree(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("apolar_degree of zero");
  MonomialTable table(f.vars(), std::max(f.degree(), 0));
  return partials_space(f, 0, table).rank();
}

int socle_dimension(const TruncatedIdeal& ideal) {
  if (!ideal.nilpotency_certified())
    throw PrecisionError("socle needs a certified nilpotency bound");
  // { a in S/I : x_k * a in I for all k }, computed over the standard
  // monomials of the quotient.
  const MonomialTable& table = ideal.table();
  int n = ideal.vars();
  const FieldSpec& field = ideal.field();
  std::vector<int> std_monomials;
  for (int idx = 0; idx < table.size(); ++idx)
    if (!ideal.echelon().rows().count(idx)) std_monomials.push_back(idx);
  LinearSolver solver(field);
  int socle = 0;
  for (int idx : std_monomials) {
    SparseVec image;
    // stacked residues of x_k * mu, blocks indexed by k
    for (int k = n - 1; k >= 0; --k) {
      Monomial m = table.monomial(idx) * Monomial::variable(n, k);
      SparseVec v;
      if (m.degree() <= table.max_degree())
        v = ideal.echelon().reduce({{table.index(m), Scalar::one(field)}});
      for (const auto& [i, c] : v) image.emplace_back(k * table.size() + i, c);
    }
    std::sort(image.begin(), image.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (solver.feed(idx, std::move(image))) ++socle;
  }
  return socle;
}

Catalecticant catalecticant(const DpPoly& F, int a) {
  if (F.is_zero()) throw ZeroInputError("catalecticant of zero");
  if (!F.is_homogeneous())
    throw Error("catalecticant needs a homogeneous form");
  int d = F.degree();
  if (a < 0 || a > d) throw Error("catalecticant degree out of range");
  int n = F.vars();
  const FieldSpec& field = F.field();

  Catalecticant cat;
  cat.a = a;
  cat.col_labels = monomials_of_degree(n, a);
  cat.row_labels = monomials_of_degree(n, d - a);
  MonomialTable rows_table(n, d - a);
  Echelon ech(&rows_table);
  for (const auto& sm : cat.col_labels) {
    DpPoly g = contract(Operator::monomial(n, field, sm), F);
    std::vector<Scalar> col(cat.row_labels.size(), Scalar::zero(field));
    for (const auto& [m, c] : g.terms())
      col[rows_table.index(m) - rows_table.degree_start(d - a)] = c;
    cat.matrix.push_back(std::move(col));
    if (!g.is_zero()) ech.insert(to_vec(g, rows_table));
  }
  // matrix rows are S_a-indexed columns of the map; transpose to the
  // documented (P_{d-a} x S_a) orientation
  std::vector<std::vector<Scalar>> mt(
      cat.row_labels.size(),
      std::vector<Scalar>(cat.col_labels.size(), Scalar::zero(field)));
  for (std::size_t j = 0; j < cat.matrix.size(); ++j)
    for (std::size_t i = 0; i < cat.matrix[j].size(); ++i) mt[i][j] = cat.matrix[j][i];
  cat.matrix = std::move(mt);
  cat.rank = ech.rank();
  return cat;
}

SecantVerdict secant_membership(const DpPoly& F, int r) {
  if (!F.is_homogeneous())
    throw Error("secant membership needs a homogeneous form");
  if (r < 1) throw Error("secant index must be positive");
  int d = F.degree();
  SecantVerdict v;
  v.middle_rank = catalecticant(F, d / 2).rank;
  v.rank_at_most_r = v.middle_rank <= r;
  v.proven_sharp = (d >= 2 * r) && (r < 14);
  return v;
}

ApolarSummary apolar_summary(const DpPoly& f) {
  ApolarSummary s{f};
  s.hilbert = hilbert_function(f);
  s.socle_degree = f.degree();
  long total = 0;
  for (int h : s.hilbert) total += h;
  s.degree = total;
  s.ann_generators = annihilator(f).generators();
  return s;
}

}  // namespace apolar
