#include "apolar/decomp.hpp"

#include <algorithm>

#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

namespace {

void require_nonconstant(const DpPoly& f, const char* what) {
  if (f.is_zero() || f.degree() < 1)
    throw ZeroInputError(std::string(what) + " needs a nonconstant polynomial");
}

void check_char(const DpPoly& f, const char* what) {
  unsigned long p = f.field().characteristic();
  if (p != 0 && static_cast<long>(p) <= f.degree())
    throw UnsupportedCharacteristicError(
        std::string(what) + " requires char 0 or char > deg f");
}

}  // namespace

SymDecomp symmetric_decomposition(const DpPoly& f) {
  require_nonconstant(f, "symmetric_decomposition");
  int d = f.degree();
  int n = f.vars();
  MonomialTable table(n, d);

  // g[c](i) = dim (m^c f cap P_{<= i}); Delta_a(i) is an alternating sum of
  // four of these filtered dimensions.
  std::vector<Echelon> spaces;
  for (int c = 0; c <= d + 1; ++c) spaces.push_back(partials_space(f, c, table));
  auto g = [&](int c, int i) {
    if (i < 0) return 0;
    return spaces[c].rank_degree_le(i);
  };

  SymDecomp out;
  out.socle_degree = d;
  // Delta_a vanishes for a > d-2, but Delta_0 exists for every d >= 1.
  int last_row = std::max(0, d - 2);
  for (int a = 0; a <= last_row; ++a) {
    std::vector<int> row(d - a + 1, 0);
    for (int i = 0; i <= d - a; ++i) {
      int c = d - a - i;
      row[i] = g(c, i) - g(c, i - 1) - g(c + 1, i) + g(c + 1, i - 1);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

LinearFiltration linear_filtration(const DpPoly& f) {
  require_nonconstant(f, "linear_filtration");
  int d = f.degree();
  int n = f.vars();
  MonomialTable table(n, d);
  LinearFiltration out;
  for (int a = 0; a <= d - 2; ++a) {
    Echelon space = partials_space(f, d - a - 1, table);
    std::vector<DpPoly> basis;
    for (const auto& [pivot, row] : space.rows()) {
      if (table.degree_of(pivot) != 1) continue;
      DpPoly l(n, f.field());
      for (const auto& [idx, c] : row)
        if (table.degree_of(idx) == 1) l.add_term(table.monomial(idx), c);
      basis.push_back(std::move(l));
    }
    std::reverse(basis.begin(), basis.end());  // ascending pivots
    out.spaces.push_back(std::move(basis));
  }
  return out;
}

namespace {

// Basis of { sigma in S_1 : sigma -| w = 0 for all w in span }.
std::vector<Operator> linear_perp(const std::vector<DpPoly>& span, int n,
                                  const FieldSpec& field) {
  LinearSolver solver(field);
  std::vector<Operator> perp;
  for (int k = 0; k < n; ++k) {
    SparseVec image;
    for (int t = static_cast<int>(span.size()) - 1; t >= 0; --t) {
      Scalar c = span[t].coefficient(Monomial::variable(n, k));
      if (!c.is_zero()) image.emplace_back(t, c);
    }
    if (auto combo = solver.feed(k, std::move(image))) {
      Operator sigma(n, field);
      for (const auto& [i, c] : *combo)
        sigma.add_term(Monomial::variable(n, i), c);
      perp.push_back(std::move(sigma));
    }
  }
  return perp;
}

}  // namespace

StandardFormCheck is_standard_form(const DpPoly& f) {
  StandardFormCheck out;
  if (f.is_zero() || f.degree() < 1) {
    out.is_standard = true;
    return out;
  }
  int d = f.degree();
  int n = f.vars();
  LinearFiltration flt = linear_filtration(f);
  for (int i = 1; i <= d; ++i) {
    DpPoly comp = f.homogeneous_component(d - i);
    if (comp.is_zero() || comp.degree() < 1) continue;
    int level = std::min(i, d - 2);
    const auto& space = flt.spaces.at(level);
    // membership in k_dp[L^level]: annihilated by every linear form
    // perpendicular to the space
    for (const auto& sigma : linear_perp(space, n, f.field())) {
      if (!contract(sigma, comp).is_zero()) {
        out.is_standard = false;
        out.violating_degree = d - i;
        return out;
      }
    }
  }
  out.is_standard = true;
  return out;
}

namespace {

// Inverse of a small dense matrix (columns of basis vectors); Gauss-Jordan.
std::vector<std::vector<Scalar>> invert_matrix(
    std::vector<std::vector<Scalar>> m, const FieldSpec& field) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int i = 0; i < n; ++i) inv[i][i] = Scalar::one(field);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) throw InvalidAutomorphismError("singular change of basis");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    Scalar s = m[col][col].inverse();
    for (int j = 0; j < n; ++j) { m[col][j] *= s; inv[col][j] *= s; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar c = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= c * m[col][j];
        inv[r][j] -= c * inv[col][j];
      }
    }
  }
  return inv;
}

// Linear automorphism phi with phi^v(b_t) = x_t for the given basis of P_1
// (columns b_t in coordinates); phi(dx_i) = sum_j M_ji dx_j, M = (B^T)^-1.
AutomorphismData alignment_automorphism(const std::vector<std::vector<Scalar>>& basis,
                                        int n, const FieldSpec& field) {
  std::vector<std::vector<Scalar>> bt(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bt[i][j] = basis[j][i];
  auto m = invert_matrix(std::move(bt), field);
  AutomorphismData phi(n, field);
  for (int i = 0; i < n; ++i) {
    Operator diff(n, field);
    for (int j = 0; j < n; ++j) {
      Scalar c = m[j][i];
      if (j == i) c -= Scalar::one(field);
      if (!c.is_zero()) diff.add_term(Monomial::variable(n, j), c);
    }
    phi.set_difference(i, std::move(diff));
  }
  return phi;
}

// Extends the filtration to a full basis of P_1, aligned so that L^a maps
// to the span of the first dim L^a coordinates.
std::vector<std::vector<Scalar>> filtration_basis(const LinearFiltration& flt,
                                                  int n, const FieldSpec& field) {
  std::vector<std::vector<Scalar>> cols;
  Echelon seen;
  auto try_add = [&](const std::vector<Scalar>& col) {
    SparseVec v;
    for (int k = n - 1; k >= 0; --k)
      if (!col[k].is_zero()) v.emplace_back(k, col[k]);
    if (seen.insert(std::move(v))) cols.push_back(col);
  };
  for (const auto& space : flt.spaces)
    for (const auto& l : space) {
      std::vector<Scalar> col(n, Scalar::zero(field));
      for (const auto& [m, c] : l.terms())
        for (int k = 0; k < n; ++k)
          if (m.exponent(k) == 1) col[k] = c;
      try_add(col);
    }
  for (int k = 0; k < n && static_cast<int>(cols.size()) < n; ++k) {
    std::vector<Scalar> col(n, Scalar::zero(field));
    col[k] = Scalar::one(field);
    try_add(col);
  }
  return cols;
}

}  // namespace

StandardFormResult standard_form(const DpPoly& f) {
  require_nonconstant(f, "standard_form");
  check_char(f, "standard_form");
  int d = f.degree();
  int n = f.vars();
  const FieldSpec& field = f.field();

  DpPoly cur = f;
  AutomorphismData total = AutomorphismData::identity(n, field);
  for (int round = 0; round <= d + 2; ++round) {
    if (is_standard_form(cur).is_standard)
      return StandardFormResult{cur, total, Operator::one(n, field)};

    LinearFiltration flt = linear_filtration(cur);
    AutomorphismData lin = alignment_automorphism(filtration_basis(flt, n, field),
                                                  n, field);
    cur = apply_dual_automorphism(lin, cur);
    total = total.compose(lin);
    flt = linear_filtration(cur);

    // level of each coordinate in the (now aligned) flag
    std::vector<int> level(n, d - 2);
    for (int k = 0; k < n; ++k)
      for (int a = 0; a <= d - 2; ++a)
        if (k < flt.dim(a)) { level[k] = a; break; }

    // z_k = dx_k + (order >= 2 terms) with deg(z_k -| f) <= d - level(k) - 1
    MonomialTable ptable(n, d);
    AutomorphismData nl(n, field);
    bool nontrivial = false;
    for (int k = 0; k < n; ++k) {
      int maxdeg = d - level[k] - 1;
      DpPoly base = contract(Operator::variable(n, field, k), cur);
      auto high = [&](const DpPoly& g) {
        SparseVec v;
        for (const auto& [m, c] : g.terms())
          if (m.degree() > maxdeg) v.emplace_back(ptable.index(m), c);
        return v;
      };
      SparseVec target = high(base);
      if (target.empty()) continue;
      LinearSolver solver(field);
      std::vector<Monomial> labels;
      for (int idx = ptable.degree_start(2); idx < ptable.size(); ++idx) {
        const Monomial& mu = ptable.monomial(idx);
        labels.push_back(mu);
        solver.feed(static_cast<int>(labels.size()) - 1,
                    high(contract(Operator::monomial(n, field, mu), cur)));
      }
      auto combo = solver.solve(sv_scaled(target, -Scalar::one(field)));
      if (!combo)
        throw Error("standard_form: flag lift unsolvable (internal)");
      Operator corr(n, field);
      for (const auto& [label, c] : *combo) corr.add_term(labels[label], c);
      if (!corr.is_zero()) {
        nl.set_difference(k, corr);
        nontrivial = true;
      }
    }
    if (nontrivial) {
      cur = apply_dual_automorphism(nl, cur);
      total = total.compose(nl);
    }
  }
  throw Error("standard_form did not stabilize (internal)");
}

DpPoly top_degree_twist(const DpPoly& f, int pivot) {
  require_nonconstant(f, "top_degree_twist");
  check_char(f, "top_degree_twist");
  int d = f.degree();
  int n = f.vars();
  const FieldSpec& field = f.field();

  Scalar top = pairing(Operator::monomial(n, field, Monomial::power(n, pivot, d)), f);
  if (top.is_zero())
    throw HypothesisError("pivot power condition fails: dx^d -| f = 0");
  DpPoly cur = f * top.inverse();

  // linear step: kill the coefficients of x_pivot^[d-1] x_j
  {
    AutomorphismData lin(n, field);
    bool any = false;
    for (int j = 0; j < n; ++j) {
      if (j == pivot) continue;
      Monomial m = Monomial::power(n, pivot, d - 1) * Monomial::variable(n, j);
      Scalar lam = pairing(Operator::monomial(n, field, m), cur);
      if (!lam.is_zero()) {
        lin.set_difference(j, Operator::monomial(n, field,
                                                 Monomial::variable(n, pivot)) *
                                  (-lam));
        any = true;
      }
    }
    if (any) cur = apply_dual_automorphism(lin, cur);
  }

  // removal loop: largest i with some x_pivot^[i] x_j present, j != pivot
  for (int i = d - 2; i >= 1; --i) {
    std::vector<Scalar> lam(n, Scalar::zero(field));
    bool any = false;
    for (int j = 0; j < n; ++j) {
      if (j == pivot) continue;
      Monomial m = Monomial::power(n, pivot, i) * Monomial::variable(n, j);
      lam[j] = cur.coefficient(m);
      if (!lam[j].is_zero()) any = true;
    }
    if (!any) continue;
    AutomorphismData nl(n, field);
    Operator corr = Operator::monomial(n, field, Monomial::power(n, pivot, d - i));
    for (int j = 0; j < n; ++j)
      if (j != pivot && !lam[j].is_zero())
        nl.set_difference(j, corr * (-lam[j]));
    cur = apply_dual_automorphism(nl, cur);
  }

  // unit contraction killing the pure powers x_pivot^[i], i < d
  for (int i = d - 1; i >= 0; --i) {
    Scalar c = cur.coefficient(Monomial::power(n, pivot, i));
    if (c.is_zero()) continue;
    Operator u = Operator::one(n, field);
    u.add_term(Monomial::power(n, pivot, d - i), -c);
    cur = contract(u, cur);
  }
  return cur;
}

QuadricSplit quadric_split(const DpPoly& f) {
  require_nonconstant(f, "quadric_split");
  if (f.field().characteristic() == 2)
    throw UnsupportedCharacteristicError("quadric_split needs char != 2");
  if (!is_standard_form(f).is_standard)
    throw HypothesisError("quadric_split needs a standard form input");
  int d = f.degree();
  int n = f.vars();
  const FieldSpec& field = f.field();

  SymDecomp dec = symmetric_decomposition(f);
  int q, e;
  if (d == 2) {
    // the decomposition is the single row (1, q, 1); diagonalize everything
    q = dec.row(0).at(1);
    e = 0;
  } else {
    const auto& last = dec.row(d - 2);
    if (last.size() != 3 || last[0] != 0 || last[2] != 0)
      throw HypothesisError("Delta_{d-2} is not of shape (0,q,0)");
    q = last.at(1);
    e = linear_filtration(f).dim(d - 3);
  }

  // align coordinates with the flag so that f_{>=3} uses only x_1..x_e
  DpPoly cur = f;
  {
    LinearFiltration flt = linear_filtration(f);
    cur = apply_dual_automorphism(
        alignment_automorphism(filtration_basis(flt, n, field), n, field), cur);
  }
  std::vector<Scalar> diag;
  for (int done = 0; done < q; ++done) {
    int lo = e + done;  // variables < lo are already processed or belong to g
    // choose a pivot variable v >= lo with dx_v^2 -| f != 0, mixing if needed
    int v = -1;
    for (int k = lo; k < n; ++k)
      if (!pairing(Operator::monomial(n, field, Monomial::power(n, k, 2)), cur)
               .is_zero()) { v = k; break; }
    if (v < 0) {
      // find a cross term x_r x_k (both >= lo) and mix x_k into x_r; one of
      // the mixing scalars 1, 2 always works away from char 2
      int r = -1, k2 = -1;
      for (int k = lo; k < n && r < 0; ++k)
        for (int l = k + 1; l < n && r < 0; ++l) {
          Monomial m = Monomial::variable(n, k) * Monomial::variable(n, l);
          if (!cur.coefficient(m).is_zero()) { r = k; k2 = l; }
        }
      if (r < 0) throw HypothesisError("quadric part defective (internal)");
      for (long scale : {1L, 2L}) {
        AutomorphismData mix(n, field);
        mix.set_difference(r, Operator::variable(n, field, k2) *
                                  Scalar(field, scale));
        DpPoly mixed = apply_dual_automorphism(mix, cur);
        if (!pairing(Operator::monomial(n, field, Monomial::power(n, r, 2)),
                     mixed).is_zero()) {
          cur = std::move(mixed);
          break;
        }
      }
      v = r;
      if (pairing(Operator::monomial(n, field, Monomial::power(n, v, 2)), cur)
              .is_zero())
        throw HypothesisError("quadric pivot defective (internal)");
    }
    Scalar c = pairing(Operator::monomial(n, field, Monomial::power(n, v, 2)), cur);
    // clear all cross terms x_v x_j
    AutomorphismData clear(n, field);
    bool any = false;
    for (int j = 0; j < n; ++j) {
      if (j == v) continue;
      Monomial m = Monomial::variable(n, v) * Monomial::variable(n, j);
      Scalar lam = cur.coefficient(m);
      if (!lam.is_zero()) {
        clear.set_difference(j, Operator::variable(n, field, v) * (-(lam / c)));
        any = true;
      }
    }
    if (any) cur = apply_dual_automorphism(clear, cur);
    // kill the linear term x_v via a unit, then swap v into slot lo
    Scalar lin = cur.coefficient(Monomial::variable(n, v));
    if (!lin.is_zero()) {
      Operator u = Operator::one(n, field);
      u.add_term(Monomial::variable(n, v), -(lin / c));
      cur = contract(u, cur);
    }
    if (v != lo) {
      AutomorphismData swap(n, field);
      swap.set_difference(v, Operator::variable(n, field, lo) -
                                 Operator::variable(n, field, v));
      swap.set_difference(lo, Operator::variable(n, field, v) -
                                  Operator::variable(n, field, lo));
      cur = apply_dual_automorphism(swap, cur);
    }
    diag.push_back(cur.coefficient(Monomial::power(n, lo, 2)));
  }

  // drop the constant term (a unit moves it away)
  Scalar c0 = cur.coefficient(Monomial::unit(n));
  if (!c0.is_zero()) cur.add_term(Monomial::unit(n), -c0);

  QuadricSplit out{DpPoly::zero(n, field), DpPoly::zero(n, field)};
  out.essential_vars = e;
  out.quadric_rank = q;
  for (const auto& [m, coef] : cur.terms()) {
    bool high = false;
    for (int k = e; k < n; ++k)
      if (m.exponent(k) > 0) high = true;
    if (high)
      out.quadric.add_term(m, coef);
    else
      out.g.add_term(m, coef);
  }
  for (const auto& [m, coef] : out.quadric.terms()) {
    if (m.degree() != 2)
      throw HypothesisError("split leaves non-quadric terms in fresh variables");
  }
  out.hilbert_checked =
      hilbert_function(f) == hilbert_function(out.g + out.quadric) &&
      symmetric_decomposition(f).rows ==
          symmetric_decomposition(out.g + out.quadric).rows;
  return out;
}

}  // namespace apolar
