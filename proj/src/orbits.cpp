#include "apolar/orbits.hpp"

#include <string>

#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

namespace {

// Spanning vectors of t.f / t+.f over the P_{<=d} table.
Echelon tangent_span(const DpPoly& f, bool unipotent, const MonomialTable& table) {
  int n = f.vars();
  int d = f.degree();
  const FieldSpec& field = f.field();
  Echelon ech(&table);
  int min_plain = unipotent ? 1 : 0;
  for (int e = min_plain; e <= d; ++e)
    for (const auto& m : monomials_of_degree(n, e)) {
      DpPoly g = contract(Operator::monomial(n, field, m), f);
      if (!g.is_zero()) ech.insert(to_vec(g, table));
    }
  int min_x = unipotent ? 2 : 1;
  for (int i = 0; i < n; ++i) {
    DpPoly xf = f.x_mul(i);
    for (int e = min_x; e <= d + 1; ++e)
      for (const auto& m : monomials_of_degree(n, e)) {
        DpPoly g = contract(Operator::monomial(n, field, m), xf);
        if (!g.is_zero()) ech.insert(to_vec(g, table));
      }
  }
  return ech;
}

std::vector<DpPoly> basis_polys(const Echelon& ech, const MonomialTable& table,
                                int n, const FieldSpec& field) {
  std::vector<DpPoly> out;
  for (const auto& [pivot, row] : ech.rows())
    out.push_back(vec_to_dp(row, table, n, field));
  return out;
}

}  // namespace

OrbitTangent orbit_tangent(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("orbit_tangent of zero");
  MonomialTable table(f.vars(), std::max(f.degree(), 0));
  Echelon t = tangent_span(f, false, table);
  Echelon tu = tangent_span(f, true, table);
  return OrbitTangent{f, t.rank(), tu.rank(),
                      basis_polys(t, table, f.vars(), f.field()),
                      basis_polys(tu, table, f.vars(), f.field())};
}

std::vector<int> orbit_dimension_table(const std::vector<DpPoly>& fs) {
  std::vector<int> dims;
  dims.reserve(fs.size());
  for (const auto& f : fs) dims.push_back(orbit_tangent(f).dim_tangent);
  return dims;
}

std::vector<Operator> tangent_perp(const DpPoly& f, bool unipotent,
                                   int max_degree) {
  if (f.is_zero()) throw ZeroInputError("tangent_perp of zero");
  int n = f.vars();
  const FieldSpec& field = f.field();
  int c0 = unipotent ? 0 : -1;
  int c1 = unipotent ? 1 : 0;
  MonomialTable ops(n, max_degree);
  MonomialTable pm(n, std::max(f.degree(), 0));
  int block = pm.size();
  LinearSolver solver(field);
  std::vector<Operator> perp;
  for (int idx = 0; idx < ops.size(); ++idx) {
    Operator mu = Operator::monomial(n, field, ops.monomial(idx));
    SparseVec image;
    for (int i = n; i >= 1; --i) {
      DpPoly g = contract(mu.partial_derivative(i - 1), f);
      for (const auto& [m, c] : g.terms())
        if (m.degree() > c1) image.emplace_back(i * block + pm.index(m), c);
    }
    {
      DpPoly g = contract(mu, f);
      for (const auto& [m, c] : g.terms())
        if (m.degree() > c0) image.emplace_back(pm.index(m), c);
    }
    std::sort(image.begin(), image.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (auto combo = solver.feed(idx, std::move(image)))
      perp.push_back(vec_to_op(*combo, ops, n, field));
  }
  return perp;
}

bool is_t_compressed(const DpPoly& f, int t) {
  if (f.is_zero() || f.degree() < 2) return false;
  if (t < 1) return false;
  int n = f.vars();
  int d = f.degree();
  std::vector<int> h = hilbert_function(f);
  auto full = [&](int i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), i + n - 1, i);
    return b;
  };
  for (int i = 0; i <= std::min(t, d); ++i)
    if (mpz_class(h[i]) != full(i)) return false;
  if (t > d) return false;
  return h[d - 1] == n;
}

std::optional<int> max_compression(const DpPoly& f) {
  if (f.is_zero() || f.degree() < 2) return std::nullopt;
  int best = -1;
  for (int t = 1; t <= f.degree() / 2; ++t)
    if (is_t_compressed(f, t)) best = t;
  if (best < 0) return std::nullopt;
  return best;
}

GradednessCertificate canonical_gradedness_certificate(const DpPoly& f) {
  GradednessCertificate cert;
  if (f.is_zero() || f.degree() < 3) {
    cert.note = "socle degree below 3";
    return cert;
  }
  int d = f.degree();
  int n = f.vars();
  const FieldSpec& field = f.field();
  DpPoly top = f.homogeneous_component(d);

  if (f == top) {
    cert.kind = GradednessCertificate::Kind::graded;
    cert.reduced = top;
    cert.note = "input homogeneous";
    return cert;
  }

  auto tmax = max_compression(f);
  if (!tmax) {
    cert.note = "apolar algebra is not t-compressed for any t";
    return cert;
  }
  int t = *tmax;
  if (d > t + 2) {
    cert.note = "socle degree exceeds t+2; only partial reductions available";
    return cert;
  }

  // obstruction scan: homogeneous perp of t+.(top) in degrees 1..t+1
  MonomialTable pm(n, d);
  int block = pm.size();
  for (int e = 1; e <= t + 1; ++e) {
    LinearSolver solver(field);
    std::vector<SparseVec> kernel;
    std::vector<Monomial> labels = monomials_of_degree(n, e);
    for (int li = 0; li < static_cast<int>(labels.size()); ++li) {
      Operator mu = Operator::monomial(n, field, labels[li]);
      SparseVec image;
      for (int i = n; i >= 1; --i) {
        DpPoly g = contract(mu.partial_derivative(i - 1), top);
        for (const auto& [m, c] : g.terms())
          image.emplace_back(i * block + pm.index(m), c);
      }
      DpPoly plain = contract(mu, top);
      for (const auto& [m, c] : plain.terms())
        image.emplace_back(pm.index(m), c);
      std::sort(image.begin(), image.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      if (auto combo = solver.feed(li, std::move(image)))
        kernel.push_back(std::move(*combo));
    }
    if (!kernel.empty()) {
      // deterministic witness: the kernel element with the largest pivot
      const SparseVec* best = &kernel.front();
      for (const auto& k : kernel)
        if (k.front().first > best->front().first) best = &k;
      Operator sigma(n, field);
      for (const auto& [li, c] : *best) sigma.add_term(labels[li], c);
      cert.kind = GradednessCertificate::Kind::obstruction;
      cert.obstruction = std::move(sigma);
      cert.note = "operator of degree " + std::to_string(e) +
                  " perpendicular to the unipotent tangent space of the top form";
      return cert;
    }
  }

  // reduction chain: remove the leading form of (cur - top) step by step
  MonomialTable ops(n, d);
  DpPoly cur = f;
  int guard = d + 2;
  while (cur != top && guard-- > 0) {
    DpPoly tail = cur - top;
    int e = tail.degree();
    DpPoly target = -tail.homogeneous_component(e);
    // solve sigma -| top + sum_k x_k (D_k -| top) = target with homogeneous
    // sigma of degree d-e and D_k of degree d-e+1
    LinearSolver solver(field);
    struct Label { int kind; Monomial m; };  // kind: 0 unit, 1..n derivation
    std::vector<Label> labels;
    auto feed = [&](int kind, const Monomial& mu, const DpPoly& img) {
      labels.push_back({kind, mu});
      SparseVec v;
      for (const auto& [m, c] : img.terms()) v.emplace_back(pm.index(m), c);
      solver.feed(static_cast<int>(labels.size()) - 1, std::move(v));
    };
    for (const auto& mu : monomials_of_degree(n, d - e))
      feed(0, mu, contract(Operator::monomial(n, field, mu), top));
    if (d - e + 1 >= 2)
      for (int k = 0; k < n; ++k)
        for (const auto& mu : monomials_of_degree(n, d - e + 1))
          feed(k + 1, mu,
               contract(Operator::monomial(n, field, mu), top).x_mul(k));
    SparseVec tv;
    for (const auto& [m, c] : target.terms()) tv.emplace_back(pm.index(m), c);
    auto combo = solver.solve(tv);
    if (!combo) {
      cert.kind = GradednessCertificate::Kind::inconclusive;
      cert.note = "leading-form removal unsolvable at degree " +
                  std::to_string(e);
      return cert;
    }
    Operator unit = Operator::one(n, field);
    AutomorphismData phi(n, field);
    std::vector<Operator> diffs(n, Operator::zero(n, field));
    for (const auto& [li, c] : *combo) {
      const Label& lb = labels[li];
      if (lb.kind == 0)
        unit.add_term(lb.m, c);
      else
        diffs[lb.kind - 1].add_term(lb.m, c);
    }
    bool any_diff = false;
    for (int k = 0; k < n; ++k)
      if (!diffs[k].is_zero()) {
        phi.set_difference(k, diffs[k]);
        any_diff = true;
      }
    cur = contract(unit, cur);
    cert.unit_chain.push_back(unit);
    if (any_diff) {
      try {
        cur = apply_dual_automorphism(phi, cur);
      } catch (const UnsupportedCharacteristicError& ex) {
        cert.kind = GradednessCertificate::Kind::inconclusive;
        cert.note = ex.what();
        return cert;
      }
      cert.autos.push_back(phi);
    }
    if ((cur - top).degree() >= e && !(cur - top).is_zero())
      throw Error("gradedness reduction failed to lower the tail (internal)");
  }
  if (cur != top) {
    cert.kind = GradednessCertificate::Kind::inconclusive;
    cert.note = "reduction did not terminate";
    return cert;
  }
  cert.kind = GradednessCertificate::Kind::graded;
  cert.reduced = top;
  cert.note = "reduced to the top degree form";
  return cert;
}

}  // namespace apolar
