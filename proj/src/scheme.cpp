#include "apolar/scheme.hpp"

#include <gmpxx.h>

#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"

namespace apolar {

namespace {

long binom(long a, int j) {
  if (a < j || a < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(j));
  if (!b.fits_slong_p()) throw Error("binomial overflow");
  return b.get_si();
}

}  // namespace

std::vector<long> binomial_expansion(long h, int i) {
  if (i < 1) throw Error("binomial expansion needs i >= 1");
  if (h < 0) throw Error("binomial expansion needs h >= 0");
  std::vector<long> a;
  long rest = h;
  for (int j = i; j >= 1; --j) {
    if (rest == 0) {
      a.push_back(j - 1);  // C(j-1, j) = 0 keeps the sequence decreasing
      continue;
    }
    long aj = j;
    while (binom(aj + 1, j) <= rest) ++aj;
    a.push_back(aj);
    rest -= binom(aj, j);
  }
  if (rest != 0) throw Error("binomial expansion failed (internal)");
  return a;
}

long macaulay_bound(long h, int i) {
  if (h == 0) return 0;
  std::vector<long> a = binomial_expansion(h, i);
  long out = 0;
  for (int t = 0; t < static_cast<int>(a.size()); ++t) {
    int j = i - t;
    out += binom(a[t] + 1, j + 1);
  }
  return out;
}

bool is_o_sequence(const std::vector<int>& h) {
  if (h.empty() || h[0] != 1) return false;
  for (int v : h)
    if (v < 0) return false;
  for (int i = 1; i + 1 < static_cast<int>(h.size()); ++i)
    if (h[i + 1] > macaulay_bound(h[i], i)) return false;
  return true;
}

bool max_growth_at(const std::vector<int>& h, int i) {
  if (i < 1 || i + 1 >= static_cast<int>(h.size())) return false;
  return h[i + 1] == macaulay_bound(h[i], i);
}

bool si_check(const std::vector<int>& h) {
  if (h.empty() || h[0] != 1) return false;
  int d = static_cast<int>(h.size()) - 1;
  while (d > 0 && h[d] == 0) --d;
  for (int i = 0; i <= d; ++i)
    if (h[i] != h[d - i]) return false;
  std::vector<int> diff;
  for (int i = 0; i <= d / 2; ++i) {
    int v = h[i] - (i ? h[i - 1] : 0);
    if (v < 0) return false;
    diff.push_back(v);
  }
  return is_o_sequence(diff);
}

namespace {

// dim Hom_S(I, S/I) from a generator presentation: a homomorphism assigns
// classes a_i in A = S/I to the generators, constrained by every syzygy
// sum s_i g_i = 0 via sum s_i a_i = 0 in A.  Components s_i only matter
// modulo m^N (m^N kills A), and (u_i) extends to a syzygy exactly when
// sum u_i g_i lies in m^N * I.
long hom_tangent_dimension(const TruncatedIdeal& ideal) {
  int n = ideal.vars();
  const FieldSpec& field = ideal.field();
  int nilp = ideal.nilpotency_bound();
  const std::vector<Operator>& gens = ideal.generators();
  int t = static_cast<int>(gens.size());

  std::vector<Operator> mn_gens;
  for (const auto& m : monomials_of_degree(n, nilp))
    mn_gens.push_back(Operator::monomial(n, field, m));
  TruncatedIdeal mni = ideal_combine(
      IdealCombineKind::product,
      TruncatedIdeal::from_generators(std::move(mn_gens), nilp + 1), ideal);

  // syzygies modulo m^N: kernel of (u_i) -> sum u_i g_i mod m^N I
  MonomialTable u_table(n, nilp - 1);
  int u_size = u_table.size();
  LinearSolver syz_solver(field);
  std::vector<SparseVec> syzygies;
  for (int i = 0; i < t; ++i)
    for (int idx = 0; idx < u_size; ++idx) {
      Operator prod = Operator::monomial(n, field, u_table.monomial(idx)) * gens[i];
      SparseVec residue = mni.echelon().reduce(
          to_vec(prod.truncated(mni.truncation() - 1), mni.table()));
      if (auto combo = syz_solver.feed(i * u_size + idx, std::move(residue)))
        syzygies.push_back(std::move(*combo));
    }

  // standard monomial basis of A
  std::vector<Monomial> abasis;
  for (int idx = 0; idx < ideal.table().size(); ++idx)
    if (!ideal.echelon().rows().count(idx))
      abasis.push_back(ideal.table().monomial(idx));
  int r = static_cast<int>(abasis.size());

  // rank of the constraint map k^(t*r) -> A^(#syzygies)
  LinearSolver rank_solver(field);
  int rank = 0;
  for (int i = 0; i < t; ++i)
    for (int b = 0; b < r; ++b) {
      SparseVec column;
      for (int w = static_cast<int>(syzygies.size()) - 1; w >= 0; --w) {
        for (const auto& [label, c] : syzygies[w]) {
          if (label / u_size != i) continue;
          Operator ub = Operator::monomial(n, field,
                                           u_table.monomial(label % u_size) *
                                               abasis[b]) * c;
          Operator res = ideal.reduce(ub);
          for (const auto& [m, cc] : res.terms())
            column.emplace_back(w * ideal.table().size() +
                                    ideal.table().index(m),
                                cc);
        }
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b2) { return a.first > b2.first; });
      // merge duplicate indices produced by different labels of one syzygy
      SparseVec merged;
      for (const auto& [idx, c] : column) {
        if (!merged.empty() && merged.back().first == idx)
          merged.back().second += c;
        else
          merged.emplace_back(idx, c);
      }
      std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
      if (!rank_solver.feed(i * r + b, std::move(merged))) ++rank;
    }
  return static_cast<long>(t) * r - rank;
}

}  // namespace

HSchemeCertificate hs_tangent_dim(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("hs_tangent_dim of zero");
  return hs_tangent_dim(annihilator(f));
}

HSchemeCertificate hs_tangent_dim(const TruncatedIdeal& ideal) {
  if (!ideal.nilpotency_certified())
    throw PrecisionError("hs_tangent_dim needs a certified nilpotency bound");
  HSchemeCertificate cert;
  cert.n = ideal.vars();
  cert.r = ideal.quotient_dimension();
  cert.gorenstein = socle_dimension(ideal) == 1;
  if (cert.gorenstein) {
    // Gorenstein point: dim T = dim I/I^2 = dim S/I^2 - dim S/I
    TruncatedIdeal isq = ideal_combine(IdealCombineKind::product, ideal, ideal);
    cert.tangent_dim = isq.quotient_dimension() - cert.r;
    cert.hilbert_of_I2 = isq.quotient_hilbert();
  } else {
    // general point: dim T = dim Hom_S(I, S/I), which can be smaller than
    // dim I/I^2 when the socle is bigger than one line
    cert.tangent_dim = hom_tangent_dimension(ideal);
  }
  cert.tangent_minimal = cert.tangent_dim == cert.r * cert.n;
  return cert;
}

TruncatedIdeal gm_limit(const DpPoly& f) {
  if (f.is_zero()) throw ZeroInputError("gm_limit of zero");
  return annihilator(f).initial_ideal();
}

}  // namespace apolar
