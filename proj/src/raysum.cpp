#include "apolar/raysum.hpp"

#include "apolar/apolar.hpp"
#include "apolar/errors.hpp"

namespace apolar {

namespace {

void check_spec(const RaySumSpec& spec) {
  check_same_ambient(spec.partial, spec.f);
  if (spec.f.is_zero()) throw ZeroInputError("ray sum of zero");
  if (spec.d < 2) throw Error("ray sum needs d >= 2");
  if (spec.partial.is_zero() || spec.partial.order() == 0)
    throw Error("ray sum needs partial in the maximal ideal");
  if (contract(spec.partial, spec.f).is_zero())
    throw Error("degenerate ray: partial -| f = 0");
}

}  // namespace

DpPoly ray_sum(const RaySumSpec& spec) {
  check_spec(spec);
  int n = spec.f.vars();
  DpPoly out(n + 1, spec.f.field());
  DpPoly cur = spec.f;
  for (int i = 0; !cur.is_zero(); ++i) {
    Monomial ray = Monomial::power(n + 1, n, spec.d * i);
    for (const auto& [m, c] : cur.terms()) out.add_term(m.extended(n + 1) * ray, c);
    cur = contract(spec.partial, cur);
  }
  return out;
}

TruncatedIdeal ray_sum_annihilator(const RaySumSpec& spec) {
  check_spec(spec);
  int n = spec.f.vars();
  const FieldSpec& field = spec.f.field();
  DpPoly g = ray_sum(spec);

  std::vector<Operator> gens;
  Operator alpha = Operator::variable(n + 1, field, n);
  TruncatedIdeal ann_f = annihilator(spec.f);
  TruncatedIdeal ann_df = annihilator(contract(spec.partial, spec.f));
  for (const auto& s : ann_f.generators()) gens.push_back(s.extended(n + 1));
  for (const auto& s : ann_df.generators())
    gens.push_back(alpha * s.extended(n + 1));
  gens.push_back(alpha.pow(spec.d) - spec.partial.extended(n + 1));
  return TruncatedIdeal::from_generators(std::move(gens), g.degree() + 2);
}

RaySumHilbert hf_after_ray_sum(const DpPoly& f, const Operator& partial) {
  check_same_ambient(partial, f);
  if (f.is_zero()) throw ZeroInputError("hf_after_ray_sum of zero");
  for (int i = 0; i <= 2; ++i)
    if (!f.homogeneous_component(i).is_zero())
      throw HypothesisError("hypothesis f_2 = f_1 = f_0 = 0 fails at degree " +
                            std::to_string(i));
  if (partial.is_zero() || partial.order() < 2)
    throw HypothesisError("hypothesis partial in m_S^2 fails");
  DpPoly ell = contract(partial, f);
  if (ell.degree() != 1 || !ell.homogeneous_component(0).is_zero())
    throw HypothesisError("hypothesis partial -| f linear fails");
  if (!contract(partial, ell).is_zero())
    throw HypothesisError("hypothesis partial^2 -| f = 0 fails");

  RaySumHilbert out;
  out.predicted = hilbert_function(f);
  out.predicted[1] += 1;
  out.predicted[2] += 1;
  out.actual = hilbert_function(ray_sum(RaySumSpec{f, partial, 2}));
  out.verified = out.predicted == out.actual;
  return out;
}

FlatnessVerdict flatness_criterion(const DpPoly& f, const Operator& partial) {
  check_same_ambient(partial, f);
  if (f.is_zero()) throw ZeroInputError("flatness criterion of zero");
  DpPoly h = contract(partial, f);
  if (h.is_zero()) throw Error("degenerate ray: partial -| f = 0");
  if (!contract(partial, h).is_zero())
    throw HypothesisError("hypothesis partial^2 -| f = 0 fails");

  // All six ideals contain I*J, which contains m^(N_I+N_J): every
  // containment below is decided exactly at D = N_I + N_J + 1.
  TruncatedIdeal i_ideal = annihilator(f);
  TruncatedIdeal j_ideal = annihilator(h);
  int d_cmp = i_ideal.nilpotency_bound() + j_ideal.nilpotency_bound() + 1;
  TruncatedIdeal isq = ideal_combine(IdealCombineKind::product, i_ideal, i_ideal);
  TruncatedIdeal col = colon(isq, partial).reembedded(d_cmp);
  TruncatedIdeal jsq = ideal_combine(IdealCombineKind::product, j_ideal, j_ideal)
                           .reembedded(d_cmp);
  TruncatedIdeal ij = ideal_combine(IdealCombineKind::product, i_ideal, j_ideal)
                          .reembedded(d_cmp);
  TruncatedIdeal i_at = i_ideal.reembedded(d_cmp);
  TruncatedIdeal lhs = ideal_combine(
      IdealCombineKind::intersection,
      ideal_combine(IdealCombineKind::intersection, i_at, jsq), col);

  FlatnessVerdict out;
  out.holds = ij.contains(lhs);
  if (!out.holds) {
    for (const auto& [pivot, row] : lhs.echelon().rows()) {
      Operator cand = vec_to_op(row, lhs.table(), lhs.vars(), lhs.field());
      if (!ij.contains(cand)) {
        out.witness = std::move(cand);
        break;
      }
    }
  }
  return out;
}

CleavableVerdict cleavable_stretched(const DpPoly& f, int pivot) {
  if (f.is_zero()) throw ZeroInputError("cleavable_stretched of zero");
  int d = f.degree();
  int n = f.vars();
  Monomial lead = Monomial::power(n, pivot, d);
  if (!f.coefficient(lead).is_one())
    throw HypothesisError(
        "expected x^[d] + g shape: normalize with top_degree_twist first");
  DpPoly g = f;
  g.add_term(lead, -Scalar::one(f.field()));

  CleavableVerdict out;
  DpPoly cur = g;
  Operator dx = Operator::variable(n, f.field(), pivot);
  for (int c = 0; c <= d; ++c) {
    if (cur.is_zero()) {
      if (2 * c <= d) {
        out.cleavable = true;
        out.c = c;
      }
      return out;
    }
    cur = contract(dx, cur);
  }
  return out;
}

}  // namespace apolar
