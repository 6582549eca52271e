#include "apolar/ideal.hpp"

#include <algorithm>
#include <deque>

#include "apolar/errors.hpp"

namespace apolar {

TruncatedIdeal::TruncatedIdeal(int n, FieldSpec field, int trunc)
    : n_(n),
      field_(field),
      trunc_(trunc),
      nilp_(trunc),
      table_(std::make_shared<MonomialTable>(n, trunc - 1)),
      ech_(table_.get()) {
  if (trunc < 1) throw Error("truncation exponent must be positive");
}

SparseVec TruncatedIdeal::var_mul(const SparseVec& v, int k) const {
  SparseVec r;
  r.reserve(v.size());
  for (const auto& [idx, c] : v) {
    Monomial m = table_->monomial(idx) * Monomial::variable(n_, k);
    if (m.degree() <= table_->max_degree()) r.emplace_back(table_->index(m), c);
  }
  return r;
}

void TruncatedIdeal::saturate(std::vector<SparseVec> seeds) {
  // Fixpoint: every inserted row is multiplied by every variable until
  // nothing new appears.
  //
  // Homogeneous representations admit a shortcut: once a graded slice is
  // full, every monomial of that degree is a member, so all higher
  // monomials can be enqueued at once.  For non-homogeneous ideals a full
  // pivot slice does not imply monomial membership, so the plain fixpoint
  // runs to the end.
  bool homogeneous = true;
  for (const auto& seed : seeds) {
    int d0 = table_->degree_of(seed.front().first);
    for (const auto& [idx, c] : seed)
      if (table_->degree_of(idx) != d0) homogeneous = false;
  }
  std::deque<SparseVec> work(seeds.begin(), seeds.end());
  std::sort(work.begin(), work.end(), [](const SparseVec& a, const SparseVec& b) {
    return a.front().first < b.front().first;
  });
  int filled_from = trunc_;
  while (!work.empty()) {
    SparseVec red = ech_.reduce(std::move(work.front()));
    work.pop_front();
    if (red.empty()) continue;
    Scalar lead = red.front().second;
    if (!lead.is_one()) red = sv_scaled(red, lead.inverse());
    int pd = table_->degree_of(red.front().first);
    if (!(red.size() == 1 && pd >= filled_from)) {
      for (int k = 0; k < n_; ++k) {
        SparseVec prod = var_mul(red, k);
        if (!prod.empty()) work.push_back(std::move(prod));
      }
    }
    ech_.insert(red);
    if (homogeneous && pd < filled_from &&
        ech_.rank_degree_eq(pd) == table_->degree_count(pd)) {
      int old = filled_from;
      filled_from = pd;
      for (int e = pd; e < old; ++e)
        for (int idx = table_->degree_start(e); idx < table_->degree_start(e + 1); ++idx)
          work.push_back({{idx, Scalar::one(field_)}});
    }
  }
}

void TruncatedIdeal::detect_nilpotency() {
  // Least N with every monomial of degree N..D-1 a member (honest
  // reductions, not pivot counts: a full pivot slice of a non-homogeneous
  // ideal does not contain the monomials themselves).
  nilp_ = trunc_;
  for (int e = trunc_ - 1; e >= 0; --e) {
    bool all_in = true;
    for (int idx = table_->degree_start(e);
         all_in && idx < table_->degree_start(e + 1); ++idx)
      all_in = ech_.contains({{idx, Scalar::one(field_)}});
    if (all_in)
      nilp_ = e;
    else
      break;
  }
}

void TruncatedIdeal::extract_generators() {
  gens_.clear();
  // Sub-ideal generated by the accepted rows, saturated up to the degree
  // frontier before each membership test.  pending[q] holds rows whose
  // variable products (of top degree q+1) are still to be formed.
  Echelon sub(table_.get());
  std::vector<std::vector<SparseVec>> pending(trunc_ + 1);
  auto sub_insert = [&](SparseVec v) {
    SparseVec red = sub.reduce(std::move(v));
    if (red.empty()) return;
    int deg = table_->degree_of(red.front().first);
    pending[deg].push_back(red);
    sub.insert(std::move(red));
  };
  auto pump = [&](int frontier) {
    bool again = true;
    while (again) {
      again = false;
      for (int q = 0; q < frontier && q < trunc_; ++q) {
        while (!pending[q].empty()) {
          SparseVec r = std::move(pending[q].back());
          pending[q].pop_back();
          for (int k = 0; k < n_; ++k) {
            SparseVec prod = var_mul(r, k);
            if (!prod.empty()) sub_insert(std::move(prod));
          }
          again = true;
        }
      }
    }
  };
  std::vector<std::pair<int, const SparseVec*>> rows;  // (pivot, row)
  for (const auto& [pivot, row] : ech_.rows()) rows.emplace_back(pivot, &row);
  std::sort(rows.begin(), rows.end());
  for (const auto& [pivot, row] : rows) {
    int e = table_->degree_of(pivot);
    pump(e);
    if (!sub.contains(*row)) {
      gens_.push_back(vec_to_op(*row, *table_, n_, field_));
      sub_insert(*row);
    }
  }
}

void TruncatedIdeal::check_closure() const {
  for (const auto& [pivot, row] : ech_.rows()) {
    // bare monomials above the certified bound multiply to members
    if (row.size() == 1 && table_->degree_of(pivot) >= nilp_) continue;
    for (int k = 0; k < n_; ++k)
      if (!ech_.contains(var_mul(row, k)))
        throw Error("internal: ideal representation not closed under m_S");
  }
}

TruncatedIdeal TruncatedIdeal::from_generators(std::vector<Operator> gens,
                                               int trunc_exp) {
  if (gens.empty()) throw Error("ideal needs at least one generator");
  TruncatedIdeal ideal(gens[0].vars(), gens[0].field(), trunc_exp);
  std::vector<SparseVec> seeds;
  for (const auto& g : gens) {
    check_same_ambient(g, gens[0]);
    Operator t = g.truncated(trunc_exp - 1);
    if (!t.is_zero()) seeds.push_back(to_vec(t, *ideal.table_));
  }
  if (seeds.empty()) throw Error("all generators vanish below the truncation");
  ideal.saturate(std::move(seeds));
  ideal.detect_nilpotency();
  ideal.extract_generators();
  ideal.check_closure();
  return ideal;
}

bool TruncatedIdeal::contains(const Operator& sigma) const {
  Operator t = sigma.truncated(trunc_ - 1);
  if (t.is_zero()) return true;
  return ech_.contains(to_vec(t, *table_));
}

bool TruncatedIdeal::contains(const TruncatedIdeal& other) const {
  if (other.trunc_ != trunc_)
    throw MismatchError("ideal containment needs equal truncation exponents");
  for (const auto& [pivot, row] : other.ech_.rows())
    if (!ech_.contains(row)) return false;
  return true;
}

bool TruncatedIdeal::equals(const TruncatedIdeal& other) const {
  return ech_.rank() == other.ech_.rank() && contains(other);
}

Operator TruncatedIdeal::reduce(const Operator& sigma) const {
  SparseVec v = to_vec(sigma.truncated(trunc_ - 1), *table_);
  return vec_to_op(ech_.reduce(std::move(v)), *table_, n_, field_);
}

long TruncatedIdeal::quotient_dimension() const {
  if (!nilpotency_certified())
    throw PrecisionError("nilpotency bound not certified at truncation " +
                         std::to_string(trunc_));
  long dim = 0;
  for (int e = 0; e < nilp_; ++e)
    dim += table_->degree_count(e) - ech_.rank_degree_eq(e);
  return dim;
}

std::vector<int> TruncatedIdeal::quotient_hilbert() const {
  if (!nilpotency_certified())
    throw PrecisionError("nilpotency bound not certified at truncation " +
                         std::to_string(trunc_));
  std::vector<int> h;
  for (int e = 0; e < nilp_; ++e)
    h.push_back(table_->degree_count(e) - ech_.rank_degree_eq(e));
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

bool TruncatedIdeal::is_homogeneous() const {
  for (const auto& [pivot, row] : ech_.rows()) {
    int d = table_->degree_of(pivot);
    for (const auto& [idx, c] : row)
      if (table_->degree_of(idx) != d) return false;
  }
  return true;
}

TruncatedIdeal TruncatedIdeal::initial_ideal() const {
  TruncatedIdeal out(n_, field_, trunc_);
  // Top forms of the triangular rows span the initial ideal degreewise.
  for (const auto& [pivot, row] : ech_.rows()) {
    int d = table_->degree_of(pivot);
    SparseVec top;
    for (const auto& [idx, c] : row) {
      if (table_->degree_of(idx) != d) break;  // rows are degree-descending
      top.emplace_back(idx, c);
    }
    out.ech_.insert(std::move(top));
  }
  out.detect_nilpotency();
  out.extract_generators();
  out.check_closure();
  return out;
}

TruncatedIdeal TruncatedIdeal::reembedded(int new_trunc) const {
  if (new_trunc == trunc_) return *this;
  if (new_trunc < trunc_) return restricted(new_trunc);
  return from_generators(gens_, new_trunc);
}

TruncatedIdeal TruncatedIdeal::restricted(int new_trunc) const {
  if (new_trunc > trunc_) throw Error("restricted() cannot grow the truncation");
  TruncatedIdeal out(n_, field_, new_trunc);
  std::vector<SparseVec> seeds;
  for (const auto& [pivot, row] : ech_.rows()) {
    SparseVec v;
    for (const auto& [idx, c] : row) {
      const Monomial& m = table_->monomial(idx);
      if (m.degree() < new_trunc) v.emplace_back(out.table_->index(m), c);
    }
    if (!v.empty()) seeds.push_back(std::move(v));
  }
  for (auto& v : seeds) out.ech_.insert(std::move(v));
  out.detect_nilpotency();
  out.extract_generators();
  out.check_closure();
  return out;
}

namespace {

int effective_bound(const TruncatedIdeal& ideal) {
  return ideal.nilpotency_certified() ? ideal.nilpotency_bound()
                                      : ideal.truncation();
}

}  // namespace

TruncatedIdeal ideal_combine(IdealCombineKind kind, const TruncatedIdeal& a,
                             const TruncatedIdeal& b) {
  if (a.vars() != b.vars() || a.field() != b.field())
    throw MismatchError("ideal operands live in different ambient rings");

  if (kind == IdealCombineKind::product) {
    // Generators determine the product; m^(Na+Nb) lies inside it, so the
    // representation at Na+Nb+1 is exact.
    int target = a.nilpotency_certified() && b.nilpotency_certified()
                     ? a.nilpotency_bound() + b.nilpotency_bound() + 1
                     : std::min(a.truncation(), b.truncation());
    std::vector<Operator> gens;
    for (const auto& ga : a.generators())
      for (const auto& gb : b.generators()) gens.push_back(ga * gb);
    return TruncatedIdeal::from_generators(std::move(gens), target);
  }

  int d = std::min(a.truncation(), b.truncation());
  TruncatedIdeal ra = a.truncation() == d ? a : a.restricted(d);
  TruncatedIdeal rb = b.truncation() == d ? b : b.restricted(d);

  if (kind == IdealCombineKind::sum) {
    std::vector<Operator> gens = ra.generators();
    for (const auto& g : rb.generators()) gens.push_back(g);
    return TruncatedIdeal::from_generators(std::move(gens), d);
  }

  // intersection: rows of ra that lie in rb, found by reducing ra's rows
  // against rb and taking the kernel of the residue map.
  LinearSolver solver(a.field());
  std::vector<std::pair<int, const SparseVec*>> rows;
  for (const auto& [pivot, row] : ra.echelon().rows())
    rows.emplace_back(pivot, &row);
  std::sort(rows.begin(), rows.end());
  std::vector<Operator> gens;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    SparseVec residue = rb.echelon().reduce(*rows[t].second);
    if (auto combo = solver.feed(static_cast<int>(t), std::move(residue))) {
      SparseVec elt;
      for (const auto& [label, c] : *combo)
        elt = sv_add_scaled(elt, *rows[label].second, c);
      if (!elt.empty())
        gens.push_back(vec_to_op(elt, ra.table(), ra.vars(), ra.field()));
    }
  }
  if (gens.empty())
    throw PrecisionError("intersection is zero below the truncation");
  return TruncatedIdeal::from_generators(std::move(gens), d);
}

TruncatedIdeal colon(const TruncatedIdeal& ideal, const Operator& sigma) {
  if (sigma.is_zero()) throw ZeroInputError("colon by the zero operator");
  check_same_ambient(sigma, ideal.generators().at(0));
  const MonomialTable& table = ideal.table();
  int d = ideal.truncation();
  // S_{<D} = I + span(standard monomials); tau = i + c has tau*sigma in I
  // iff c*sigma reduces to zero, so the colon is I plus the kernel over the
  // standard monomials.
  LinearSolver solver(ideal.field());
  std::vector<int> std_monomials;
  for (int idx = 0; idx < table.size(); ++idx)
    if (!ideal.echelon().rows().count(idx)) std_monomials.push_back(idx);
  std::vector<Operator> gens = ideal.generators();
  for (int idx : std_monomials) {
    Operator mu = Operator::monomial(ideal.vars(), ideal.field(),
                                     table.monomial(idx));
    Operator prod = (mu * sigma).truncated(d - 1);
    SparseVec residue = prod.is_zero()
                            ? SparseVec{}
                            : ideal.echelon().reduce(to_vec(prod, table));
    if (auto combo = solver.feed(idx, std::move(residue))) {
      gens.push_back(vec_to_op(*combo, table, ideal.vars(), ideal.field()));
    }
  }
  return TruncatedIdeal::from_generators(std::move(gens), d);
}

}  // namespace apolar
