#include "apolar/linalg.hpp"

#include <algorithm>

#include "apolar/errors.hpp"

namespace apolar {

MonomialTable::MonomialTable(int n, int max_degree)
    : n_(n), max_degree_(max_degree) {
  starts_.push_back(0);
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& m : monomials_of_degree(n, d)) {
      pos_.emplace(m, static_cast<int>(list_.size()));
      list_.push_back(std::move(m));
    }
    starts_.push_back(static_cast<int>(list_.size()));
  }
}

int MonomialTable::index(const Monomial& m) const {
  auto it = pos_.find(m);
  if (it == pos_.end())
    throw Error("monomial outside table (degree bound " +
                std::to_string(max_degree_) + ")");
  return it->second;
}

int MonomialTable::degree_start(int e) const {
  if (e <= 0) return 0;
  if (e > max_degree_) return size();
  return starts_[e];
}

int MonomialTable::degree_count(int e) const {
  return degree_start(e + 1) - degree_start(e);
}

SparseVec sv_scaled(const SparseVec& v, const Scalar& c) {
  SparseVec r;
  if (c.is_zero()) return r;
  r.reserve(v.size());
  for (const auto& [i, x] : v) r.emplace_back(i, x * c);
  return r;
}

SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c) {
  if (c.is_zero()) return a;
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first > b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first < b[j].first) {
      r.emplace_back(b[j].first, b[j].second * c);
      ++j;
    } else {
      Scalar s = a[i].second + b[j].second * c;
      if (!s.is_zero()) r.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.emplace_back(b[j].first, b[j].second * c);
  return r;
}

bool Echelon::insert(SparseVec v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    v = sv_add_scaled(v, it->second, -v.front().second);
  }
  if (v.empty()) return false;
  Scalar lead = v.front().second;
  if (!lead.is_one()) v = sv_scaled(v, lead.inverse());
  int pivot = v.front().first;
  if (table_) rank_by_degree_[table_->degree_of(pivot)]++;
  rows_.emplace(pivot, std::move(v));
  return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
  SparseVec out;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      out.push_back(v.front());
      v.erase(v.begin());
      continue;
    }
    v = sv_add_scaled(v, it->second, -v.front().second);
  }
  return out;
}

int Echelon::rank_degree_le(int e) const {
  int c = 0;
  for (const auto& [d, k] : rank_by_degree_) {
    if (d > e) break;
    c += k;
  }
  return c;
}

int Echelon::rank_degree_eq(int e) const {
  auto it = rank_by_degree_.find(e);
  return it == rank_by_degree_.end() ? 0 : it->second;
}

std::optional<SparseVec> LinearSolver::feed(int label, SparseVec v) {
  SparseVec combo{{label, Scalar::one(field_)}};
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    Scalar c = -v.front().second;
    combo = sv_add_scaled(combo, it->second.combo, c);
    v = sv_add_scaled(v, it->second.image, c);
  }
  if (v.empty()) return combo;
  Scalar lead = v.front().second;
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    v = sv_scaled(v, inv);
    combo = sv_scaled(combo, inv);
  }
  int pivot = v.front().first;
  rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
  return std::nullopt;
}

std::optional<SparseVec> LinearSolver::solve(const SparseVec& target) const {
  SparseVec v = target, combo;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return std::nullopt;
    Scalar c = v.front().second;
    combo = sv_add_scaled(combo, it->second.combo, c);
    v = sv_add_scaled(v, it->second.image, -c);
  }
  return combo;
}

SparseVec to_vec(const DpPoly& f, const MonomialTable& t) {
  SparseVec v;
  v.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) v.emplace_back(t.index(m), c);
  return v;  // terms() iterates leading-first, so indices are decreasing
}

SparseVec to_vec(const Operator& f, const MonomialTable& t) {
  SparseVec v;
  v.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) v.emplace_back(t.index(m), c);
  return v;
}

DpPoly vec_to_dp(const SparseVec& v, const MonomialTable& t, int n,
                 const FieldSpec& field) {
  DpPoly p(n, field);
  for (const auto& [i, c] : v) p.add_term(t.monomial(i), c);
  return p;
}

Operator vec_to_op(const SparseVec& v, const MonomialTable& t, int n,
                   const FieldSpec& field) {
  Operator p(n, field);
  for (const auto& [i, c] : v) p.add_term(t.monomial(i), c);
  return p;
}

}  // namespace apolar
