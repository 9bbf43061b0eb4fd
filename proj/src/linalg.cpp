#include "ptc/linalg.hpp"

#include <algorithm>

namespace ptc {

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

std::vector<Rational> sparse_to_dense(const SparseVec& v, int dim) {
  std::vector<Rational> out(static_cast<std::size_t>(dim));
  for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] = c;
  return out;
}

bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

SparseVec sparse_scale(const SparseVec& v, const Rational& c) {
  if (c.is_zero()) return {};
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
  if (c.is_zero()) return x;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational sparse_get(const SparseVec& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != v.end() && it->first == idx) return it->second;
  return Rational(0);
}

Eliminator::Eliminator(int ambient_dim) : dim_(ambient_dim) {
  scratch_.resize(static_cast<std::size_t>(dim_));
}

SparseVec Eliminator::reduce(const SparseVec& v, SparseVec* tag_out) const {
  // Scratch-buffer elimination: rows are in RREF, so eliminating at pivot p
  // only touches columns > p and a single ascending sweep suffices.
  for (const auto& [i, c] : v) scratch_[static_cast<std::size_t>(i)] = c;
  touched_.clear();
  for (const auto& [i, c] : v) touched_.push_back(i);
  std::map<int, Rational> tag_acc;

  SparseVec residual;
  std::size_t ti = 0;
  while (ti < touched_.size()) {
    int col = touched_[ti++];
    Rational& val = scratch_[static_cast<std::size_t>(col)];
    if (val.is_zero()) continue;
    auto it = rows_.find(col);
    if (it == rows_.end()) {
      residual.emplace_back(col, val);
      val = Rational(0);
      continue;
    }
    Rational c = val;
    val = Rational(0);
    for (const auto& [j, w] : it->second.vec) {
      if (j == col) continue;  // the pivot entry (1) is being cleared
      Rational& dst = scratch_[static_cast<std::size_t>(j)];
      if (dst.is_zero()) touched_.push_back(j);
      dst -= c * w;
    }
    if (tag_out) {
      for (const auto& [j, w] : it->second.tag) {
        Rational& dst = tag_acc[j];
        dst += c * w;
      }
    }
  }
  // Non-pivot columns can be collected more than once when a later-processed
  // smaller pivot fills them back in; sort and merge duplicates.
  std::sort(residual.begin(), residual.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  for (auto& [i, c] : residual) {
    if (!merged.empty() && merged.back().first == i)
      merged.back().second += c;
    else
      merged.emplace_back(i, std::move(c));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return p.second.is_zero(); }),
               merged.end());
  residual = std::move(merged);
  if (tag_out) {
    tag_out->clear();
    for (auto& [j, w] : tag_acc)
      if (!w.is_zero()) tag_out->emplace_back(j, std::move(w));
  }
  return residual;
}

bool Eliminator::insert(const SparseVec& v, const SparseVec& tag) {
  SparseVec elim_tag;
  SparseVec res = reduce(v, tag.empty() ? nullptr : &elim_tag);
  if (res.empty()) return false;
  SparseVec new_tag = tag.empty() ? SparseVec{} : sparse_axpy(tag, Rational(-1), elim_tag);

  int pivot = res.front().first;
  Rational lead = res.front().second;
  Rational inv = Rational(1) / lead;
  SparseVec row = sparse_scale(res, inv);
  new_tag = sparse_scale(new_tag, inv);

  // Back-substitute so every stored row is zero at the new pivot.
  for (auto& [p, r] : rows_) {
    Rational c = sparse_get(r.vec, pivot);
    if (c.is_zero()) continue;
    r.vec = sparse_axpy(r.vec, -c, row);
    r.tag = sparse_axpy(r.tag, -c, new_tag);
  }
  rows_[pivot] = Row{std::move(row), std::move(new_tag)};
  return true;
}

std::vector<int> Eliminator::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVec> Eliminator::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r.vec);
  return out;
}

const SparseVec& Eliminator::row_for_pivot(int pivot) const { return rows_.at(pivot).vec; }
const SparseVec& Eliminator::tag_for_pivot(int pivot) const { return rows_.at(pivot).tag; }

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& d) {
  int r = static_cast<int>(d.size());
  int c = r == 0 ? 0 : static_cast<int>(d[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) m.data_[i] = sparse_from_dense(d[static_cast<std::size_t>(i)]);
  return m;
}

void RationalMatrix::set(int i, int j, const Rational& v) {
  SparseVec& r = data_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    r.insert(it, {j, v});
  }
}

Rational RationalMatrix::get(int i, int j) const { return sparse_get(data_[static_cast<std::size_t>(i)], j); }

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (const auto& [j, v] : data_[static_cast<std::size_t>(i)]) acc += v * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

SparseVec RationalMatrix::apply(const SparseVec& x) const {
  std::vector<Rational> dense = sparse_to_dense(x, cols_);
  return sparse_from_dense(apply(dense));
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  RationalMatrix out(rows_, other.cols());
  for (int i = 0; i < rows_; ++i) {
    SparseVec acc;
    for (const auto& [k, v] : data_[static_cast<std::size_t>(i)])
      acc = sparse_axpy(acc, v, other.data_[static_cast<std::size_t>(k)]);
    out.data_[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[static_cast<std::size_t>(i)]) out.set(j, i, v);
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const RationalMatrix& m) {
  Eliminator e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  RrefResult out{RationalMatrix(m.rows(), m.cols()), e.pivots(), e.rank()};
  auto rows = e.basis();
  for (std::size_t i = 0; i < rows.size(); ++i) out.reduced.set_row(static_cast<int>(i), rows[i]);
  return out;
}

int rank(const RationalMatrix& m) {
  Eliminator e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

SubspaceBasis SubspaceBasis::from_vectors(int ambient_dim, const std::vector<SparseVec>& vecs) {
  Eliminator e(ambient_dim);
  for (const auto& v : vecs) e.insert(v);
  SubspaceBasis out(ambient_dim);
  out.rows_ = e.basis();
  out.pivots_ = e.pivots();
  return out;
}

bool SubspaceBasis::contains(const SparseVec& v) const {
  // Rows are RREF: a single sweep against them decides membership.
  SparseVec cur = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = sparse_get(cur, pivots_[k]);
    if (!c.is_zero()) cur = sparse_axpy(cur, -c, rows_[k]);
  }
  return cur.empty();
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
  return dim_ == o.dim_ && rows_ == o.rows_;
}

SubspaceBasis kernel(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<SparseVec> gens;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    // x_f = 1, pivot variables solved from the reduced rows.
    SparseVec v;
    v.emplace_back(f, Rational(1));
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      Rational c = r.reduced.get(static_cast<int>(k), f);
      if (!c.is_zero()) v.emplace_back(r.pivots[k], -c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::from_vectors(m.cols(), gens);
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  // Express b as a combination of the columns of m.
  Eliminator e(m.rows());
  RationalMatrix t = m.transpose();
  for (int j = 0; j < m.cols(); ++j) e.insert(t.row(j), {{j, Rational(1)}});
  SparseVec tag;
  SparseVec res = e.reduce(sparse_from_dense(b), &tag);
  if (!res.empty()) return std::nullopt;
  return sparse_to_dense(tag, m.cols());
}

std::optional<std::vector<Rational>> membership(const SparseVec& v, const SubspaceBasis& basis) {
  Eliminator e(basis.ambient());
  const auto& rows = basis.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    e.insert(rows[i], {{static_cast<int>(i), Rational(1)}});
  SparseVec tag;
  SparseVec res = e.reduce(v, &tag);
  if (!res.empty()) return std::nullopt;
  return sparse_to_dense(tag, basis.dim());
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient() != b.ambient())
    throw MathError("DimensionMismatch", "subspace sum of different ambient dimensions");
  Eliminator e(a.ambient());
  for (const auto& r : a.rows()) e.insert(r);
  for (const auto& r : b.rows()) e.insert(r);
  SubspaceBasis out(a.ambient());
  out.rows_ = e.basis();
  out.pivots_ = e.pivots();
  return out;
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient() != b.ambient())
    throw MathError("DimensionMismatch", "subspace intersection of different ambient dimensions");
  // Zassenhaus: reduce rows [u | u] for u in a and [v | 0] for v in b; rows
  // whose left block vanished have right block in the intersection.
  int n = a.ambient();
  Eliminator e(2 * n);
  auto widen = [n](const SparseVec& v, bool duplicate) {
    SparseVec out = v;
    if (duplicate)
      for (const auto& [i, c] : v) out.emplace_back(i + n, c);
    return out;
  };
  for (const auto& u : a.rows()) e.insert(widen(u, true));
  for (const auto& v : b.rows()) e.insert(widen(v, false));
  std::vector<SparseVec> inter;
  for (int p : e.pivots()) {
    if (p < n) continue;
    SparseVec right;
    for (const auto& [i, c] : e.row_for_pivot(p)) right.emplace_back(i - n, c);
    inter.push_back(std::move(right));
  }
  return SubspaceBasis::from_vectors(n, inter);
}

std::vector<SparseVec> quotient_basis(const SubspaceBasis& whole, const SubspaceBasis& sub) {
  if (whole.ambient() != sub.ambient())
    throw MathError("DimensionMismatch", "quotient of different ambient dimensions");
  for (const auto& r : sub.rows())
    if (!whole.contains(r))
      throw MathError("NotSubspace", "quotient_basis: sub is not contained in whole");
  Eliminator e(whole.ambient());
  for (const auto& r : sub.rows()) e.insert(r);
  std::vector<SparseVec> out;
  for (const auto& w : whole.rows()) {
    SparseVec res = e.reduce(w);
    if (res.empty()) continue;
    Rational inv = Rational(1) / res.front().second;
    res = sparse_scale(res, inv);
    e.insert(res);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace ptc
