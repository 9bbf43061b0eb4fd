#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptc/rational.hpp"

namespace ptc {

// Sparse vector: (index, value) pairs, sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> sparse_to_dense(const SparseVec& v, int dim);
bool sparse_is_zero(const SparseVec& v);
SparseVec sparse_scale(const SparseVec& v, const Rational& c);
// x + c*y, merged.
SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y);
Rational sparse_get(const SparseVec& v, int idx);

// Incremental reduced-row-echelon eliminator over sparse rows.
//
// Rows are kept fully reduced (each row is zero at every other row's pivot
// and its own pivot entry is 1), so the stored rows are the canonical RREF
// basis of the span regardless of insertion order. Rows may carry an
// auxiliary "tag" vector living in a separate coordinate space; tags follow
// the same row operations, which turns the eliminator into a solver: if the
// tag of an inserted vector is its identity coordinate, reduction reports
// the coefficients of any member vector in terms of the inserted ones.
//
// Not safe for concurrent use (keeps an internal scratch buffer).
class Eliminator {
 public:
  explicit Eliminator(int ambient_dim);

  int ambient() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Residual of v after reduction against the stored rows. If tag_out is
  // non-null it receives sum(c_p * tag_p) over the eliminated rows, i.e. the
  // representation of (v - residual) in tag space.
  SparseVec reduce(const SparseVec& v, SparseVec* tag_out = nullptr) const;

  // Inserts v (carrying `tag`); returns true if the rank grew.
  bool insert(const SparseVec& v, const SparseVec& tag = {});

  bool contains(const SparseVec& v) const { return sparse_is_zero(reduce(v)); }

  // Canonical RREF rows in ascending pivot order, with their pivots/tags.
  std::vector<int> pivots() const;
  std::vector<SparseVec> basis() const;
  const SparseVec& row_for_pivot(int pivot) const;
  const SparseVec& tag_for_pivot(int pivot) const;
  bool has_pivot(int pivot) const { return rows_.count(pivot) > 0; }

 private:
  struct Row {
    SparseVec vec;
    SparseVec tag;
  };
  int dim_;
  std::map<int, Row> rows_;  // pivot -> fully reduced row
  mutable std::vector<Rational> scratch_;
  mutable std::vector<int> touched_;
};

// Dense-constructible sparse matrix with row-major sparse storage.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
  static RationalMatrix identity(int n);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int i, int j, const Rational& v);
  Rational get(int i, int j) const;
  const SparseVec& row(int i) const { return data_[i]; }
  void set_row(int i, SparseVec r) { data_[i] = std::move(r); }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // M*x
  SparseVec apply(const SparseVec& x) const;
  RationalMatrix multiply(const RationalMatrix& other) const;  // this * other
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& o) const;

 private:
  int rows_, cols_;
  std::vector<SparseVec> data_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<int> pivots;
  int rank;
};

// Reduced row echelon form (leading 1s, zeros above and below each pivot).
RrefResult rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);

// Canonical basis of a subspace of Q^dim: RREF rows with strictly increasing
// pivot columns. Two equal subspaces produce identical objects.
class SubspaceBasis {
 public:
  SubspaceBasis() : dim_(0) {}
  explicit SubspaceBasis(int ambient_dim) : dim_(ambient_dim) {}
  static SubspaceBasis from_vectors(int ambient_dim, const std::vector<SparseVec>& vecs);

  int ambient() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const SparseVec& v) const;
  bool operator==(const SubspaceBasis& o) const;

 private:
  friend SubspaceBasis kernel(const RationalMatrix&);
  friend SubspaceBasis subspace_sum(const SubspaceBasis&, const SubspaceBasis&);
  friend SubspaceBasis subspace_intersect(const SubspaceBasis&, const SubspaceBasis&);
  int dim_;
  std::vector<SparseVec> rows_;  // ascending pivot order
  std::vector<int> pivots_;
};

// Basis of the null space {x : Mx = 0}.
SubspaceBasis kernel(const RationalMatrix& m);

// A particular solution of Mx = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// Coefficients of v in terms of basis.rows(), or nullopt if v is outside.
std::optional<std::vector<Rational>> membership(const SparseVec& v, const SubspaceBasis& basis);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// Representatives of cosets forming a basis of whole/sub. Requires
// sub <= whole (throws MathError("NotSubspace") otherwise). The returned
// vectors lie in `whole`, are reduced against `sub` and against each other,
// and are canonical for the pair.
std::vector<SparseVec> quotient_basis(const SubspaceBasis& whole, const SubspaceBasis& sub);

}  // namespace ptc
