#pragma once

#include <functional>
#include <map>

#include "ptc/cohomology.hpp"

namespace ptc {

// A graded subspace: one SubspaceBasis per degree, each inside that degree's
// canonical coordinate space (monomial coordinates at the algebra level,
// class coordinates at the cohomology level). Degrees with no entry are zero.
struct GradedSpan {
  std::map<int, SubspaceBasis> slices;

  bool empty() const;
  int total_dim() const;
  std::optional<int> min_degree() const;
  const SubspaceBasis* slice(int degree) const;
  void add_vector(int degree, int ambient_dim, const SparseVec& v);
};

// Degreewise multiplication interface shared by the algebra and cohomology
// levels: `dim(n)` is the coordinate dimension of degree n and `mul` the
// product of coordinate vectors landing in degree da+db.
class DegreewiseAlgebra {
 public:
  virtual ~DegreewiseAlgebra() = default;
  virtual int dim(int degree) = 0;
  virtual SparseVec mul(int deg_a, const SparseVec& a, int deg_b, const SparseVec& b) = 0;
};

// Monomial-coordinate multiplication in a presentation's underlying algebra.
class PolynomialAlgebra : public DegreewiseAlgebra {
 public:
  explicit PolynomialAlgebra(std::shared_ptr<const CdgaPresentation> p) : p_(std::move(p)) {}
  int dim(int degree) override;
  SparseVec mul(int deg_a, const SparseVec& a, int deg_b, const SparseVec& b) override;
  const SliceBasis& basis(int degree);
  const CdgaPresentation& presentation() const { return *p_; }

 private:
  std::shared_ptr<const CdgaPresentation> p_;
  std::map<int, SliceBasis> bases_;
};

// Class-coordinate multiplication in H^*(A).
class CohomologyAlgebra : public DegreewiseAlgebra {
 public:
  explicit CohomologyAlgebra(CohomologyCache& cache) : cache_(cache) {}
  int dim(int degree) override;
  SparseVec mul(int deg_a, const SparseVec& a, int deg_b, const SparseVec& b) override;
  CohomologyCache& cache() { return cache_; }

 private:
  CohomologyCache& cache_;
};

// Span of all pairwise products a*b with a in A, b in B, through `cutoff`.
GradedSpan span_products(DegreewiseAlgebra& alg, const GradedSpan& a, const GradedSpan& b,
                         int cutoff);

// A minimal set of ideal generators for a graded ideal, extracted by
// ascending degree: at each degree, the ideal slice modulo the span of
// lower-degree generators times the ambient algebra. Products of k of these
// generators span the same degrees as k-fold products of the full ideal
// (within the window), which is what the nil computation needs.
GradedSpan extract_ideal_generators(DegreewiseAlgebra& alg, const GradedSpan& ideal, int cutoff);

// Largest k with a nonzero k-fold product of the given ideal generators
// inside the window. `top_power` is the span of the k-fold products.
struct NilResult {
  int value = 0;
  GradedSpan top_power;
};
NilResult nil_of_ideal(DegreewiseAlgebra& alg, const GradedSpan& generators, int cutoff);

}  // namespace ptc
