#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ptc/morphism.hpp"
#include "ptc/presentation.hpp"

namespace ptc {

// One degree of H^*(A): cocycles, coboundaries, a fixed canonical set of
// class representatives, and a solver expressing any cocycle in class
// coordinates modulo coboundaries. Queries are exact; the representative
// basis is canonical, so identical presentations yield identical slices.
// The solver keeps scratch state, so a single slice must not be queried
// from two threads at once.
class CohomologySlice {
 public:
  CohomologySlice(const CdgaPresentation& p, int degree);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  const SliceBasis& ambient() const { return ambient_; }
  const SubspaceBasis& cocycles() const { return cocycles_; }
  const SubspaceBasis& coboundaries() const { return coboundaries_; }
  const std::vector<SparseVec>& representatives() const { return reps_; }

  GradedPoly representative_poly(int i) const;
  // Element of the slice with the given class coordinates.
  GradedPoly poly_from_class(const SparseVec& class_coords) const;

  // Class coordinates of a cocycle, as a sparse vector over the fixed
  // representative basis. Throws MathError("NotCocycle") otherwise.
  SparseVec class_coords(const GradedPoly& z) const;
  SparseVec class_coords(const SparseVec& ambient_coords) const;

 private:
  int degree_;
  SliceBasis ambient_;
  SubspaceBasis cocycles_;
  SubspaceBasis coboundaries_;
  std::vector<SparseVec> reps_;  // ambient coordinates, canonical
  mutable Eliminator solver_;
};

// Memoized per-degree cohomology of one presentation. Slice population is
// serialized by a mutex; results are identical regardless of query order.
class CohomologyCache {
 public:
  explicit CohomologyCache(std::shared_ptr<const CdgaPresentation> p);

  const CdgaPresentation& presentation() const { return *p_; }
  std::shared_ptr<const CdgaPresentation> presentation_ptr() const { return p_; }

  const CohomologySlice& slice(int n);
  int dim(int n) { return slice(n).dim(); }

 private:
  std::shared_ptr<const CdgaPresentation> p_;
  std::mutex mu_;
  std::map<int, std::unique_ptr<const CohomologySlice>> slices_;
};

// One degree of cohomology of an abstract cochain complex, given the
// outgoing differential on this slice and the incoming one from the slice
// below, both over fixed coordinates. Used for quotient complexes whose
// slices are not monomial spans.
class ComplexSlice {
 public:
  ComplexSlice(const RationalMatrix& outgoing, const RationalMatrix& incoming);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  const SubspaceBasis& cocycles() const { return cocycles_; }
  const SubspaceBasis& coboundaries() const { return coboundaries_; }

  // Class coordinates of a cocycle over the canonical representative
  // basis. Throws MathError("NotCocycle") otherwise.
  SparseVec class_coords(const SparseVec& v) const;

 private:
  int ambient_;
  SubspaceBasis cocycles_;
  SubspaceBasis coboundaries_;
  std::vector<SparseVec> reps_;
  mutable Eliminator solver_;
};

// H^n(phi) in class coordinates, with its kernel as a subspace of the
// source class-coordinate space.
struct InducedMap {
  RationalMatrix matrix;
  SubspaceBasis kernel_classes;
};
InducedMap induced_map(const CdgaMorphism& phi, CohomologyCache& source, CohomologyCache& target,
                       int n);

// Cup product in class coordinates: multiply chosen representatives, reduce
// modulo coboundaries. Independent of the representative choice.
SparseVec class_product(CohomologyCache& cache, int deg_a, const SparseVec& a, int deg_b,
                        const SparseVec& b);

enum class Exactness { exact, at_least };
std::string exactness_str(Exactness e);

struct CupLength {
  int value = 0;
  Exactness status = Exactness::at_least;
};

// Nilpotency of the positive-degree cohomology ideal through `cutoff`:
// the largest k with a nonzero product of k positive-degree classes.
// Exact when the algebra is finite-dimensional with top inside the window
// or the user declared a vanishing degree inside the window.
CupLength cuplength(CohomologyCache& cache, int cutoff);

}  // namespace ptc
