#include "ptc/cohomology.hpp"

#include "ptc/errors.hpp"
#include "ptc/nil.hpp"

namespace ptc {

CohomologySlice::CohomologySlice(const CdgaPresentation& p, int degree)
    : degree_(degree), solver_(0) {
  p.require_validated();
  if (degree < 0) {
    ambient_ = SliceBasis(degree, {});
    cocycles_ = SubspaceBasis(0);
    coboundaries_ = SubspaceBasis(0);
    return;
  }
  ambient_ = monomial_basis(p.generators(), degree);
  RationalMatrix d_n = p.differential_matrix(degree);
  cocycles_ = kernel(d_n);

  coboundaries_ = SubspaceBasis(ambient_.dim());
  if (degree >= 1) {
    SliceBasis below = monomial_basis(p.generators(), degree - 1);
    std::vector<SparseVec> images;
    images.reserve(static_cast<std::size_t>(below.dim()));
    for (int j = 0; j < below.dim(); ++j) {
      GradedPoly dj = p.apply_differential(GradedPoly::term(below.at(j), Rational(1)));
      if (!dj.is_zero()) images.push_back(ambient_.coords(dj));
    }
    coboundaries_ = SubspaceBasis::from_vectors(ambient_.dim(), images);
  }

  reps_ = quotient_basis(cocycles_, coboundaries_);

  solver_ = Eliminator(ambient_.dim());
  for (const auto& b : coboundaries_.rows()) solver_.insert(b);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    solver_.insert(reps_[i], {{static_cast<int>(i), Rational(1)}});
  }
}

GradedPoly CohomologySlice::representative_poly(int i) const {
  return ambient_.from_coords(reps_[static_cast<std::size_t>(i)]);
}

GradedPoly CohomologySlice::poly_from_class(const SparseVec& class_coords) const {
  GradedPoly out;
  for (const auto& [i, c] : class_coords) {
    out += representative_poly(i).scaled(c);
  }
  return out;
}

SparseVec CohomologySlice::class_coords(const GradedPoly& z) const {
  return class_coords(ambient_.coords(z));
}

SparseVec CohomologySlice::class_coords(const SparseVec& ambient_coords) const {
  SparseVec tag;
  SparseVec residual = solver_.reduce(ambient_coords, &tag);
  if (!sparse_is_zero(residual)) {
    throw MathError("NotCocycle",
                    "element of degree " + std::to_string(degree_) + " is not a cocycle");
  }
  return tag;
}

ComplexSlice::ComplexSlice(const RationalMatrix& outgoing, const RationalMatrix& incoming)
    : ambient_(outgoing.cols()), solver_(outgoing.cols()) {
  if (incoming.rows() != ambient_) {
    throw MathError("ShapeMismatch", "incoming differential lands in a space of dimension " +
                                         std::to_string(incoming.rows()) + ", expected " +
                                         std::to_string(ambient_));
  }
  cocycles_ = kernel(outgoing);
  std::vector<SparseVec> images;
  images.reserve(static_cast<std::size_t>(incoming.cols()));
  for (int j = 0; j < incoming.cols(); ++j) {
    SparseVec col;
    for (int i = 0; i < incoming.rows(); ++i) {
      Rational v = incoming.get(i, j);
      if (!v.is_zero()) col.emplace_back(i, v);
    }
    if (!col.empty()) images.push_back(std::move(col));
  }
  coboundaries_ = SubspaceBasis::from_vectors(ambient_, images);
  reps_ = quotient_basis(cocycles_, coboundaries_);
  for (const auto& b : coboundaries_.rows()) solver_.insert(b);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    solver_.insert(reps_[i], {{static_cast<int>(i), Rational(1)}});
  }
}

SparseVec ComplexSlice::class_coords(const SparseVec& v) const {
  SparseVec tag;
  SparseVec residual = solver_.reduce(v, &tag);
  if (!sparse_is_zero(residual)) {
    throw MathError("NotCocycle", "element is not a cocycle of the complex");
  }
  return tag;
}

CohomologyCache::CohomologyCache(std::shared_ptr<const CdgaPresentation> p) : p_(std::move(p)) {
  p_->require_validated();
}

const CohomologySlice& CohomologyCache::slice(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = slices_.find(n);
  if (it == slices_.end()) {
    it = slices_.emplace(n, std::make_unique<const CohomologySlice>(*p_, n)).first;
  }
  return *it->second;
}

InducedMap induced_map(const CdgaMorphism& phi, CohomologyCache& source, CohomologyCache& target,
                       int n) {
  const CohomologySlice& s = source.slice(n);
  const CohomologySlice& t = target.slice(n);
  RationalMatrix m(t.dim(), s.dim());
  std::vector<SparseVec> rows(static_cast<std::size_t>(t.dim()));
  for (int j = 0; j < s.dim(); ++j) {
    GradedPoly img = phi.apply(s.representative_poly(j));
    for (const auto& [i, val] : t.class_coords(img)) {
      rows[static_cast<std::size_t>(i)].emplace_back(j, val);
    }
  }
  for (int i = 0; i < t.dim(); ++i) m.set_row(i, std::move(rows[static_cast<std::size_t>(i)]));
  return InducedMap{m, kernel(m)};
}

SparseVec class_product(CohomologyCache& cache, int deg_a, const SparseVec& a, int deg_b,
                        const SparseVec& b) {
  const CohomologySlice& sa = cache.slice(deg_a);
  const CohomologySlice& sb = cache.slice(deg_b);
  GradedPoly prod = poly_mul(sa.poly_from_class(a), sb.poly_from_class(b),
                             cache.presentation().generators());
  return cache.slice(deg_a + deg_b).class_coords(prod);
}

std::string exactness_str(Exactness e) {
  return e == Exactness::exact ? "exact" : "at_least";
}

CupLength cuplength(CohomologyCache& cache, int cutoff) {
  CohomologyAlgebra alg(cache);
  GradedSpan positive;
  for (int n = 1; n <= cutoff; ++n) {
    int d = cache.dim(n);
    if (d == 0) continue;
    std::vector<SparseVec> all;
    for (int i = 0; i < d; ++i) all.push_back({{i, Rational(1)}});
    positive.slices.emplace(n, SubspaceBasis::from_vectors(d, all));
  }
  GradedSpan gens = extract_ideal_generators(alg, positive, cutoff);
  NilResult nil = nil_of_ideal(alg, gens, cutoff);

  CupLength out;
  out.value = nil.value;
  const CdgaPresentation& p = cache.presentation();
  bool window_complete = false;
  if (p.finite_dimensional() && *p.algebra_top() <= cutoff) window_complete = true;
  if (p.meta().declared_top && *p.meta().declared_top <= cutoff) window_complete = true;
  out.status = window_complete ? Exactness::exact : Exactness::at_least;
  return out;
}

}  // namespace ptc
