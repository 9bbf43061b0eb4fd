#include "ptc/nil.hpp"

#include "ptc/errors.hpp"

namespace ptc {

bool GradedSpan::empty() const {
  for (const auto& [deg, basis] : slices) {
    if (basis.dim() > 0) return false;
  }
  return true;
}

int GradedSpan::total_dim() const {
  int total = 0;
  for (const auto& [deg, basis] : slices) total += basis.dim();
  return total;
}

std::optional<int> GradedSpan::min_degree() const {
  for (const auto& [deg, basis] : slices) {
    if (basis.dim() > 0) return deg;
  }
  return std::nullopt;
}

const SubspaceBasis* GradedSpan::slice(int degree) const {
  auto it = slices.find(degree);
  return it == slices.end() ? nullptr : &it->second;
}

void GradedSpan::add_vector(int degree, int ambient_dim, const SparseVec& v) {
  auto it = slices.find(degree);
  if (it == slices.end()) {
    it = slices.emplace(degree, SubspaceBasis(ambient_dim)).first;
  }
  std::vector<SparseVec> rows = it->second.rows();
  rows.push_back(v);
  it->second = SubspaceBasis::from_vectors(ambient_dim, rows);
}

int PolynomialAlgebra::dim(int degree) { return basis(degree).dim(); }

const SliceBasis& PolynomialAlgebra::basis(int degree) {
  auto it = bases_.find(degree);
  if (it == bases_.end()) {
    it = bases_.emplace(degree, monomial_basis(p_->generators(), degree)).first;
  }
  return it->second;
}

SparseVec PolynomialAlgebra::mul(int deg_a, const SparseVec& a, int deg_b, const SparseVec& b) {
  GradedPoly pa = basis(deg_a).from_coords(a);
  GradedPoly pb = basis(deg_b).from_coords(b);
  return basis(deg_a + deg_b).coords(poly_mul(pa, pb, p_->generators()));
}

int CohomologyAlgebra::dim(int degree) { return cache_.dim(degree); }

SparseVec CohomologyAlgebra::mul(int deg_a, const SparseVec& a, int deg_b, const SparseVec& b) {
  return class_product(cache_, deg_a, a, deg_b, b);
}

GradedSpan span_products(DegreewiseAlgebra& alg, const GradedSpan& a, const GradedSpan& b,
                         int cutoff) {
  std::map<int, Eliminator> elim;
  for (const auto& [da, basis_a] : a.slices) {
    if (basis_a.dim() == 0) continue;
    for (const auto& [db, basis_b] : b.slices) {
      if (basis_b.dim() == 0) continue;
      int n = da + db;
      if (n > cutoff) continue;
      int ambient = alg.dim(n);
      if (ambient == 0) continue;
      auto it = elim.find(n);
      if (it == elim.end()) it = elim.emplace(n, Eliminator(ambient)).first;
      Eliminator& e = it->second;
      for (const auto& va : basis_a.rows()) {
        if (e.rank() == ambient) break;
        for (const auto& vb : basis_b.rows()) {
          if (e.rank() == ambient) break;
          SparseVec prod = alg.mul(da, va, db, vb);
          if (!sparse_is_zero(prod)) e.insert(prod);
        }
      }
    }
  }
  GradedSpan out;
  for (auto& [n, e] : elim) {
    if (e.rank() == 0) continue;
    SubspaceBasis sb = SubspaceBasis::from_vectors(e.ambient(), e.basis());
    out.slices.emplace(n, std::move(sb));
  }
  return out;
}

GradedSpan extract_ideal_generators(DegreewiseAlgebra& alg, const GradedSpan& ideal, int cutoff) {
  GradedSpan gens;
  for (const auto& [n, slice] : ideal.slices) {
    if (n > cutoff || slice.dim() == 0) continue;
    int ambient = alg.dim(n);
    // Span at degree n of (already chosen generators) * (whole algebra).
    Eliminator reached(ambient);
    for (const auto& [m, gslice] : gens.slices) {
      if (m >= n) break;
      int cdim = alg.dim(n - m);
      for (const auto& g : gslice.rows()) {
        if (reached.rank() == ambient) break;
        for (int j = 0; j < cdim; ++j) {
          if (reached.rank() == ambient) break;
          SparseVec basis_elt{{j, Rational(1)}};
          SparseVec prod = alg.mul(m, g, n - m, basis_elt);
          if (!sparse_is_zero(prod)) reached.insert(prod);
        }
      }
    }
    std::vector<SparseVec> fresh;
    for (const auto& v : slice.rows()) {
      if (reached.insert(v)) fresh.push_back(v);
    }
    if (!fresh.empty()) {
      gens.slices.emplace(n, SubspaceBasis::from_vectors(ambient, fresh));
    }
  }
  return gens;
}

NilResult nil_of_ideal(DegreewiseAlgebra& alg, const GradedSpan& generators, int cutoff) {
  NilResult result;
  if (generators.empty()) return result;
  GradedSpan power = generators;  // k = 1
  result.value = 1;
  result.top_power = power;
  while (true) {
    GradedSpan next = span_products(alg, power, generators, cutoff);
    if (next.empty()) break;
    power = std::move(next);
    result.value += 1;
    result.top_power = power;
  }
  return result;
}

}  // namespace ptc
