#include "ptc/morphism.hpp"

#include "ptc/errors.hpp"
#include "ptc/expr.hpp"

namespace ptc {

CdgaMorphism::CdgaMorphism(std::shared_ptr<const CdgaPresentation> source,
                           std::shared_ptr<const CdgaPresentation> target,
                           std::vector<GradedPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  images_.resize(source_->generators().size());
}

CdgaMorphism CdgaMorphism::identity(std::shared_ptr<const CdgaPresentation> p) {
  std::vector<GradedPoly> images;
  images.reserve(p->generators().size());
  for (int i = 0; i < p->generator_count(); ++i) images.push_back(GradedPoly::generator(i));
  CdgaMorphism m(p, p, std::move(images));
  m.validate();
  return m;
}

void CdgaMorphism::validate() {
  source_->require_validated();
  target_->require_validated();
  const auto& sgens = source_->generators();
  for (std::size_t i = 0; i < sgens.size(); ++i) {
    const GradedPoly& im = images_[i];
    if (im.is_zero()) continue;
    auto deg = im.homogeneous_degree(target_->generators());
    if (!deg || *deg != sgens[i].degree) {
      std::string found = deg ? std::to_string(*deg) : "mixed degrees";
      throw MathError("DegreeMismatch",
                      "morphism image of '" + sgens[i].name + "' has degree " + found +
                          ", expected " + std::to_string(sgens[i].degree));
    }
  }
  for (std::size_t i = 0; i < sgens.size(); ++i) {
    GradedPoly lhs = apply(source_->differential(static_cast<int>(i)));
    GradedPoly rhs = target_->apply_differential(images_[i]);
    if (!(lhs == rhs)) {
      throw MathError("NotChainMap",
                      "morphism does not commute with d on generator '" + sgens[i].name +
                          "': phi(d " + sgens[i].name + ") = " +
                          print_poly(lhs, target_->generators()) + " but d(phi " + sgens[i].name +
                          ") = " + print_poly(rhs, target_->generators()));
    }
  }
  validated_ = true;
}

GradedPoly CdgaMorphism::apply(const GradedPoly& p) const {
  const auto& tgens = target_->generators();
  GradedPoly out;
  for (const auto& [mono, coef] : p.terms()) {
    GradedPoly acc = GradedPoly::constant(coef);
    for (auto [gi, ei] : mono.factors()) {
      const GradedPoly& im = images_[static_cast<std::size_t>(gi)];
      for (int k = 0; k < ei; ++k) {
        acc = poly_mul(acc, im, tgens);
        if (acc.is_zero()) break;
      }
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

RationalMatrix CdgaMorphism::slice_matrix(int n) const {
  SliceBasis sb = monomial_basis(source_->generators(), n);
  SliceBasis tb = monomial_basis(target_->generators(), n);
  RationalMatrix m(tb.dim(), sb.dim());
  std::vector<SparseVec> rows(static_cast<std::size_t>(tb.dim()));
  for (int j = 0; j < sb.dim(); ++j) {
    GradedPoly img = apply(GradedPoly::term(sb.at(j), Rational(1)));
    for (const auto& [idx, val] : tb.coords(img)) {
      rows[static_cast<std::size_t>(idx)].emplace_back(j, val);
    }
  }
  for (int i = 0; i < tb.dim(); ++i) m.set_row(i, std::move(rows[static_cast<std::size_t>(i)]));
  return m;
}

CdgaMorphism CdgaMorphism::compose(const CdgaMorphism& g, const CdgaMorphism& f) {
  if (f.target_.get() != g.source_.get()) {
    throw MathError("BadComposition", "morphism composition with mismatched middle presentation");
  }
  std::vector<GradedPoly> images;
  images.reserve(f.images_.size());
  for (const auto& im : f.images_) images.push_back(g.apply(im));
  CdgaMorphism gf(f.source_, g.target_, std::move(images));
  gf.validate();
  return gf;
}

}  // namespace ptc
