#pragma once

#include <memory>
#include <vector>

#include "ptc/presentation.hpp"

namespace ptc {

// CDGA morphism given by generator images. Presentations are shared
// immutable objects; the morphism keeps handles to both ends.
class CdgaMorphism {
 public:
  CdgaMorphism() = default;
  CdgaMorphism(std::shared_ptr<const CdgaPresentation> source,
               std::shared_ptr<const CdgaPresentation> target,
               std::vector<GradedPoly> images);

  static CdgaMorphism identity(std::shared_ptr<const CdgaPresentation> p);

  const CdgaPresentation& source() const { return *source_; }
  const CdgaPresentation& target() const { return *target_; }
  std::shared_ptr<const CdgaPresentation> source_ptr() const { return source_; }
  std::shared_ptr<const CdgaPresentation> target_ptr() const { return target_; }
  const GradedPoly& image(int source_gen) const {
    return images_[static_cast<std::size_t>(source_gen)];
  }

  // Image degrees match and the map commutes with the differentials.
  // Throws MathError("DegreeMismatch") / MathError("NotChainMap").
  void validate();
  bool validated() const { return validated_; }

  // Substitution of generator images, multiplied in the target.
  GradedPoly apply(const GradedPoly& p) const;

  // Matrix A^n(source) -> A^n(target) over canonical monomial bases.
  RationalMatrix slice_matrix(int n) const;

  // g after f (source of f, target of g).
  static CdgaMorphism compose(const CdgaMorphism& g, const CdgaMorphism& f);

 private:
  std::shared_ptr<const CdgaPresentation> source_;
  std::shared_ptr<const CdgaPresentation> target_;
  std::vector<GradedPoly> images_;
  bool validated_ = false;
};

}  // namespace ptc
