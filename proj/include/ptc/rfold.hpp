#pragma once

#include <memory>
#include <vector>

#include "ptc/fibration.hpp"
#include "ptc/morphism.hpp"
#include "ptc/nil.hpp"

namespace ptc {

// Model of the r-fold fiberwise product X^r_B: the base algebra C together
// with r copies of the fiber block (copy lambda of generator v is named
// v<lambda>), plus the diagonal morphism to the total algebra (v^(lambda)
// goes to v, base fixed) and the per-copy injections the other way.
struct RFoldModel {
  int r = 1;
  std::shared_ptr<const CdgaPresentation> presentation;
  CdgaMorphism diagonal;                       // r-fold -> total
  std::vector<CdgaMorphism> copy_injections;   // total -> r-fold, one per copy
  std::vector<int> base_index;                 // total base gen -> r-fold index
  std::vector<std::vector<int>> copy_index;    // [lambda][fiber position] -> r-fold index
};

RFoldModel rfold_model(const FibrationPresentation& f, int r);

// Kernel of the diagonal at the algebra (cochain) level, degree by degree
// through `window`, with its iterated powers.
struct GradedIdeal {
  int power = 1;
  int window = 0;
  GradedSpan span;
};

GradedIdeal kernel_ideal(const RFoldModel& m, int window);

// I^k by iterated degreewise products of stored bases. Requires the k = 1
// ideal; throws MathError("WindowTooSmall") when asked beyond its window.
GradedIdeal ideal_power(const RFoldModel& m, const GradedIdeal& ideal, int k, int window);

}  // namespace ptc
