#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptc/cohomology.hpp"
#include "ptc/morphism.hpp"
#include "ptc/presentation.hpp"

namespace ptc {

// A relative Sullivan presentation C -> C (x) Lambda V -> Lambda V: the total
// presentation with generators split into a base block and a fiber block.
// Construction verifies that the base is a sub-CDGA and that the fiber block
// admits a nilpotence ordering (each differential only reaches into the base
// and previously ordered fiber generators). An empty base models a fibration
// over a point; an empty fiber is the identity fibration.
class FibrationPresentation {
 public:
  FibrationPresentation() = default;
  explicit FibrationPresentation(std::shared_ptr<const CdgaPresentation> total);

  const CdgaPresentation& total() const { return *total_; }
  std::shared_ptr<const CdgaPresentation> total_ptr() const { return total_; }

  const std::vector<int>& base_indices() const { return base_; }
  const std::vector<int>& fiber_indices() const { return fiber_; }
  // A fiber ordering witnessing the relative Sullivan condition.
  const std::vector<int>& nilpotence_order() const { return nilpotence_order_; }

  // The base sub-CDGA as a standalone presentation.
  std::shared_ptr<const CdgaPresentation> base_presentation() const;
  // The fiber Lambda V with the induced differential (base generators
  // killed), as a standalone presentation over a point.
  std::shared_ptr<const CdgaPresentation> fiber_presentation() const;
  // Quotient morphism total -> fiber (base generators to 0).
  CdgaMorphism projection_to_fiber() const;

  // The fiber viewed as a fibration over a point (for fiber-level bounds).
  FibrationPresentation fiber_over_point() const;

 private:
  std::shared_ptr<const CdgaPresentation> total_;
  std::vector<int> base_;
  std::vector<int> fiber_;
  std::vector<int> nilpotence_order_;
  mutable std::shared_ptr<const CdgaPresentation> base_cache_;
  mutable std::shared_ptr<const CdgaPresentation> fiber_cache_;
};

struct OddnessProfile {
  bool all_fiber_odd = true;
  int dim_odd = 0;
  int dim_even = 0;
};
OddnessProfile oddness_profile(const FibrationPresentation& f);

struct PureReport {
  bool pure = true;
  std::string offender;  // first generator violating the condition
  std::string detail;
};
// dV^even = 0 and d(V^odd) inside C (x) Lambda(V^even).
PureReport pure_check(const FibrationPresentation& f);

struct TnczDegreeVerdict {
  int degree = 0;
  int dim_total = 0;
  int dim_fiber = 0;
  bool surjective = true;
};
struct TnczReport {
  int cutoff = 0;
  std::vector<TnczDegreeVerdict> degrees;
  bool surjective_through_cutoff = true;
  std::optional<int> first_failure;
};
// Surjectivity of H^n(total) -> H^n(fiber) for n <= cutoff.
TnczReport tncz_check(const FibrationPresentation& f, int cutoff);

struct ExtensionSplit {
  bool valid = false;
  std::string violation;         // machine tag when invalid
  std::string violation_detail;  // human detail
  FibrationPresentation sub;     // C -> C (x) Lambda(keep), when valid
  std::vector<std::string> discarded;  // the all-odd discarded set W
  int m = 0;                           // |W|
  bool f0_balance = false;  // kept fiber has dim V odd == dim V even
  PureReport pure;          // purity of the original fibration, for reports
};

// Splits off the sub-fibration on a kept subset of fiber generators.
// Valid when the discarded set is all-odd (equivalently every even fiber
// generator is kept) and the differentials of kept generators stay inside
// C (x) Lambda(keep), so the sub really is a sub-CDGA. The discarded
// generators then form the odd extension data.
ExtensionSplit extension_split(const FibrationPresentation& f,
                               const std::vector<std::string>& keep);

}  // namespace ptc
