#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptc/bounds.hpp"

namespace ptc {

// One coefficient of F(z) = sum_{r>=1} TC_{r+1} z^r.
struct SeriesCoefficient {
  int index = 1;  // power of z
  int tc_of = 2;  // the sequential invariant reported, = index + 1
  int value = 0;
  ReportStatus status = ReportStatus::exact;
  std::string route;
  bool modulo_truncation = false;
};

// F(z) written as P(z) / (1-z)^2. The numerator is recovered from second
// differences of the coefficients and only trusted when enough trailing
// differences vanish.
struct RationalFit {
  bool found = false;
  std::vector<long long> numerator;  // p_k, index = power of z
  long long p_at_one = 0;
  std::string polynomial;  // rendered P(z)
  std::string reason;      // when not found
};

// coefficients[i] is the z^{i+1} coefficient. `trailing_needed` vanishing
// second differences are required at the tail before the fit is accepted.
RationalFit fit_rational(const std::vector<int>& coefficients, int trailing_needed = 2);

struct SeriesReport {
  int rmax = 6;
  std::vector<SeriesCoefficient> coefficients;
  RationalFit fit;
  std::optional<int> cat_fiber;  // fiber cup-length, for the P(1) comparison
  ReportStatus cat_status = ReportStatus::window_limited;
  std::vector<std::string> notes;
};

// TC generating function of the fibration: coefficients TC_{r+1} for
// r = 1..rmax resolved through exact-value routes only; the series stops
// honestly at the first coefficient without a licensed exact route.
SeriesReport series(const FibrationPresentation& f, int rmax, int cutoff,
                    const AssertionSet& asserts,
                    const std::optional<std::vector<std::string>>& keep = std::nullopt);

}  // namespace ptc
