#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptc/fibration.hpp"
#include "ptc/rfold.hpp"

namespace ptc {

// User-supplied facts the engine cannot check (formality, ellipticity,
// vanishing above a degree), each with a justification. Machine-checkable
// facts (purity, oddness, TNCZ through the window) are computed, never
// asserted. The flag "cohomology_vanishes_above(N)" declares vanishing for
// the product model of the current computation.
struct AssertionSet {
  std::map<std::string, std::string> flags;

  bool has(const std::string& flag) const { return flags.count(flag) > 0; }
  void add(const std::string& flag, const std::string& justification);
  // N from a "cohomology_vanishes_above(N)" flag, if present.
  std::optional<int> vanishing_degree() const;

  static AssertionSet from_meta(const Meta& meta);
  AssertionSet merged_with(const AssertionSet& extra) const;
};

enum class ReportStatus { exact, conditional, window_limited };
std::string report_status_str(ReportStatus s);

struct Provenance {
  std::string route;
  std::string detail;
};

// The effective degree window of a computation and how it was certified:
// `complete` means vanishing beyond the window is known, either
// structurally (finite all-odd algebra) or by user declaration.
struct Window {
  int cutoff = 0;          // degrees actually examined
  bool complete = false;   // nothing lives beyond the window
  bool by_declaration = false;  // completeness rests on declared data
  bool truncated = false;  // presentation is truncated; see truncation_from
  int truncation_from = 0;
};

// Degree window for computations on `p`: the requested cutoff, clamped to
// the structural top (all-odd) or the declared vanishing degree when those
// are smaller, with certification recorded.
Window resolve_window(const CdgaPresentation& p, int requested, const AssertionSet& asserts);

struct ZclResult {
  int r = 2;
  Window window;
  int value = 0;
  std::optional<int> witness_degree;  // smallest degree of a nonzero top power
  ReportStatus status() const;
  bool modulo_truncation() const;  // the verdict leans on truncated degrees
};

// Nilpotency of Ker H^*(diagonal) for the r-fold fiberwise product model.
ZclResult zcl(const FibrationPresentation& f, int r, int cutoff, const AssertionSet& asserts);

struct KernelTableRow {
  int degree = 0;
  int dim = 0;
  std::vector<GradedPoly> basis;  // cocycle representatives of kernel classes
  bool modulo_truncation = false;
};
struct KernelTable {
  int r = 2;
  Window window;
  std::vector<KernelTableRow> rows;  // nonzero slices only
  GeneratorList generators;          // of the r-fold model, for printing
};
KernelTable zcl_kernel_table(const FibrationPresentation& f, int r, int cutoff,
                             const AssertionSet& asserts);

struct HtcResult {
  int r = 2;
  Window window;
  int value = 0;
  ReportStatus status() const;
  bool modulo_truncation() const;
};

// Least k with H(r-fold model -> r-fold model / I^{k+1}) injective through
// the window, where I is the algebra-level kernel of the diagonal.
HtcResult htc(const FibrationPresentation& f, int r, int cutoff, const AssertionSet& asserts);

struct HtcWitnessResult {
  int r = 2;
  int k = 1;
  Window window;
  bool found = false;
  int degree = -1;
  GradedPoly witness;             // cocycle over the r-fold generators
  GeneratorList generators;       // r-fold generators, for printing
  bool modulo_truncation = false;
  std::vector<std::string> certificate;
};

// Smallest-degree cocycle in I^{k+1} that is not a coboundary within the
// window. Such a witness proves HTC_r >= k+1, hence TC_r >= k+1. Absence of
// a witness proves nothing.
HtcWitnessResult htc_witness(const FibrationPresentation& f, int r, int k, int cutoff);

struct TcValue {
  int value = 0;
  ReportStatus status = ReportStatus::exact;
  std::vector<Provenance> provenance;
  std::vector<std::string> assertions_used;
  bool modulo_truncation = false;
};

// (r-1) * (number of fiber generators) for an all-odd fiber; exact.
// Throws MathError("NotOddFiber") otherwise.
TcValue tc_odd_fiber(const FibrationPresentation& f, int r);

// Lower bound through the fiber: TC_r of the fiber alone bounds the
// fibration's TC_r from below.
TcValue tc_fiber_lower(const FibrationPresentation& f, int r, int cutoff,
                       const AssertionSet& asserts);

// floor((r * dim F + dim B + 1) / 2); dimensions computed for finite
// presentations, declared otherwise. Throws MathError("MissingDimension").
TcValue svarc_bound(const FibrationPresentation& f, int r, const AssertionSet& asserts);

// TC_r = zcl_r when the fibration is TNCZ (machine-verified through the
// window) and the user asserts fiber ellipticity, fiber formality and base
// formality. Empty when not licensed or the window cannot certify zcl.
std::optional<TcValue> tc_equality_route(const FibrationPresentation& f, int r, int cutoff,
                                         const AssertionSet& asserts);

// TC_r <= TC_r(kept sub-fibration) + m(r-1) where m counts the discarded
// odd generators. Throws MathError("SplitInvalid") when the keep set does
// not define an odd extension.
TcValue tc_extension_bound(const FibrationPresentation& f, const std::vector<std::string>& keep,
                           int r, int cutoff, const AssertionSet& asserts);

struct BoundReport {
  int r = 2;
  int cutoff = 0;
  std::optional<TcValue> lower;
  std::optional<TcValue> upper;
  std::optional<int> exact;
  ReportStatus status = ReportStatus::window_limited;
  std::vector<std::string> assertions_used;
  std::vector<std::string> notes;
  std::optional<ZclResult> zcl_detail;
};

BoundReport tc_sandwich(const FibrationPresentation& f, int r, int cutoff,
                        const AssertionSet& asserts,
                        const std::optional<std::vector<std::string>>& keep = std::nullopt);

struct DiffNilRow {
  int r = 2;
  int zcl_low = 0;
  int zcl_high = 0;
  bool holds = false;
  bool certified = false;  // both zcl windows were complete
};
struct DiffNilReport {
  int cupl_fiber = 0;
  ReportStatus cupl_status = ReportStatus::exact;
  std::vector<DiffNilRow> rows;
  bool all_hold = true;
};

// Checks zcl_{r+1} - zcl_r >= cuplength(fiber) for r = 2..rmax-1 and
// reports each row as it comes out; rows are not assumed to hold.
DiffNilReport diff_nil_check(const FibrationPresentation& f, int rmax, int cutoff,
                             const AssertionSet& asserts);

}  // namespace ptc
