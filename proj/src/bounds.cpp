#include "ptc/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "ptc/errors.hpp"
#include "ptc/expr.hpp"
#include "ptc/nil.hpp"

namespace ptc {

namespace {

const std::string kVanishPrefix = "cohomology_vanishes_above(";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

void AssertionSet::add(const std::string& flag, const std::string& justification) {
  flags[flag] = justification;
}

std::optional<int> AssertionSet::vanishing_degree() const {
  std::optional<int> best;
  for (const auto& [flag, just] : flags) {
    (void)just;
    if (flag.rfind(kVanishPrefix, 0) != 0) continue;
    if (flag.back() != ')') {
      throw MathError("BadAssertion", "malformed flag '" + flag + "'");
    }
    std::string inner = flag.substr(kVanishPrefix.size(), flag.size() - kVanishPrefix.size() - 1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(inner, &used);
      if (used != inner.size()) throw std::invalid_argument(inner);
    } catch (const std::exception&) {
      throw MathError("BadAssertion", "malformed flag '" + flag + "'");
    }
    if (n < 0) throw MathError("BadAssertion", "negative degree in '" + flag + "'");
    if (!best || n < *best) best = n;
  }
  return best;
}

AssertionSet AssertionSet::from_meta(const Meta& meta) {
  AssertionSet s;
  s.flags = meta.assertions;
  return s;
}

AssertionSet AssertionSet::merged_with(const AssertionSet& extra) const {
  AssertionSet s = *this;
  for (const auto& [flag, just] : extra.flags) s.flags[flag] = just;
  return s;
}

std::string report_status_str(ReportStatus s) {
  switch (s) {
    case ReportStatus::exact:
      return "exact";
    case ReportStatus::conditional:
      return "conditional";
    default:
      return "window_limited";
  }
}

Window resolve_window(const CdgaPresentation& p, int requested, const AssertionSet& asserts) {
  Window w;
  w.cutoff = std::max(requested, 0);
  if (p.meta().truncated_above) {
    w.truncated = true;
    // Generators above the threshold are missing; they first affect the
    // slice one degree up.
    w.truncation_from = *p.meta().truncated_above + 1;
  }
  if (std::optional<int> structural = p.algebra_top()) {
    if (*structural <= w.cutoff) {
      w.cutoff = *structural;
      w.complete = true;
    }
  }
  std::optional<int> declared = p.meta().declared_top;
  if (std::optional<int> asserted = asserts.vanishing_degree()) {
    if (!declared || *asserted < *declared) declared = asserted;
  }
  if (declared && *declared <= w.cutoff) {
    if (!w.complete || *declared < w.cutoff) w.by_declaration = true;
    w.complete = true;
    w.cutoff = std::max(*declared, 0);
  }
  return w;
}

ReportStatus ZclResult::status() const {
  if (!window.complete) return ReportStatus::window_limited;
  return window.by_declaration ? ReportStatus::conditional : ReportStatus::exact;
}

bool ZclResult::modulo_truncation() const {
  return window.truncated && window.cutoff >= window.truncation_from;
}

ReportStatus HtcResult::status() const {
  if (!window.complete) return ReportStatus::window_limited;
  return window.by_declaration ? ReportStatus::conditional : ReportStatus::exact;
}

bool HtcResult::modulo_truncation() const {
  return window.truncated && window.cutoff >= window.truncation_from;
}

namespace {

// Kernel of H(diagonal) degree by degree through the window, in class
// coordinates of the r-fold model.
GradedSpan diagonal_kernel_classes(const RFoldModel& m, CohomologyCache& rcache,
                                   CohomologyCache& tcache, int window) {
  GradedSpan ker;
  for (int n = 1; n <= window; ++n) {
    InducedMap im = induced_map(m.diagonal, rcache, tcache, n);
    if (im.kernel_classes.dim() > 0) ker.slices.emplace(n, im.kernel_classes);
  }
  return ker;
}

}  // namespace

ZclResult zcl(const FibrationPresentation& f, int r, int cutoff, const AssertionSet& asserts) {
  RFoldModel m = rfold_model(f, r);
  ZclResult out;
  out.r = r;
  out.window = resolve_window(*m.presentation, cutoff, asserts);
  CohomologyCache rcache(m.presentation);
  CohomologyCache tcache(f.total_ptr());
  GradedSpan ker = diagonal_kernel_classes(m, rcache, tcache, out.window.cutoff);
  CohomologyAlgebra alg(rcache);
  GradedSpan gens = extract_ideal_generators(alg, ker, out.window.cutoff);
  NilResult nil = nil_of_ideal(alg, gens, out.window.cutoff);
  out.value = nil.value;
  out.witness_degree = nil.top_power.min_degree();
  return out;
}

KernelTable zcl_kernel_table(const FibrationPresentation& f, int r, int cutoff,
                             const AssertionSet& asserts) {
  RFoldModel m = rfold_model(f, r);
  KernelTable t;
  t.r = r;
  t.generators = m.presentation->generators();
  t.window = resolve_window(*m.presentation, cutoff, asserts);
  CohomologyCache rcache(m.presentation);
  CohomologyCache tcache(f.total_ptr());
  for (int n = 1; n <= t.window.cutoff; ++n) {
    InducedMap im = induced_map(m.diagonal, rcache, tcache, n);
    if (im.kernel_classes.dim() == 0) continue;
    KernelTableRow row;
    row.degree = n;
    row.dim = im.kernel_classes.dim();
    for (const auto& kc : im.kernel_classes.rows()) {
      row.basis.push_back(rcache.slice(n).poly_from_class(kc));
    }
    row.modulo_truncation = t.window.truncated && n >= t.window.truncation_from;
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// Coordinates for one degree of the quotient A/P: canonical representatives
// of the complement plus a solver from ambient monomial coordinates to
// quotient coordinates.
struct QuotientDegree {
  std::vector<SparseVec> reps;
  Eliminator solver{0};

  int dim() const { return static_cast<int>(reps.size()); }
};

QuotientDegree quotient_degree(PolynomialAlgebra& alg, const GradedSpan& power, int q) {
  int ambient = alg.dim(q);
  QuotientDegree out;
  out.solver = Eliminator(ambient);
  SubspaceBasis sub(ambient);
  if (const SubspaceBasis* s = power.slice(q)) sub = *s;
  std::vector<SparseVec> id_rows;
  id_rows.reserve(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) id_rows.push_back({{i, Rational(1)}});
  SubspaceBasis whole = SubspaceBasis::from_vectors(ambient, id_rows);
  out.reps = quotient_basis(whole, sub);
  for (const auto& row : sub.rows()) out.solver.insert(row);
  for (std::size_t i = 0; i < out.reps.size(); ++i) {
    out.solver.insert(out.reps[i], {{static_cast<int>(i), Rational(1)}});
  }
  return out;
}

// Induced differential of the quotient complex between two prepared degrees.
RationalMatrix quotient_differential(PolynomialAlgebra& alg, const QuotientDegree& from,
                                     const QuotientDegree& to, int n) {
  RationalMatrix mat(to.dim(), from.dim());
  const CdgaPresentation& p = alg.presentation();
  for (int j = 0; j < from.dim(); ++j) {
    GradedPoly u = alg.basis(n).from_coords(from.reps[static_cast<std::size_t>(j)]);
    GradedPoly du = p.apply_differential(u);
    if (du.is_zero()) continue;
    SparseVec tag;
    to.solver.reduce(alg.basis(n + 1).coords(du), &tag);
    for (const auto& [i, c] : tag) mat.set(i, j, c);
  }
  return mat;
}

// True when H(A) -> H(A/P) is injective in every degree 1..window with
// nonzero H(A).
bool quotient_injective(CohomologyCache& rcache, PolynomialAlgebra& alg, const GradedSpan& power,
                        int window) {
  std::map<int, QuotientDegree> degrees;
  auto degree_at = [&](int q) -> const QuotientDegree& {
    auto it = degrees.find(q);
    if (it == degrees.end()) it = degrees.emplace(q, quotient_degree(alg, power, q)).first;
    return it->second;
  };
  for (int n = 1; n <= window; ++n) {
    const CohomologySlice& hn = rcache.slice(n);
    if (hn.dim() == 0) continue;
    const QuotientDegree& q_below = degree_at(n - 1);
    const QuotientDegree& q_here = degree_at(n);
    const QuotientDegree& q_above = degree_at(n + 1);
    RationalMatrix outgoing = quotient_differential(alg, q_here, q_above, n);
    RationalMatrix incoming = quotient_differential(alg, q_below, q_here, n - 1);
    ComplexSlice quotient_h(outgoing, incoming);
    RationalMatrix induced(quotient_h.dim(), hn.dim());
    for (int j = 0; j < hn.dim(); ++j) {
      SparseVec tag;
      q_here.solver.reduce(hn.representatives()[static_cast<std::size_t>(j)], &tag);
      for (const auto& [i, c] : quotient_h.class_coords(tag)) induced.set(i, j, c);
    }
    if (kernel(induced).dim() > 0) return false;
  }
  return true;
}

}  // namespace

HtcResult htc(const FibrationPresentation& f, int r, int cutoff, const AssertionSet& asserts) {
  RFoldModel m = rfold_model(f, r);
  HtcResult out;
  out.r = r;
  out.window = resolve_window(*m.presentation, cutoff, asserts);
  int w = out.window.cutoff;
  CohomologyCache rcache(m.presentation);
  PolynomialAlgebra alg(m.presentation);
  GradedIdeal ideal = kernel_ideal(m, w + 1);

  GradedSpan power = ideal.span;  // I^{k+1}, starting at k = 0
  for (int k = 0;; ++k) {
    if (quotient_injective(rcache, alg, power, w)) {
      out.value = k;
      return out;
    }
    if (power.empty()) {
      throw MathError("Internal", "quotient by a zero ideal power is not injective");
    }
    power = span_products(alg, power, ideal.span, w + 1);
  }
}

HtcWitnessResult htc_witness(const FibrationPresentation& f, int r, int k, int cutoff) {
  if (k < 1) throw MathError("BadIdealPower", "witness power k must be at least 1");
  RFoldModel m = rfold_model(f, r);
  HtcWitnessResult out;
  out.r = r;
  out.k = k;
  out.window = resolve_window(*m.presentation, cutoff, AssertionSet{});
  out.generators = m.presentation->generators();
  int w = out.window.cutoff;

  GradedIdeal ideal = kernel_ideal(m, w);
  GradedIdeal power = ideal_power(m, ideal, k + 1, w);
  for (const auto& [n, slice] : power.span.slices) {
    RationalMatrix d_n = m.presentation->differential_matrix(n);
    SubspaceBasis cocycles = kernel(d_n);
    SubspaceBasis candidates = subspace_intersect(slice, cocycles);
    if (candidates.dim() == 0) continue;

    SliceBasis below = monomial_basis(m.presentation->generators(), n - 1);
    SliceBasis here = monomial_basis(m.presentation->generators(), n);
    Eliminator coboundaries(here.dim());
    for (int j = 0; j < below.dim(); ++j) {
      GradedPoly dj =
          m.presentation->apply_differential(GradedPoly::term(below.at(j), Rational(1)));
      if (!dj.is_zero()) coboundaries.insert(here.coords(dj));
    }
    for (const auto& v : candidates.rows()) {
      if (sparse_is_zero(coboundaries.reduce(v))) continue;
      out.found = true;
      out.degree = n;
      out.witness = here.from_coords(v);
      out.modulo_truncation = out.window.truncated && n >= out.window.truncation_from;
      out.certificate.push_back("lies in the degree-" + std::to_string(n) + " span of " +
                                std::to_string(k + 1) + "-fold products of diagonal-kernel " +
                                "elements");
      if (!m.presentation->apply_differential(out.witness).is_zero()) {
        throw MathError("Internal", "witness candidate is not a cocycle");
      }
      out.certificate.push_back("is a cocycle of the product model");
      out.certificate.push_back("is not a coboundary (degrees through " + std::to_string(w) +
                                " checked" +
                                (out.modulo_truncation ? ", modulo truncation" : "") + ")");
      return out;
    }
  }
  return out;
}

namespace {

// Formal dimension of a finite (all-odd) presentation: the top degree with
// nonzero cohomology. Meaningless for truncated presentations.
std::optional<int> finite_formal_dimension(const std::shared_ptr<const CdgaPresentation>& p) {
  if (!p->finite_dimensional()) return std::nullopt;
  if (p->meta().truncated_above) return std::nullopt;
  int top = p->algebra_top().value_or(0);
  CohomologyCache cache(p);
  for (int n = top; n >= 1; --n) {
    if (cache.dim(n) > 0) return n;
  }
  return 0;
}

}  // namespace

TcValue tc_odd_fiber(const FibrationPresentation& f, int r) {
  OddnessProfile prof = oddness_profile(f);
  if (!prof.all_fiber_odd) {
    throw MathError("NotOddFiber",
                    "fiber has even-degree generators; the odd-fiber formula does not apply");
  }
  if (f.total().meta().truncated_above) {
    throw MathError("NotOddFiber",
                    "truncated presentation cannot certify a finite all-odd fiber");
  }
  TcValue v;
  v.value = (r - 1) * prof.dim_odd;
  v.status = ReportStatus::exact;
  v.provenance.push_back(
      {"odd-fiber formula", "all " + std::to_string(prof.dim_odd) +
                                " fiber generators are odd, so the fiber is elliptic and TC_" +
                                std::to_string(r) + " = (" + std::to_string(r) + "-1)*" +
                                std::to_string(prof.dim_odd) + " = " + std::to_string(v.value)});
  return v;
}

TcValue tc_fiber_lower(const FibrationPresentation& f, int r, int cutoff,
                       const AssertionSet& asserts) {
  OddnessProfile prof = oddness_profile(f);
  if (prof.all_fiber_odd && !f.total().meta().truncated_above) {
    TcValue v;
    v.value = (r - 1) * prof.dim_odd;
    v.status = ReportStatus::exact;
    v.provenance.push_back(
        {"fiber restriction",
         "the all-odd fiber alone has TC_" + std::to_string(r) + " = " + std::to_string(v.value) +
             ", and the fiber bounds the fibration from below"});
    return v;
  }
  FibrationPresentation fiber = f.fiber_over_point();
  ZclResult z = zcl(fiber, r, cutoff, asserts);
  TcValue v;
  v.value = z.value;
  v.status = ReportStatus::exact;
  v.modulo_truncation =
      z.window.truncated && z.witness_degree && *z.witness_degree >= z.window.truncation_from;
  v.provenance.push_back(
      {"fiber restriction", "zcl_" + std::to_string(r) + " of the fiber alone is " +
                                std::to_string(z.value) +
                                ", which bounds the fibration from below" +
                                (v.modulo_truncation ? " (modulo truncation)" : "")});
  return v;
}

TcValue svarc_bound(const FibrationPresentation& f, int r, const AssertionSet& asserts) {
  (void)asserts;
  const Meta& meta = f.total().meta();
  std::optional<int> dim_fiber;
  std::optional<int> dim_base;
  bool declared_used = false;

  if (f.fiber_indices().empty()) {
    dim_fiber = 0;
  } else if (std::optional<int> d = finite_formal_dimension(f.fiber_presentation())) {
    dim_fiber = d;
  } else if (meta.fiber_dim) {
    dim_fiber = meta.fiber_dim;
    declared_used = true;
  }

  if (f.base_indices().empty()) {
    dim_base = 0;
  } else if (std::optional<int> d = finite_formal_dimension(f.base_presentation())) {
    dim_base = d;
  } else if (meta.base_dim) {
    dim_base = meta.base_dim;
    declared_used = true;
  }

  if (!dim_fiber || !dim_base) {
    throw MathError("MissingDimension",
                    "fiber or base dimension is neither computable nor declared; add fiber_dim "
                    "/ base_dim to the model");
  }
  TcValue v;
  v.value = (r * *dim_fiber + *dim_base + 1) / 2;
  v.status = declared_used ? ReportStatus::conditional : ReportStatus::exact;
  if (declared_used) v.assertions_used.push_back("declared fiber_dim/base_dim");
  v.provenance.push_back(
      {"dimension bound", "floor((r*dimF + dimB + 1)/2) with dimF = " + std::to_string(*dim_fiber) +
                              " and dimB = " + std::to_string(*dim_base) + " gives TC_" +
                              std::to_string(r) + " <= " + std::to_string(v.value)});
  return v;
}

std::optional<TcValue> tc_equality_route(const FibrationPresentation& f, int r, int cutoff,
                                         const AssertionSet& asserts) {
  if (f.fiber_indices().empty()) return std::nullopt;
  AssertionSet all = AssertionSet::from_meta(f.total().meta()).merged_with(asserts);
  std::vector<std::string> used;
  if (!all.has("fiber_elliptic") || !all.has("fiber_formal")) return std::nullopt;
  used.push_back("fiber_elliptic");
  used.push_back("fiber_formal");
  if (!f.base_indices().empty()) {
    if (!all.has("base_formal")) return std::nullopt;
    used.push_back("base_formal");
  }

  Window tw = resolve_window(f.total(), cutoff, AssertionSet{});
  TnczReport tncz = tncz_check(f, tw.cutoff);
  if (!tncz.surjective_through_cutoff) return std::nullopt;

  ZclResult z = zcl(f, r, cutoff, asserts);
  if (!z.window.complete) return std::nullopt;

  TcValue v;
  v.value = z.value;
  v.status = ReportStatus::conditional;
  v.assertions_used = used;
  if (z.window.by_declaration) v.assertions_used.push_back("declared vanishing degree");
  if (!tw.complete) v.assertions_used.push_back("fiber inclusion surjectivity beyond the window");
  v.modulo_truncation = z.modulo_truncation() || (tw.truncated && tw.cutoff >= tw.truncation_from);
  v.provenance.push_back(
      {"cohomology-equality route",
       "fiber cohomology is hit by the total space through degree " + std::to_string(tw.cutoff) +
           (tw.complete ? "" : " (window only)") +
           "; with the asserted formality and ellipticity, TC_" + std::to_string(r) +
           " equals zcl_" + std::to_string(r) + " = " + std::to_string(z.value)});
  return v;
}

namespace {

// Exact-value resolution for the kept sub-fibration of an odd extension.
TcValue resolve_sub_tc(const FibrationPresentation& g, int r, int cutoff,
                       const AssertionSet& asserts) {
  if (g.fiber_indices().empty()) {
    TcValue v;
    v.value = 0;
    v.status = ReportStatus::exact;
    v.provenance.push_back({"identity fibration", "empty fiber, so every TC_r vanishes"});
    return v;
  }
  OddnessProfile prof = oddness_profile(g);
  if (prof.all_fiber_odd && !g.total().meta().truncated_above) return tc_odd_fiber(g, r);
  if (std::optional<TcValue> eq = tc_equality_route(g, r, cutoff, asserts)) return *eq;
  try {
    return svarc_bound(g, r, asserts);
  } catch (const MathError&) {
    throw MathError("Unresolved",
                    "no licensed route resolves TC_r of the kept sub-fibration; assert fiber "
                    "formality and ellipticity or declare dimensions");
  }
}

}  // namespace

TcValue tc_extension_bound(const FibrationPresentation& f, const std::vector<std::string>& keep,
                           int r, int cutoff, const AssertionSet& asserts) {
  ExtensionSplit split = extension_split(f, keep);
  if (!split.valid) {
    throw MathError("SplitInvalid", split.violation + ": " + split.violation_detail);
  }
  TcValue hat = resolve_sub_tc(split.sub, r, cutoff, asserts);
  TcValue v;
  v.value = hat.value + split.m * (r - 1);
  v.status = hat.status;
  v.assertions_used = hat.assertions_used;
  v.modulo_truncation = hat.modulo_truncation;
  std::string route = hat.provenance.empty() ? "?" : hat.provenance.front().route;
  v.provenance.push_back(
      {"odd-extension bound",
       "discarding the odd generators {" + join(split.discarded, ", ") +
           "} (m = " + std::to_string(split.m) + ") gives TC_" + std::to_string(r) +
           " <= TC_" + std::to_string(r) + "(kept) + m(r-1) = " + std::to_string(hat.value) +
           " + " + std::to_string(split.m * (r - 1)) + " = " + std::to_string(v.value) +
           "; the kept part resolves via the " + route});
  for (const auto& p : hat.provenance) v.provenance.push_back(p);
  return v;
}

namespace {

ReportStatus worse(ReportStatus a, ReportStatus b) {
  auto rankof = [](ReportStatus s) {
    switch (s) {
      case ReportStatus::exact:
        return 0;
      case ReportStatus::conditional:
        return 1;
      default:
        return 2;
    }
  };
  return rankof(a) >= rankof(b) ? a : b;
}

// Best candidate of a list: maximal (lower) or minimal (upper) value; ties
// merge provenance, keeping the strongest status first.
std::optional<TcValue> best_candidate(std::vector<TcValue> candidates, bool want_max) {
  if (candidates.empty()) return std::nullopt;
  int best = candidates.front().value;
  for (const auto& c : candidates) {
    if (want_max ? c.value > best : c.value < best) best = c.value;
  }
  std::vector<TcValue> tied;
  for (auto& c : candidates) {
    if (c.value == best) tied.push_back(std::move(c));
  }
  std::stable_sort(tied.begin(), tied.end(), [](const TcValue& a, const TcValue& b) {
    return worse(b.status, a.status) == b.status && a.status != b.status;
  });
  TcValue out = tied.front();
  for (std::size_t i = 1; i < tied.size(); ++i) {
    for (const auto& p : tied[i].provenance) out.provenance.push_back(p);
    for (const auto& a : tied[i].assertions_used) {
      if (std::find(out.assertions_used.begin(), out.assertions_used.end(), a) ==
          out.assertions_used.end()) {
        out.assertions_used.push_back(a);
      }
    }
  }
  return out;
}

}  // namespace

BoundReport tc_sandwich(const FibrationPresentation& f, int r, int cutoff,
                        const AssertionSet& asserts,
                        const std::optional<std::vector<std::string>>& keep) {
  BoundReport rep;
  rep.r = r;
  rep.cutoff = cutoff;
  std::vector<TcValue> lowers;
  std::vector<TcValue> uppers;

  ZclResult z = zcl(f, r, cutoff, asserts);
  rep.zcl_detail = z;
  {
    TcValue v;
    v.value = z.value;
    v.status = ReportStatus::exact;
    v.modulo_truncation =
        z.window.truncated && z.witness_degree && *z.witness_degree >= z.window.truncation_from;
    v.provenance.push_back(
        {"zero-divisor cup-length", "zcl_" + std::to_string(r) + " = " + std::to_string(z.value) +
                                        " (" + report_status_str(z.status()) +
                                        (z.modulo_truncation() ? ", modulo truncation" : "") +
                                        ") bounds TC_" + std::to_string(r) + " from below"});
    lowers.push_back(std::move(v));
  }

  if (!f.fiber_indices().empty()) lowers.push_back(tc_fiber_lower(f, r, cutoff, asserts));

  OddnessProfile prof = oddness_profile(f);
  if (prof.all_fiber_odd && !f.total().meta().truncated_above) {
    TcValue v = tc_odd_fiber(f, r);
    lowers.push_back(v);
    uppers.push_back(v);
  }

  if (std::optional<TcValue> eq = tc_equality_route(f, r, cutoff, asserts)) {
    lowers.push_back(*eq);
    uppers.push_back(*eq);
  }

  if (keep) uppers.push_back(tc_extension_bound(f, *keep, r, cutoff, asserts));

  try {
    uppers.push_back(svarc_bound(f, r, asserts));
  } catch (const MathError&) {
    rep.notes.push_back("dimension bound unavailable: fiber or base dimension unknown");
  }

  std::optional<TcValue> lower = best_candidate(lowers, true);
  std::optional<TcValue> upper = best_candidate(uppers, false);

  // Escalate through kernel-power witnesses while they keep improving the
  // lower bound. Monotone: no witness at k means none above k either.
  if (lower && (!upper || lower->value < upper->value)) {
    int k = std::max(lower->value, 1);
    while (!upper || k + 1 <= upper->value) {
      HtcWitnessResult wres = htc_witness(f, r, k, cutoff);
      if (!wres.found) break;
      TcValue v;
      v.value = k + 1;
      v.status = ReportStatus::exact;
      v.modulo_truncation = wres.modulo_truncation;
      v.provenance.push_back(
          {"kernel-power witness",
           "the degree-" + std::to_string(wres.degree) + " cocycle " +
               print_poly(wres.witness, wres.generators) + " lies in the " +
               std::to_string(k + 1) + "-th power of the diagonal kernel and is not a " +
               "coboundary, so TC_" + std::to_string(r) + " >= " + std::to_string(k + 1) +
               (wres.modulo_truncation ? " (modulo truncation)" : "")});
      lowers.push_back(std::move(v));
      lower = best_candidate(lowers, true);
      ++k;
    }
  }

  rep.lower = lower;
  rep.upper = upper;
  if (lower && upper && lower->value == upper->value) {
    rep.exact = lower->value;
    rep.status = worse(lower->status, upper->status);
    if (z.value < *rep.exact) {
      rep.notes.push_back("zcl_" + std::to_string(r) + " = " + std::to_string(z.value) +
                          " is strictly below TC_" + std::to_string(r) + " = " +
                          std::to_string(*rep.exact) + " here");
    }
  } else {
    rep.status = ReportStatus::window_limited;
  }
  if (lower) {
    for (const auto& a : lower->assertions_used) rep.assertions_used.push_back(a);
  }
  if (upper) {
    for (const auto& a : upper->assertions_used) {
      if (std::find(rep.assertions_used.begin(), rep.assertions_used.end(), a) ==
          rep.assertions_used.end()) {
        rep.assertions_used.push_back(a);
      }
    }
  }
  if ((lower && lower->modulo_truncation) || (upper && upper->modulo_truncation)) {
    rep.notes.push_back("some bounds rely on degrees at or above the truncation threshold");
  }
  return rep;
}

DiffNilReport diff_nil_check(const FibrationPresentation& f, int rmax, int cutoff,
                             const AssertionSet& asserts) {
  if (rmax < 3) throw MathError("BadRange", "rmax must be at least 3 to compare consecutive r");
  DiffNilReport rep;

  std::shared_ptr<const CdgaPresentation> fiber = f.fiber_presentation();
  Window fw = resolve_window(*fiber, cutoff, AssertionSet{});
  CohomologyCache fcache(fiber);
  CupLength cupl = cuplength(fcache, fw.cutoff);
  rep.cupl_fiber = cupl.value;
  rep.cupl_status = !fw.complete ? ReportStatus::window_limited
                    : fw.by_declaration ? ReportStatus::conditional
                                        : ReportStatus::exact;

  std::map<int, ZclResult> by_r;
  auto zcl_at = [&](int r) -> const ZclResult& {
    auto it = by_r.find(r);
    if (it == by_r.end()) it = by_r.emplace(r, zcl(f, r, cutoff, asserts)).first;
    return it->second;
  };
  for (int r = 2; r + 1 <= rmax; ++r) {
    const ZclResult& low = zcl_at(r);
    const ZclResult& high = zcl_at(r + 1);
    DiffNilRow row;
    row.r = r;
    row.zcl_low = low.value;
    row.zcl_high = high.value;
    row.holds = (high.value - low.value) >= rep.cupl_fiber;
    row.certified = low.window.complete && high.window.complete;
    if (!row.holds) rep.all_hold = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ptc
