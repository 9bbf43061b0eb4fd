#include "ptc/genfun.hpp"

#include <algorithm>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

std::string render_poly(const std::vector<long long>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    long long c = p[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

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

// Exact-value resolution of TC_r, or nothing when no licensed route closes.
std::optional<TcValue> exact_tc(const FibrationPresentation& f, int r, int cutoff,
                                const AssertionSet& asserts,
                                const std::optional<std::vector<std::string>>& keep) {
  if (f.fiber_indices().empty()) {
    TcValue v;
    v.value = 0;
    v.status = ReportStatus::exact;
    v.provenance.push_back({"identity fibration", "empty fiber, so every TC_r vanishes"});
    return v;
  }
  OddnessProfile prof = oddness_profile(f);
  if (prof.all_fiber_odd && !f.total().meta().truncated_above) return tc_odd_fiber(f, r);
  if (std::optional<TcValue> eq = tc_equality_route(f, r, cutoff, asserts)) return eq;
  if (keep) {
    TcValue up = tc_extension_bound(f, *keep, r, cutoff, asserts);
    TcValue low = tc_fiber_lower(f, r, cutoff, asserts);
    if (up.value == low.value) {
      TcValue v = up;
      v.status = worse(up.status, low.status);
      v.modulo_truncation = up.modulo_truncation || low.modulo_truncation;
      for (const auto& p : low.provenance) v.provenance.push_back(p);
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

RationalFit fit_rational(const std::vector<int>& coefficients, int trailing_needed) {
  RationalFit fit;
  int n = static_cast<int>(coefficients.size());
  auto c = [&](int r) -> long long {
    return r >= 1 && r <= n ? coefficients[static_cast<std::size_t>(r - 1)] : 0;
  };
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    p[static_cast<std::size_t>(k)] = c(k) - 2 * c(k - 1) + c(k - 2);
  }
  int deg = 0;
  for (int k = n; k >= 1; --k) {
    if (p[static_cast<std::size_t>(k)] != 0) {
      deg = k;
      break;
    }
  }
  if (n - deg < trailing_needed) {
    fit.reason = "second differences have not stabilized; extend rmax past " + std::to_string(n);
    return fit;
  }
  p.resize(static_cast<std::size_t>(deg) + 1);

  // Re-expand P(z)/(1-z)^2 and confirm it reproduces every coefficient.
  for (int r = 1; r <= n; ++r) {
    long long expanded = 0;
    for (int k = 1; k <= std::min(r, deg); ++k) {
      expanded += p[static_cast<std::size_t>(k)] * (r - k + 1);
    }
    if (expanded != c(r)) {
      throw MathError("Internal", "rational fit failed to re-expand to the series");
    }
  }

  fit.found = true;
  fit.numerator = p;
  for (long long v : p) fit.p_at_one += v;
  fit.polynomial = render_poly(p);
  return fit;
}

SeriesReport series(const FibrationPresentation& f, int rmax, int cutoff,
                    const AssertionSet& asserts,
                    const std::optional<std::vector<std::string>>& keep) {
  if (rmax < 2) throw MathError("BadRange", "rmax must be at least 2");
  SeriesReport rep;
  rep.rmax = rmax;

  bool complete = true;
  for (int r = 1; r <= rmax; ++r) {
    std::optional<TcValue> tc = exact_tc(f, r + 1, cutoff, asserts, keep);
    if (!tc) {
      rep.notes.push_back("TC_" + std::to_string(r + 1) +
                          " has no licensed exact route; series stops at z^" + std::to_string(r) +
                          " and no closed form is reported");
      complete = false;
      break;
    }
    SeriesCoefficient sc;
    sc.index = r;
    sc.tc_of = r + 1;
    sc.value = tc->value;
    sc.status = tc->status;
    sc.route = tc->provenance.empty() ? "" : tc->provenance.front().route;
    sc.modulo_truncation = tc->modulo_truncation;
    rep.coefficients.push_back(sc);
  }

  if (complete) {
    std::vector<int> values;
    values.reserve(rep.coefficients.size());
    for (const auto& sc : rep.coefficients) values.push_back(sc.value);
    rep.fit = fit_rational(values);
    if (rep.fit.found) {
      rep.notes.push_back("F(z) = P(z)/(1-z)^2 with P(z) = " + rep.fit.polynomial);
    } else {
      rep.notes.push_back(rep.fit.reason);
    }
  }

  if (!f.fiber_indices().empty()) {
    std::shared_ptr<const CdgaPresentation> fiber = f.fiber_presentation();
    Window fw = resolve_window(*fiber, cutoff, AssertionSet{});
    CohomologyCache fcache(fiber);
    CupLength cupl = cuplength(fcache, fw.cutoff);
    rep.cat_fiber = cupl.value;
    rep.cat_status = !fw.complete ? ReportStatus::window_limited
                     : fw.by_declaration ? ReportStatus::conditional
                                         : ReportStatus::exact;
    if (rep.fit.found) {
      if (rep.fit.p_at_one == cupl.value) {
        rep.notes.push_back("P(1) = " + std::to_string(cupl.value) +
                            " matches the fiber cup-length");
      } else {
        rep.notes.push_back("P(1) = " + std::to_string(rep.fit.p_at_one) +
                            " while the fiber cup-length is " + std::to_string(cupl.value) +
                            "; cup-length only bounds the fiber category from below");
      }
      OddnessProfile prof = oddness_profile(f);
      if (prof.all_fiber_odd && !f.total().meta().truncated_above) {
        rep.notes.push_back("all-odd fiber: the numerator is exactly P(z) = " +
                            std::to_string(prof.dim_odd) + "*z with " +
                            std::to_string(prof.dim_odd) +
                            " the fiber category; note the factor of z relative to a constant "
                            "numerator");
      }
    }
  } else {
    rep.cat_fiber = 0;
    rep.cat_status = ReportStatus::exact;
  }
  return rep;
}

}  // namespace ptc
