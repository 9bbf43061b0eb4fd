#include "ptc/fibration.hpp"

#include <algorithm>
#include <set>

#include "ptc/errors.hpp"
#include "ptc/expr.hpp"

namespace ptc {

namespace {

// Generator indices appearing in any monomial of p.
std::set<int> support(const GradedPoly& p) {
  std::set<int> out;
  for (const auto& [mono, coef] : p.terms()) {
    for (auto [g, e] : mono.factors()) out.insert(g);
  }
  return out;
}

}  // namespace

FibrationPresentation::FibrationPresentation(std::shared_ptr<const CdgaPresentation> total)
    : total_(std::move(total)) {
  total_->require_validated();
  const auto& gens = total_->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    (gens[i].block == Block::base ? base_ : fiber_).push_back(static_cast<int>(i));
  }

  for (int b : base_) {
    for (int g : support(total_->differential(b))) {
      if (gens[static_cast<std::size_t>(g)].block != Block::base) {
        throw MathError("BaseNotClosed",
                        "base generator '" + gens[static_cast<std::size_t>(b)].name +
                            "' has a differential involving fiber generator '" +
                            gens[static_cast<std::size_t>(g)].name + "'");
      }
    }
  }

  // Kahn's algorithm over fiber-to-fiber dependencies, preferring the given
  // order, to witness the relative Sullivan (nilpotence) condition.
  std::map<int, std::set<int>> needs;  // fiber gen -> fiber gens in its differential
  for (int v : fiber_) {
    std::set<int> deps;
    for (int g : support(total_->differential(v))) {
      if (gens[static_cast<std::size_t>(g)].block == Block::fiber) deps.insert(g);
    }
    needs.emplace(v, std::move(deps));
  }
  std::set<int> placed;
  while (nilpotence_order_.size() < fiber_.size()) {
    int chosen = -1;
    for (int v : fiber_) {
      if (placed.count(v)) continue;
      bool ready = true;
      for (int dep : needs[v]) {
        if (dep != v && !placed.count(dep)) {
          ready = false;
          break;
        }
      }
      if (needs[v].count(v)) ready = false;  // self-reference never resolves
      if (ready) {
        chosen = v;
        break;
      }
    }
    if (chosen < 0) {
      throw MathError("NoNilpotenceOrder",
                      "fiber differentials are cyclic; no relative Sullivan ordering exists");
    }
    placed.insert(chosen);
    nilpotence_order_.push_back(chosen);
  }
}

std::shared_ptr<const CdgaPresentation> FibrationPresentation::base_presentation() const {
  if (base_cache_) return base_cache_;
  const auto& gens = total_->generators();
  GeneratorList bgens;
  std::map<int, int> reindex;
  for (int b : base_) {
    reindex[b] = static_cast<int>(bgens.size());
    bgens.push_back(gens[static_cast<std::size_t>(b)]);
  }
  std::vector<GradedPoly> diffs;
  for (int b : base_) {
    GradedPoly out;
    for (const auto& [mono, coef] : total_->differential(b).terms()) {
      std::vector<std::pair<int, int>> factors;
      for (auto [g, e] : mono.factors()) factors.emplace_back(reindex.at(g), e);
      out.add_term(Monomial(std::move(factors)), coef);
    }
    diffs.push_back(std::move(out));
  }
  Meta meta = total_->meta();
  meta.name = total_->meta().name + " base";
  meta.declared_top = total_->meta().base_dim;
  meta.fiber_dim = 0;
  meta.assertions.clear();
  auto p = std::make_shared<CdgaPresentation>(std::move(bgens), std::move(diffs), std::move(meta));
  p->validate();
  base_cache_ = p;
  return base_cache_;
}

std::shared_ptr<const CdgaPresentation> FibrationPresentation::fiber_presentation() const {
  if (fiber_cache_) return fiber_cache_;
  const auto& gens = total_->generators();
  GeneratorList fgens;
  std::map<int, int> reindex;
  for (int v : fiber_) {
    reindex[v] = static_cast<int>(fgens.size());
    fgens.push_back(gens[static_cast<std::size_t>(v)]);
  }
  std::vector<GradedPoly> diffs;
  for (int v : fiber_) {
    GradedPoly out;
    for (const auto& [mono, coef] : total_->differential(v).terms()) {
      bool touches_base = false;
      std::vector<std::pair<int, int>> factors;
      for (auto [g, e] : mono.factors()) {
        if (gens[static_cast<std::size_t>(g)].block == Block::base) {
          touches_base = true;
          break;
        }
        factors.emplace_back(reindex.at(g), e);
      }
      if (!touches_base) out.add_term(Monomial(std::move(factors)), coef);
    }
    diffs.push_back(std::move(out));
  }
  Meta meta = total_->meta();
  meta.name = total_->meta().name + " fiber";
  meta.declared_top = total_->meta().fiber_dim;
  meta.base_dim = 0;
  auto p = std::make_shared<CdgaPresentation>(std::move(fgens), std::move(diffs), std::move(meta));
  p->validate();
  fiber_cache_ = p;
  return fiber_cache_;
}

CdgaMorphism FibrationPresentation::projection_to_fiber() const {
  auto fib = fiber_presentation();
  std::vector<GradedPoly> images(total_->generators().size());
  int pos = 0;
  for (int v : fiber_) {
    images[static_cast<std::size_t>(v)] = GradedPoly::generator(pos);
    ++pos;
  }
  CdgaMorphism proj(total_, fib, std::move(images));
  proj.validate();
  return proj;
}

FibrationPresentation FibrationPresentation::fiber_over_point() const {
  auto fib = fiber_presentation();
  return FibrationPresentation(fib);
}

OddnessProfile oddness_profile(const FibrationPresentation& f) {
  OddnessProfile p;
  const auto& gens = f.total().generators();
  for (int v : f.fiber_indices()) {
    if (gens[static_cast<std::size_t>(v)].odd()) {
      ++p.dim_odd;
    } else {
      ++p.dim_even;
    }
  }
  p.all_fiber_odd = (p.dim_even == 0);
  return p;
}

PureReport pure_check(const FibrationPresentation& f) {
  const auto& gens = f.total().generators();
  PureReport report;
  for (int v : f.fiber_indices()) {
    const Generator& g = gens[static_cast<std::size_t>(v)];
    const GradedPoly& dv = f.total().differential(v);
    if (!g.odd()) {
      if (!dv.is_zero()) {
        report.pure = false;
        report.offender = g.name;
        report.detail = "even fiber generator '" + g.name + "' has nonzero differential";
        return report;
      }
      continue;
    }
    for (int s : support(dv)) {
      const Generator& sg = gens[static_cast<std::size_t>(s)];
      if (sg.block == Block::fiber && sg.odd()) {
        report.pure = false;
        report.offender = g.name;
        report.detail = "d(" + g.name + ") involves odd fiber generator '" + sg.name + "'";
        return report;
      }
    }
  }
  return report;
}

TnczReport tncz_check(const FibrationPresentation& f, int cutoff) {
  TnczReport report;
  report.cutoff = cutoff;
  CohomologyCache total_cache(f.total_ptr());
  CohomologyCache fiber_cache(f.fiber_presentation());
  CdgaMorphism proj = f.projection_to_fiber();
  for (int n = 0; n <= cutoff; ++n) {
    InducedMap im = induced_map(proj, total_cache, fiber_cache, n);
    TnczDegreeVerdict v;
    v.degree = n;
    v.dim_total = total_cache.dim(n);
    v.dim_fiber = fiber_cache.dim(n);
    v.surjective = (rank(im.matrix) == v.dim_fiber);
    if (!v.surjective && !report.first_failure) {
      report.first_failure = n;
      report.surjective_through_cutoff = false;
    }
    report.degrees.push_back(v);
  }
  return report;
}

ExtensionSplit extension_split(const FibrationPresentation& f,
                               const std::vector<std::string>& keep) {
  const auto& gens = f.total().generators();
  ExtensionSplit split;
  split.pure = pure_check(f);

  std::set<int> keep_set;
  for (const auto& name : keep) {
    auto idx = f.total().index_of(name);
    if (!idx || gens[static_cast<std::size_t>(*idx)].block != Block::fiber) {
      throw MathError("UnknownGenerator", "keep set names '" + name +
                                              "', which is not a fiber generator");
    }
    keep_set.insert(*idx);
  }

  std::vector<int> discarded;
  for (int v : f.fiber_indices()) {
    if (!keep_set.count(v)) discarded.push_back(v);
  }
  for (int w : discarded) {
    const Generator& g = gens[static_cast<std::size_t>(w)];
    if (!g.odd()) {
      split.violation = "EvenDiscarded";
      split.violation_detail =
          "even fiber generator '" + g.name + "' must be kept for an odd extension";
      return split;
    }
  }
  for (int k : keep_set) {
    for (int s : support(f.total().differential(k))) {
      const Generator& sg = gens[static_cast<std::size_t>(s)];
      if (sg.block == Block::fiber && !keep_set.count(s)) {
        split.violation = "KeptDifferentialEscapes";
        split.violation_detail = "d(" + gens[static_cast<std::size_t>(k)].name +
                                 ") involves discarded generator '" + sg.name +
                                 "', so the kept part is not a sub-CDGA";
        return split;
      }
    }
  }

  // Build C (x) Lambda(keep) on the surviving generators, original order.
  GeneratorList sub_gens;
  std::map<int, int> reindex;
  std::vector<int> survivors;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int idx = static_cast<int>(i);
    bool is_base = gens[i].block == Block::base;
    if (is_base || keep_set.count(idx)) {
      reindex[idx] = static_cast<int>(sub_gens.size());
      sub_gens.push_back(gens[i]);
      survivors.push_back(idx);
    }
  }
  std::vector<GradedPoly> diffs;
  for (int idx : survivors) {
    GradedPoly out;
    for (const auto& [mono, coef] : f.total().differential(idx).terms()) {
      std::vector<std::pair<int, int>> factors;
      for (auto [g, e] : mono.factors()) factors.emplace_back(reindex.at(g), e);
      out.add_term(Monomial(std::move(factors)), coef);
    }
    diffs.push_back(std::move(out));
  }

  int odd_kept = 0, even_kept = 0, discarded_weight = 0;
  for (int k : keep_set) (gens[static_cast<std::size_t>(k)].odd() ? odd_kept : even_kept) += 1;
  for (int w : discarded) {
    split.discarded.push_back(gens[static_cast<std::size_t>(w)].name);
    discarded_weight += gens[static_cast<std::size_t>(w)].degree;
  }
  split.m = static_cast<int>(discarded.size());
  split.f0_balance = (odd_kept == even_kept);

  Meta meta = f.total().meta();
  meta.name = f.total().meta().name + " kept";
  if (meta.fiber_dim) {
    // Formal dimension drops by the degrees of the discarded odd generators
    // (exact for elliptic fibers, which this route asserts anyway). If the
    // discards outweigh the declared dimension, the declaration cannot
    // describe the kept part, so it is dropped rather than propagated.
    meta.fiber_dim = *meta.fiber_dim - discarded_weight;
    if (*meta.fiber_dim < 0) meta.fiber_dim = std::nullopt;
  }
  if (meta.fiber_dim && meta.base_dim) {
    meta.declared_top = *meta.fiber_dim + *meta.base_dim;
  }
  if (split.f0_balance && f.total().meta().has_assertion("fiber_elliptic")) {
    meta.assertions["fiber_formal"] =
        "kept fiber generators balance odd against even (F0 shape); such elliptic fibers are formal";
    meta.assertions["fiber_elliptic"] =
        "declared through the kept-generator choice (F0 shape) with fiber ellipticity asserted";
  }
  auto sub_total = std::make_shared<CdgaPresentation>(std::move(sub_gens), std::move(diffs),
                                                      std::move(meta));
  sub_total->validate();
  split.sub = FibrationPresentation(sub_total);
  split.valid = true;
  return split;
}

}  // namespace ptc
