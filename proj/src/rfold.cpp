#include "ptc/rfold.hpp"

#include <string>

#include "ptc/errors.hpp"

namespace ptc {

RFoldModel rfold_model(const FibrationPresentation& f, int r) {
  if (r < 1) throw MathError("BadCopyCount", "r-fold model needs r >= 1");
  const CdgaPresentation& total = f.total();
  const auto& gens = total.generators();

  RFoldModel model;
  model.r = r;

  // Generators: base block first in original order, then fiber generators
  // in original order with their r copies adjacent (y1, y2, ..., z1, z2...).
  GeneratorList rgens;
  model.base_index.assign(gens.size(), -1);
  model.copy_index.assign(static_cast<std::size_t>(r), {});
  for (int b : f.base_indices()) {
    model.base_index[static_cast<std::size_t>(b)] = static_cast<int>(rgens.size());
    rgens.push_back(gens[static_cast<std::size_t>(b)]);
  }
  std::vector<int> fiber_pos(gens.size(), -1);
  int pos = 0;
  for (int v : f.fiber_indices()) {
    fiber_pos[static_cast<std::size_t>(v)] = pos;
    const Generator& g = gens[static_cast<std::size_t>(v)];
    for (int lam = 0; lam < r; ++lam) {
      model.copy_index[static_cast<std::size_t>(lam)].push_back(static_cast<int>(rgens.size()));
      Generator copy = g;
      if (r > 1) copy.name = g.name + std::to_string(lam + 1);
      rgens.push_back(copy);
    }
    ++pos;
  }

  // Differential of copy lambda: the relative differential with fiber
  // letters sent to their lambda-th copies, base letters fixed.
  auto substitute = [&](const GradedPoly& p, int lam) {
    GradedPoly out;
    for (const auto& [mono, coef] : p.terms()) {
      GradedPoly acc = GradedPoly::constant(coef);
      for (auto [g, e] : mono.factors()) {
        int target = gens[static_cast<std::size_t>(g)].block == Block::base
                         ? model.base_index[static_cast<std::size_t>(g)]
                         : model.copy_index[static_cast<std::size_t>(lam)]
                                           [static_cast<std::size_t>(
                                               fiber_pos[static_cast<std::size_t>(g)])];
        for (int k = 0; k < e; ++k) {
          acc = poly_mul(acc, GradedPoly::generator(target), rgens);
        }
      }
      out += acc;
    }
    return out;
  };

  std::vector<GradedPoly> rdiffs(rgens.size());
  for (int b : f.base_indices()) {
    rdiffs[static_cast<std::size_t>(model.base_index[static_cast<std::size_t>(b)])] =
        substitute(total.differential(b), 0);
  }
  for (int v : f.fiber_indices()) {
    for (int lam = 0; lam < r; ++lam) {
      int target = model.copy_index[static_cast<std::size_t>(lam)]
                                   [static_cast<std::size_t>(fiber_pos[static_cast<std::size_t>(v)])];
      rdiffs[static_cast<std::size_t>(target)] = substitute(total.differential(v), lam);
    }
  }

  Meta meta = total.meta();
  meta.name = total.meta().name + " r=" + std::to_string(r) + " fiberwise product";
  meta.declared_top = std::nullopt;
  if (total.meta().fiber_dim && total.meta().base_dim) {
    meta.declared_top = r * *total.meta().fiber_dim + *total.meta().base_dim;
  }
  meta.fiber_dim = std::nullopt;
  meta.base_dim = std::nullopt;

  auto pres = std::make_shared<CdgaPresentation>(std::move(rgens), std::move(rdiffs),
                                                 std::move(meta));
  pres->validate();
  model.presentation = pres;

  // Diagonal: base fixed, v^(lambda) -> v.
  std::vector<GradedPoly> diag_images(pres->generators().size());
  for (int b : f.base_indices()) {
    diag_images[static_cast<std::size_t>(model.base_index[static_cast<std::size_t>(b)])] =
        GradedPoly::generator(b);
  }
  for (int v : f.fiber_indices()) {
    for (int lam = 0; lam < r; ++lam) {
      int src = model.copy_index[static_cast<std::size_t>(lam)]
                                [static_cast<std::size_t>(fiber_pos[static_cast<std::size_t>(v)])];
      diag_images[static_cast<std::size_t>(src)] = GradedPoly::generator(v);
    }
  }
  model.diagonal = CdgaMorphism(pres, f.total_ptr(), std::move(diag_images));
  model.diagonal.validate();

  for (int lam = 0; lam < r; ++lam) {
    std::vector<GradedPoly> images(gens.size());
    for (int b : f.base_indices()) {
      images[static_cast<std::size_t>(b)] =
          GradedPoly::generator(model.base_index[static_cast<std::size_t>(b)]);
    }
    for (int v : f.fiber_indices()) {
      images[static_cast<std::size_t>(v)] = GradedPoly::generator(
          model.copy_index[static_cast<std::size_t>(lam)]
                          [static_cast<std::size_t>(fiber_pos[static_cast<std::size_t>(v)])]);
    }
    CdgaMorphism inj(f.total_ptr(), pres, std::move(images));
    inj.validate();
    model.copy_injections.push_back(std::move(inj));
  }
  return model;
}

GradedIdeal kernel_ideal(const RFoldModel& m, int window) {
  GradedIdeal ideal;
  ideal.power = 1;
  ideal.window = window;
  for (int n = 0; n <= window; ++n) {
    RationalMatrix diag = m.diagonal.slice_matrix(n);
    SubspaceBasis k = kernel(diag);
    if (k.dim() > 0) ideal.span.slices.emplace(n, std::move(k));
  }
  return ideal;
}

GradedIdeal ideal_power(const RFoldModel& m, const GradedIdeal& ideal, int k, int window) {
  if (ideal.power != 1) {
    throw MathError("BadIdealPower", "ideal_power expects the k = 1 kernel ideal");
  }
  if (window > ideal.window) {
    throw MathError("WindowTooSmall", "requested window " + std::to_string(window) +
                                          " exceeds the computed kernel window " +
                                          std::to_string(ideal.window));
  }
  if (k < 1) throw MathError("BadIdealPower", "ideal power wants k >= 1");
  GradedIdeal out;
  out.power = k;
  out.window = window;
  out.span = ideal.span;
  PolynomialAlgebra alg(m.presentation);
  for (int i = 1; i < k; ++i) {
    out.span = span_products(alg, out.span, ideal.span, window);
    if (out.span.empty()) break;
  }
  return out;
}

}  // namespace ptc
