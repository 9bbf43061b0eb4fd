#include "ptc/presentation.hpp"

#include <set>

#include "ptc/errors.hpp"
#include "ptc/expr.hpp"

namespace ptc {

CdgaPresentation::CdgaPresentation(GeneratorList gens, std::vector<GradedPoly> diffs, Meta meta)
    : gens_(std::move(gens)), diffs_(std::move(diffs)), meta_(std::move(meta)) {
  diffs_.resize(gens_.size());
}

std::optional<int> CdgaPresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

void CdgaPresentation::validate() {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!valid_identifier(g.name)) {
      throw MathError("BadGeneratorName", "invalid generator name '" + g.name + "'");
    }
    if (!seen.insert(g.name).second) {
      throw MathError("DuplicateGenerator", "generator '" + g.name + "' declared twice");
    }
    if (g.degree < 1) {
      throw MathError("NonPositiveDegree",
                      "generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                          "; connected presentations need positive degrees");
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const GradedPoly& dg = diffs_[i];
    if (dg.is_zero()) continue;
    auto deg = dg.homogeneous_degree(gens_);
    if (!deg || *deg != gens_[i].degree + 1) {
      std::string found = deg ? std::to_string(*deg) : "mixed degrees";
      throw MathError("DegreeMismatch", "generator '" + gens_[i].name + "': d(" + gens_[i].name +
                                            ") has degree " + found + ", expected " +
                                            std::to_string(gens_[i].degree + 1));
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    GradedPoly dd = apply_differential(diffs_[i]);
    if (!dd.is_zero()) {
      throw MathError("LeibnizSquareNonzero", "generator '" + gens_[i].name + "': d(d(" +
                                                  gens_[i].name + ")) = " +
                                                  print_poly(dd, gens_) + ", expected 0");
    }
  }
  validated_ = true;
}

void CdgaPresentation::require_validated() const {
  if (!validated_) throw MathError("NotValidated", "presentation '" + meta_.name + "' not validated");
}

GradedPoly CdgaPresentation::apply_differential(const GradedPoly& p) const {
  GradedPoly out;
  for (const auto& [mono, coef] : p.terms()) {
    const auto& factors = mono.factors();
    int prefix_parity = 0;  // parity of the degree of factors before i
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto [gi, ei] = factors[i];
      const GradedPoly& dg = diffs_[static_cast<std::size_t>(gi)];
      if (!dg.is_zero()) {
        // d(... g^e ...) contributes e * prefix * d(g) * g^{e-1} * suffix,
        // signed by the parity of the prefix degree (Leibniz).
        std::vector<std::pair<int, int>> prefix(factors.begin(),
                                                factors.begin() + static_cast<long>(i));
        std::vector<std::pair<int, int>> rest;
        if (ei > 1) rest.emplace_back(gi, ei - 1);
        rest.insert(rest.end(), factors.begin() + static_cast<long>(i) + 1, factors.end());

        Rational c = coef * Rational(ei);
        if (prefix_parity % 2 != 0) c = -c;
        GradedPoly term = GradedPoly::term(Monomial(std::move(prefix)), c);
        term = poly_mul(term, dg, gens_);
        term = poly_mul(term, GradedPoly::term(Monomial(std::move(rest)), Rational(1)), gens_);
        out += term;
      }
      prefix_parity += ei * gens_[static_cast<std::size_t>(gi)].degree;
    }
  }
  return out;
}

RationalMatrix CdgaPresentation::differential_matrix(int n) const {
  SliceBasis source = monomial_basis(gens_, n);
  SliceBasis target = monomial_basis(gens_, n + 1);
  RationalMatrix m(target.dim(), source.dim());
  std::vector<SparseVec> rows(static_cast<std::size_t>(target.dim()));
  for (int j = 0; j < source.dim(); ++j) {
    GradedPoly dj = apply_differential(GradedPoly::term(source.at(j), Rational(1)));
    for (const auto& [idx, val] : target.coords(dj)) {
      rows[static_cast<std::size_t>(idx)].emplace_back(j, val);
    }
  }
  for (int i = 0; i < target.dim(); ++i) m.set_row(i, std::move(rows[static_cast<std::size_t>(i)]));
  return m;
}

std::optional<int> CdgaPresentation::algebra_top() const {
  if (!finite_dimensional()) return std::nullopt;
  return odd_algebra_top(gens_);
}

}  // namespace ptc
