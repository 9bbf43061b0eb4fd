#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptc/graded.hpp"

namespace ptc {

// Side data carried by a presentation. `declared_top` is the user's
// assertion that cohomology vanishes above that degree; `truncated_above`
// marks a presentation whose generator list is cut off above a degree, so
// verdicts beyond it are only valid "modulo truncation". Assertions map a
// flag name (fiber_formal, fiber_elliptic, base_formal, tncz, ...) to the
// user's justification string.
struct Meta {
  std::string name;
  std::optional<int> declared_top;
  std::optional<int> truncated_above;
  std::optional<int> fiber_dim;  // formal dimension of the fiber, if known
  std::optional<int> base_dim;   // formal dimension of the base, if known
  std::map<std::string, std::string> assertions;

  bool has_assertion(const std::string& flag) const { return assertions.count(flag) > 0; }
};

// A finitely presented CDGA: ordered generators plus the differential on
// each generator, extended everywhere by the graded Leibniz rule.
class CdgaPresentation {
 public:
  CdgaPresentation() = default;
  CdgaPresentation(GeneratorList gens, std::vector<GradedPoly> diffs, Meta meta = {});

  const GeneratorList& generators() const { return gens_; }
  const Meta& meta() const { return meta_; }
  Meta& meta() { return meta_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(const std::string& name) const;

  const GradedPoly& differential(int gen_index) const {
    return diffs_[static_cast<std::size_t>(gen_index)];
  }
  const std::vector<GradedPoly>& differentials() const { return diffs_; }

  // Degree-wise homogeneity of every d(gen) and d^2 = 0 on every generator.
  // Throws MathError("DegreeMismatch") / MathError("LeibnizSquareNonzero")
  // naming the offending generator. Also rejects duplicate or malformed
  // generator names and non-positive degrees (connected presentations only).
  void validate();
  bool validated() const { return validated_; }
  void require_validated() const;

  // d extended to arbitrary elements by the graded Leibniz rule.
  GradedPoly apply_differential(const GradedPoly& p) const;

  // Matrix of d : A^n -> A^{n+1} over the canonical monomial bases
  // (column j = coordinates of d applied to the j-th degree-n monomial).
  RationalMatrix differential_matrix(int n) const;

  // True when the underlying algebra is finite-dimensional (all odd).
  bool finite_dimensional() const { return all_generators_odd(gens_); }

  // Largest degree carrying any algebra element, when finite-dimensional.
  std::optional<int> algebra_top() const;

 private:
  GeneratorList gens_;
  std::vector<GradedPoly> diffs_;
  Meta meta_;
  bool validated_ = false;
};

}  // namespace ptc
