#include "ptc/graded.hpp"

#include <algorithm>

#include "ptc/errors.hpp"

namespace ptc {

int Monomial::degree(const GeneratorList& gens) const {
  int d = 0;
  for (const auto& [i, e] : f_) d += gens[static_cast<std::size_t>(i)].degree * e;
  return d;
}

int Monomial::exponent(int index) const {
  for (const auto& [i, e] : f_)
    if (i == index) return e;
  return 0;
}

bool Monomial::operator<(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (i == f_.size()) return false;  // this has exponent 0 here, other is larger: other first
    if (j == o.f_.size()) return true;
    if (f_[i].first != o.f_[j].first) {
      // The one with a nonzero exponent at the smaller index comes first.
      return f_[i].first < o.f_[j].first;
    }
    if (f_[i].second != o.f_[j].second) return f_[i].second > o.f_[j].second;
    ++i;
    ++j;
  }
  return false;
}

std::string Monomial::str(const GeneratorList& gens) const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [i, e] : f_) {
    if (!out.empty()) out += "*";
    out += gens[static_cast<std::size_t>(i)].name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a, const Monomial& b,
                                                     const GeneratorList& gens) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<std::pair<int, int>> out;
  out.reserve(fa.size() + fb.size());

  // Koszul sign: each odd factor of b must move past every odd factor of a
  // with a strictly larger generator index.
  int odd_after = 0;  // odd factors of a not yet passed in the merge
  int odd_total_a = 0;
  for (const auto& [i, e] : fa)
    if (gens[static_cast<std::size_t>(i)].odd()) ++odd_total_a;

  long swaps = 0;
  std::size_t i = 0, j = 0;
  int odd_seen_a = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      if (gens[static_cast<std::size_t>(fa[i].first)].odd()) ++odd_seen_a;
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      const auto& g = gens[static_cast<std::size_t>(fb[j].first)];
      if (g.odd()) {
        if (fb[j].second > 1) return std::nullopt;
        odd_after = odd_total_a - odd_seen_a;
        swaps += odd_after;
      }
      out.push_back(fb[j++]);
    } else {
      const auto& g = gens[static_cast<std::size_t>(fa[i].first)];
      if (g.odd()) return std::nullopt;  // odd generator squared
      out.emplace_back(fa[i].first, fa[i].second + fb[j].second);
      ++i;
      ++j;
    }
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  return std::make_pair(Monomial(std::move(out)), sign);
}

GradedPoly GradedPoly::constant(const Rational& c) {
  GradedPoly p;
  p.add_term(Monomial::one(), c);
  return p;
}

GradedPoly GradedPoly::generator(int index) {
  GradedPoly p;
  p.add_term(Monomial::gen(index), Rational(1));
  return p;
}

GradedPoly GradedPoly::term(const Monomial& m, const Rational& c) {
  GradedPoly p;
  p.add_term(m, c);
  return p;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out;
  for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, x] : t_) out.t_.emplace(m, x * c);
  return out;
}

std::optional<int> GradedPoly::homogeneous_degree(const GeneratorList& gens) const {
  std::optional<int> deg;
  for (const auto& [m, c] : t_) {
    int d = m.degree(gens);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b, const GeneratorList& gens) {
  GradedPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = monomial_mul(ma, mb, gens);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

SliceBasis::SliceBasis(int degree, std::vector<Monomial> monomials)
    : degree_(degree), monos_(std::move(monomials)) {
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
}

std::optional<int> SliceBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec SliceBasis::coords(const GradedPoly& p) const {
  SparseVec out;
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx)
      throw MathError("WrongDegree", "monomial " + std::to_string(degree_) +
                                         "-slice lookup failed (inhomogeneous input?)");
    out.emplace_back(*idx, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

GradedPoly SliceBasis::from_coords(const SparseVec& v) const {
  GradedPoly p;
  for (const auto& [i, c] : v) p.add_term(monos_[static_cast<std::size_t>(i)], c);
  return p;
}

namespace {

void enumerate(const GeneratorList& gens, std::size_t gi, int remaining,
               std::vector<std::pair<int, int>>& acc, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (gi == gens.size()) return;
  const Generator& g = gens[gi];
  int emax = g.odd() ? 1 : remaining / g.degree;
  if (g.degree > remaining) emax = 0;
  for (int e = emax; e >= 0; --e) {
    if (e > 0) acc.emplace_back(static_cast<int>(gi), e);
    enumerate(gens, gi + 1, remaining - e * g.degree, acc, out);
    if (e > 0) acc.pop_back();
  }
}

}  // namespace

SliceBasis monomial_basis(const GeneratorList& gens, int n) {
  std::vector<Monomial> monos;
  if (n == 0) {
    monos.push_back(Monomial::one());
  } else if (n > 0) {
    std::vector<std::pair<int, int>> acc;
    enumerate(gens, 0, n, acc, monos);
  }
  return SliceBasis(n, std::move(monos));
}

bool all_generators_odd(const GeneratorList& gens) {
  for (const auto& g : gens)
    if (!g.odd()) return false;
  return true;
}

int odd_algebra_top(const GeneratorList& gens) {
  int top = 0;
  for (const auto& g : gens) top += g.degree;
  return top;
}

}  // namespace ptc
