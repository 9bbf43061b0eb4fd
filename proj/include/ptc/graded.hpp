#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptc/linalg.hpp"
#include "ptc/rational.hpp"

namespace ptc {

enum class Block { base, fiber };

struct Generator {
  std::string name;
  int degree = 0;
  Block block = Block::fiber;

  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Generator& o) const {
    return name == o.name && degree == o.degree && block == o.block;
  }
};

using GeneratorList = std::vector<Generator>;

// Monomial in a fixed generator list: (generator index, exponent) factors,
// sorted by index, exponents >= 1. Odd generators never exceed exponent 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> factors) : f_(std::move(factors)) {}

  static Monomial one() { return Monomial(); }
  static Monomial gen(int index) { return Monomial({{index, 1}}); }

  bool is_one() const { return f_.empty(); }
  const std::vector<std::pair<int, int>>& factors() const { return f_; }
  int degree(const GeneratorList& gens) const;
  int exponent(int index) const;

  // Canonical order: at the first generator index where exponents differ,
  // the monomial with the larger exponent comes first. For a fixed degree
  // this lists x*z before y*z over {x,y,z}.
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  bool operator!=(const Monomial& o) const { return !(f_ == o.f_); }

  std::string str(const GeneratorList& gens) const;

 private:
  std::vector<std::pair<int, int>> f_;
};

// Product with Koszul sign; nullopt when an odd generator gets squared.
std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a, const Monomial& b,
                                                     const GeneratorList& gens);

// Polynomial with rational coefficients over a fixed generator list. Purely
// a container: multiplication needs the generator table for parities.
class GradedPoly {
 public:
  GradedPoly() = default;
  static GradedPoly zero() { return GradedPoly(); }
  static GradedPoly constant(const Rational& c);
  static GradedPoly generator(int index);
  static GradedPoly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  void add_term(const Monomial& m, const Rational& c);

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  GradedPoly scaled(const Rational& c) const;

  bool operator==(const GradedPoly& o) const { return t_ == o.t_; }

  // Degree of a homogeneous polynomial; nullopt for 0 or mixed degrees.
  std::optional<int> homogeneous_degree(const GeneratorList& gens) const;

 private:
  std::map<Monomial, Rational> t_;
};

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b, const GeneratorList& gens);

// All monomials of total degree n, in canonical order, with coordinate lookup.
class SliceBasis {
 public:
  SliceBasis() = default;
  SliceBasis(int degree, std::vector<Monomial> monomials);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(monos_.size()); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const Monomial& at(int i) const { return monos_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(const Monomial& m) const;

  // Coordinates of a polynomial whose every monomial has degree n.
  // Throws MathError("WrongDegree") on stray monomials.
  SparseVec coords(const GradedPoly& p) const;
  GradedPoly from_coords(const SparseVec& v) const;

 private:
  int degree_ = 0;
  std::vector<Monomial> monos_;
  std::map<Monomial, int> index_;
};

// Monomial basis of degree n over `gens`, canonical order.
SliceBasis monomial_basis(const GeneratorList& gens, int n);

// Total dimension is finite iff every generator is odd.
bool all_generators_odd(const GeneratorList& gens);
// Top degree of the algebra when finite (all generators odd): sum of degrees.
int odd_algebra_top(const GeneratorList& gens);

}  // namespace ptc
