#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ptc/linalg.hpp"

using namespace ptc;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (keep(rng) != 0) m.set(i, j, Rational(num(rng), den(rng)));
  return m;
}

SparseVec random_vec(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::vector<Rational> d(static_cast<std::size_t>(dim));
  for (auto& x : d) x = Rational(num(rng));
  return sparse_from_dense(d);
}

oracle::DenseMatrix to_dense(const RationalMatrix& m) {
  oracle::DenseMatrix d(static_cast<std::size_t>(m.rows()),
                        oracle::DenseRow(static_cast<std::size_t>(m.cols()), mpq_class(0)));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.raw();
  return d;
}

}  // namespace

TEST_CASE("rationals canonicalize and parse") {
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3) == Rational(2));
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), MathError);
}

TEST_CASE("sparse vector helpers") {
  std::vector<Rational> dense = {Rational(0), Rational(2), Rational(0), Rational(-1)};
  SparseVec v = sparse_from_dense(dense);
  CHECK(v.size() == 2);
  CHECK(sparse_to_dense(v, 4) == dense);
  CHECK(sparse_get(v, 1) == Rational(2));
  CHECK(sparse_get(v, 0) == Rational(0));
  // x + (-2)*y with y = x/2 cancels the index-1 entry entirely.
  SparseVec half = sparse_scale(v, Rational(1, 2));
  SparseVec res = sparse_axpy(v, Rational(-2), half);
  CHECK(sparse_is_zero(res));
}

TEST_CASE("rref produces reduced pivots") {
  auto m = RationalMatrix::from_dense({{Rational(0), Rational(2), Rational(4)},
                                       {Rational(1), Rational(1), Rational(1)}});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  CHECK(r.reduced.get(0, 0) == Rational(1));
  CHECK(r.reduced.get(0, 1) == Rational(0));
  CHECK(r.reduced.get(0, 2) == Rational(-1));
  CHECK(r.reduced.get(1, 1) == Rational(1));
  CHECK(r.reduced.get(1, 2) == Rational(2));
  // A second pass changes nothing.
  CHECK(rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("rank agrees with the fraction-free oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int round = 0; round < 300; ++round) {
    RationalMatrix m = random_matrix(rng, dim(rng), dim(rng));
    CHECK(rank(m) == oracle::bareiss_rank(to_dense(m)));
  }
}

TEST_CASE("kernel vectors annihilate and complete the rank") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int round = 0; round < 100; ++round) {
    RationalMatrix m = random_matrix(rng, dim(rng), dim(rng));
    SubspaceBasis k = kernel(m);
    CHECK(k.dim() + rank(m) == m.cols());
    for (const auto& row : k.rows()) CHECK(sparse_is_zero(m.apply(row)));
  }
}

TEST_CASE("solve finds exact particular solutions") {
  std::mt19937 rng(31);
  for (int round = 0; round < 50; ++round) {
    RationalMatrix m = random_matrix(rng, 5, 4);
    std::vector<Rational> x0 = sparse_to_dense(random_vec(rng, 4), 4);
    std::vector<Rational> b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
  RationalMatrix zero(2, 2);
  CHECK_FALSE(solve(zero, {Rational(1), Rational(0)}).has_value());
}

TEST_CASE("membership recovers coefficients") {
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    std::vector<SparseVec> vecs;
    for (int i = 0; i < 3; ++i) vecs.push_back(random_vec(rng, 6));
    SubspaceBasis basis = SubspaceBasis::from_vectors(6, vecs);
    SparseVec combo = sparse_axpy(vecs[0], Rational(3, 2), vecs[1]);
    auto coeffs = membership(combo, basis);
    REQUIRE(coeffs.has_value());
    SparseVec rebuilt;
    for (std::size_t i = 0; i < coeffs->size(); ++i)
      rebuilt = sparse_axpy(rebuilt, (*coeffs)[i], basis.rows()[i]);
    CHECK(sparse_is_zero(sparse_axpy(rebuilt, Rational(-1), combo)));
  }
  SubspaceBasis line = SubspaceBasis::from_vectors(3, {sparse_from_dense({1, 0, 0})});
  CHECK_FALSE(membership(sparse_from_dense({0, 1, 0}), line).has_value());
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 60; ++round) {
    std::vector<SparseVec> va, vb;
    for (int i = 0; i < 3; ++i) va.push_back(random_vec(rng, 6));
    for (int i = 0; i < 3; ++i) vb.push_back(random_vec(rng, 6));
    SubspaceBasis a = SubspaceBasis::from_vectors(6, va);
    SubspaceBasis b = SubspaceBasis::from_vectors(6, vb);
    SubspaceBasis s = subspace_sum(a, b);
    SubspaceBasis i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    for (const auto& row : i.rows()) {
      CHECK(a.contains(row));
      CHECK(b.contains(row));
    }
  }
}

TEST_CASE("quotient basis complements a subspace") {
  std::mt19937 rng(555);
  for (int round = 0; round < 40; ++round) {
    std::vector<SparseVec> vecs;
    for (int i = 0; i < 4; ++i) vecs.push_back(random_vec(rng, 6));
    SubspaceBasis whole = SubspaceBasis::from_vectors(6, vecs);
    SubspaceBasis sub = SubspaceBasis::from_vectors(6, {vecs[0], vecs[1]});
    auto reps = quotient_basis(whole, sub);
    CHECK(static_cast<int>(reps.size()) == whole.dim() - sub.dim());
    std::vector<SparseVec> all = sub.rows();
    for (const auto& r : reps) {
      CHECK(whole.contains(r));
      CHECK_FALSE(sub.contains(r));
      all.push_back(r);
    }
    CHECK(SubspaceBasis::from_vectors(6, all) == whole);
  }
  SubspaceBasis whole = SubspaceBasis::from_vectors(3, {sparse_from_dense({1, 0, 0})});
  SubspaceBasis other = SubspaceBasis::from_vectors(3, {sparse_from_dense({0, 1, 0})});
  CHECK_THROWS_AS(quotient_basis(whole, other), MathError);
}

TEST_CASE("eliminator is canonical and solves via tags") {
  std::mt19937 rng(2026);
  for (int round = 0; round < 40; ++round) {
    std::vector<SparseVec> vecs;
    for (int i = 0; i < 4; ++i) vecs.push_back(random_vec(rng, 6));

    Eliminator fwd(6), rev(6);
    for (const auto& v : vecs) fwd.insert(v);
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) rev.insert(*it);
    CHECK(fwd.basis() == rev.basis());
    CHECK(fwd.basis() == SubspaceBasis::from_vectors(6, vecs).rows());

    // Identity tags turn reduction into a solver.
    Eliminator solver(6);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      solver.insert(vecs[i], {{static_cast<int>(i), Rational(1)}});
    SparseVec combo = sparse_axpy(vecs[2], Rational(-5, 3), vecs[0]);
    SparseVec tag;
    SparseVec residual = solver.reduce(combo, &tag);
    CHECK(sparse_is_zero(residual));
    SparseVec rebuilt;
    for (const auto& [i, c] : tag)
      rebuilt = sparse_axpy(rebuilt, c, vecs[static_cast<std::size_t>(i)]);
    CHECK(sparse_is_zero(sparse_axpy(rebuilt, Rational(-1), combo)));
  }

  Eliminator e(3);
  CHECK(e.insert(sparse_from_dense({1, 1, 0})));
  CHECK_FALSE(e.insert(sparse_from_dense({2, 2, 0})));
  CHECK(e.contains(sparse_from_dense({-1, -1, 0})));
  CHECK_FALSE(e.contains(sparse_from_dense({1, 0, 0})));
}
