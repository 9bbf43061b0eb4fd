#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <memory>
#include <string>

#include "doctest.h"
#include "ptc/bounds.hpp"
#include "ptc/expr.hpp"
#include "ptc/modelfile.hpp"
#include "ptc/rfold.hpp"

using namespace ptc;

namespace {

FibrationPresentation load_fib(const std::string& name) {
  auto p = std::make_shared<CdgaPresentation>(load_model_file(std::string(MODELS_DIR) + "/" + name));
  p->validate();
  return FibrationPresentation(p);
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
    return n.find(needle) != std::string::npos;
  });
}

const KernelTableRow* find_row(const KernelTable& t, int degree) {
  for (const auto& row : t.rows) {
    if (row.degree == degree) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("windows resolve structurally, by declaration, then by assertion") {
  FibrationPresentation ky = load_fib("ky.model");
  Window w = resolve_window(ky.total(), 50, AssertionSet{});
  CHECK(w.cutoff == 11);  // 3 + 3 + 5, all generators odd
  CHECK(w.complete);
  CHECK_FALSE(w.by_declaration);
  CHECK_FALSE(w.truncated);

  Window tight = resolve_window(ky.total(), 7, AssertionSet{});
  CHECK(tight.cutoff == 7);
  CHECK_FALSE(tight.complete);

  // Declared side data completes the window for even-generator models.
  FibrationPresentation s4 = load_fib("s4_point.model");
  RFoldModel m2 = rfold_model(s4, 2);
  Window declared = resolve_window(*m2.presentation, 50, AssertionSet{});
  CHECK(declared.cutoff == 8);
  CHECK(declared.complete);
  CHECK(declared.by_declaration);

  AssertionSet asserts;
  asserts.add("cohomology_vanishes_above(6)", "for the test");
  Window asserted = resolve_window(s4.total(), 50, asserts);
  CHECK(asserted.cutoff == 6);
  CHECK(asserted.complete);
  CHECK(asserted.by_declaration);

  AssertionSet bad;
  bad.add("cohomology_vanishes_above(six)", "malformed");
  CHECK_THROWS_AS(bad.vanishing_degree(), MathError);

  FibrationPresentation hyp = load_fib("hyperbolic_truncated.model");
  Window trunc = resolve_window(hyp.total(), 12, AssertionSet{});
  CHECK(trunc.truncated);
  CHECK(trunc.truncation_from == 8);
  CHECK(trunc.cutoff == 12);
  CHECK_FALSE(trunc.complete);
}

TEST_CASE("zero-divisor cup-lengths match hand values") {
  FibrationPresentation sphere = load_fib("odd_sphere_point.model");
  ZclResult zs = zcl(sphere, 2, 20, AssertionSet{});
  CHECK(zs.value == 1);
  CHECK(zs.status() == ReportStatus::exact);
  CHECK(zs.witness_degree == 3);
  CHECK(zs.window.cutoff == 6);

  FibrationPresentation ky = load_fib("ky.model");
  ZclResult z2 = zcl(ky, 2, 30, AssertionSet{});
  CHECK(z2.value == 3);
  CHECK(z2.status() == ReportStatus::exact);
  CHECK(z2.window.cutoff == 22);
  // Triples of degree-3 kernel classes wedge out and the degree-12 products
  // are all exact, so the first surviving triple needs the degree-8 classes.
  CHECK(z2.witness_degree == 14);

  ZclResult z3 = zcl(ky, 3, 40, AssertionSet{});
  CHECK(z3.value == 6);
  CHECK(z3.status() == ReportStatus::exact);

  FibrationPresentation nt = load_fib("not_tncz.model");
  ZclResult zn = zcl(nt, 2, 30, AssertionSet{});
  CHECK(zn.value == 2);
  CHECK(zn.status() == ReportStatus::exact);
  CHECK(zn.window.cutoff == 19);
  // (y1 - y2) times x*(z1 - z2) survives in degree 11.
  CHECK(zn.witness_degree == 11);

  // For more copies the value is r + 1: each kernel factor consumes a y
  // letter (differences of y or of y*z) or the single x, so r + 1 caps the
  // product length, and a product of that length survives.
  CHECK(zcl(nt, 3, 43, AssertionSet{}).value == 4);
  CHECK(zcl(nt, 4, 43, AssertionSet{}).value == 5);

  FibrationPresentation s4 = load_fib("s4_point.model");
  for (int r = 2; r <= 4; ++r) {
    ZclResult zr = zcl(s4, r, 40, AssertionSet{});
    CHECK(zr.value == r);
    CHECK(zr.status() == ReportStatus::conditional);
    CHECK(zr.window.by_declaration);
  }

  FibrationPresentation hyp = load_fib("hyperbolic_truncated.model");
  ZclResult zh = zcl(hyp, 2, 14, AssertionSet{});
  CHECK(zh.value == 2);
  CHECK(zh.status() == ReportStatus::window_limited);
  // The witness sits at degree 6, below the truncation threshold, but the
  // claim that no 3-fold product survives inspects degrees past it, so the
  // verdict as a whole is flagged. The sandwich keeps the finer view that
  // the lower bound alone is truncation-free.
  CHECK(zh.modulo_truncation());
  CHECK(zh.witness_degree == 6);
  CHECK(zh.window.truncation_from == 8);
}

TEST_CASE("kernel tables list the nonzero slices with honest flags") {
  FibrationPresentation hyp = load_fib("hyperbolic_truncated.model");
  KernelTable t = zcl_kernel_table(hyp, 2, 8, AssertionSet{});
  REQUIRE(t.rows.size() == 3);
  const KernelTableRow* r3 = find_row(t, 3);
  const KernelTableRow* r6 = find_row(t, 6);
  const KernelTableRow* r8 = find_row(t, 8);
  REQUIRE(r3 != nullptr);
  REQUIRE(r6 != nullptr);
  REQUIRE(r8 != nullptr);
  CHECK(r3->dim == 2);
  CHECK(r6->dim == 6);
  CHECK(r8->dim == 2);
  // Only the slice at the truncation threshold is at risk from missing
  // generators; H^7 of a truncation at 7 is still trustworthy.
  CHECK_FALSE(r3->modulo_truncation);
  CHECK_FALSE(r6->modulo_truncation);
  CHECK(r8->modulo_truncation);
  CHECK(static_cast<int>(r3->basis.size()) == r3->dim);

  FibrationPresentation ky = load_fib("ky.model");
  KernelTable kt = zcl_kernel_table(ky, 2, 22, AssertionSet{});
  const KernelTableRow* k3 = find_row(kt, 3);
  const KernelTableRow* k6 = find_row(kt, 6);
  const KernelTableRow* k8 = find_row(kt, 8);
  REQUIRE(k3 != nullptr);
  CHECK(k3->dim == 2);
  REQUIRE(k6 != nullptr);
  CHECK(k6->dim == 4);
  REQUIRE(k8 != nullptr);
  CHECK(k8->dim == 2);
  CHECK(find_row(kt, 4) == nullptr);
  CHECK(find_row(kt, 5) == nullptr);
  CHECK(find_row(kt, 7) == nullptr);
}

TEST_CASE("quotient injectivity pinches the kernel-power invariant") {
  FibrationPresentation sphere = load_fib("odd_sphere_point.model");
  HtcResult hs = htc(sphere, 2, 10, AssertionSet{});
  CHECK(hs.value == 1);
  CHECK(hs.status() == ReportStatus::exact);

  FibrationPresentation s4 = load_fib("s4_point.model");
  HtcResult h4 = htc(s4, 2, 20, AssertionSet{});
  CHECK(h4.value == 2);
  CHECK(h4.status() == ReportStatus::conditional);

  FibrationPresentation ky = load_fib("ky.model");
  HtcResult hk = htc(ky, 2, 25, AssertionSet{});
  CHECK(hk.value == 3);
  CHECK(hk.status() == ReportStatus::exact);

  // The chain zcl <= htc holds degreewise on these models.
  CHECK(zcl(sphere, 2, 10, AssertionSet{}).value <= hs.value);
  CHECK(zcl(ky, 2, 25, AssertionSet{}).value <= hk.value);
}

TEST_CASE("kernel-power witnesses certify lower bounds") {
  FibrationPresentation ky = load_fib("ky.model");
  HtcWitnessResult w = htc_witness(ky, 2, 2, 22);
  REQUIRE(w.found);
  CHECK(w.degree == 11);
  CHECK_FALSE(w.modulo_truncation);
  REQUIRE(w.certificate.size() == 3);
  CHECK(w.certificate[0].find("3-fold products") != std::string::npos);
  CHECK(w.certificate[1].find("cocycle") != std::string::npos);
  CHECK(w.certificate[2].find("not a coboundary") != std::string::npos);

  // Recheck the witness against the model it certifies.
  RFoldModel m = rfold_model(ky, 2);
  CHECK(m.presentation->apply_differential(w.witness).is_zero());
  GradedIdeal ideal = kernel_ideal(m, 11);
  GradedIdeal cube = ideal_power(m, ideal, 3, 11);
  SliceBasis b11 = monomial_basis(m.presentation->generators(), 11);
  REQUIRE(cube.span.slice(11) != nullptr);
  CHECK(cube.span.slice(11)->contains(b11.coords(w.witness)));

  // Not a coboundary: the witness stays independent of d(A^10).
  Eliminator exact(b11.dim());
  SliceBasis b10 = monomial_basis(m.presentation->generators(), 10);
  for (const Monomial& mono : b10.monomials()) {
    GradedPoly pm;
    pm.add_term(mono, Rational(1));
    GradedPoly dm = m.presentation->apply_differential(pm);
    if (!dm.is_zero()) exact.insert(b11.coords(dm));
  }
  CHECK(exact.insert(b11.coords(w.witness)));

  CHECK_FALSE(htc_witness(ky, 2, 3, 22).found);
  CHECK_FALSE(htc_witness(load_fib("odd_sphere_point.model"), 2, 1, 12).found);
  CHECK_THROWS_AS(htc_witness(ky, 2, 0, 22), MathError);
}

TEST_CASE("a truncated model still yields a witness below the cutoff") {
  FibrationPresentation hyp = load_fib("hyperbolic_truncated.model");
  HtcWitnessResult w = htc_witness(hyp, 2, 2, 14);
  REQUIRE(w.found);
  CHECK(w.degree == 11);
  CHECK(w.modulo_truncation);  // degree 11 sits above the truncation threshold

  RFoldModel m = rfold_model(hyp, 2);
  const GeneratorList& gens = m.presentation->generators();
  CHECK(m.presentation->apply_differential(w.witness).is_zero());

  // The hand witness (x1-x2)(y1-y2)(t1-t2) is a non-exact cocycle in the
  // cube of the kernel ideal; the engine's canonical pick may differ from
  // it, but both certify the same bound.
  GradedPoly hand = poly_mul(parse_expression("x1 - x2", gens),
                             parse_expression("y1 - y2", gens), gens);
  hand = poly_mul(hand, parse_expression("t1 - t2", gens), gens);
  CHECK(m.presentation->apply_differential(hand).is_zero());
  GradedIdeal ideal = kernel_ideal(m, 11);
  GradedIdeal cube = ideal_power(m, ideal, 3, 11);
  SliceBasis b11 = monomial_basis(gens, 11);
  REQUIRE(cube.span.slice(11) != nullptr);
  CHECK(cube.span.slice(11)->contains(b11.coords(hand)));

  Eliminator exact(b11.dim());
  SliceBasis b10 = monomial_basis(gens, 10);
  for (const Monomial& mono : b10.monomials()) {
    GradedPoly pm;
    pm.add_term(mono, Rational(1));
    GradedPoly dm = m.presentation->apply_differential(pm);
    if (!dm.is_zero()) exact.insert(b11.coords(dm));
  }
  CHECK(exact.insert(b11.coords(hand)));
}

TEST_CASE("the odd-fiber formula is exact and guarded") {
  FibrationPresentation ky = load_fib("ky.model");
  TcValue v = tc_odd_fiber(ky, 4);
  CHECK(v.value == 9);
  CHECK(v.status == ReportStatus::exact);
  REQUIRE_FALSE(v.provenance.empty());
  CHECK(v.provenance.front().route == "odd-fiber formula");

  CHECK_THROWS_AS(tc_odd_fiber(load_fib("stiefel_n2.model"), 2), MathError);
  CHECK_THROWS_AS(tc_odd_fiber(load_fib("hyperbolic_truncated.model"), 2), MathError);
}

TEST_CASE("fiber restriction bounds from below") {
  FibrationPresentation stiefel = load_fib("stiefel_n2.model");
  TcValue v = tc_fiber_lower(stiefel, 2, 40, AssertionSet{});
  CHECK(v.value == 3);
  CHECK(v.status == ReportStatus::exact);

  FibrationPresentation ky = load_fib("ky.model");
  CHECK(tc_fiber_lower(ky, 3, 40, AssertionSet{}).value == 6);
}

TEST_CASE("the dimension bound uses computed or declared dimensions") {
  FibrationPresentation stiefel = load_fib("stiefel_n2.model");
  TcValue v = svarc_bound(stiefel, 2, AssertionSet{});
  CHECK(v.value == 12);  // floor((2*9 + 6 + 1) / 2)
  CHECK(v.status == ReportStatus::conditional);
  CHECK_FALSE(v.assertions_used.empty());

  FibrationPresentation ky = load_fib("ky.model");
  TcValue vk = svarc_bound(ky, 2, AssertionSet{});
  CHECK(vk.value == 11);  // formal dimension 11 is computed, base empty
  CHECK(vk.status == ReportStatus::exact);

  GeneratorList gens = {{"q", 4, Block::fiber}};
  auto p = std::make_shared<CdgaPresentation>(gens, std::vector<GradedPoly>(1), Meta{.name = "q4"});
  p->validate();
  FibrationPresentation free_even(p);
  CHECK_THROWS_AS(svarc_bound(free_even, 2, AssertionSet{}), MathError);
}

TEST_CASE("the cohomology-equality route needs assertions plus a machine check") {
  FibrationPresentation s4 = load_fib("s4_point.model");
  std::optional<TcValue> v = tc_equality_route(s4, 2, 20, AssertionSet{});
  REQUIRE(v.has_value());
  CHECK(v->value == 2);
  CHECK(v->status == ReportStatus::conditional);
  CHECK_FALSE(v->assertions_used.empty());

  std::optional<TcValue> v3 = tc_equality_route(s4, 3, 20, AssertionSet{});
  REQUIRE(v3.has_value());
  CHECK(v3->value == 3);

  // No formality or ellipticity assertions: the route declines.
  FibrationPresentation ky = load_fib("ky.model");
  CHECK_FALSE(tc_equality_route(ky, 2, 25, AssertionSet{}).has_value());

  // Assertions cannot override the machine TNCZ check.
  FibrationPresentation nt = load_fib("not_tncz.model");
  AssertionSet forced;
  forced.add("fiber_formal", "assumed for the test");
  forced.add("fiber_elliptic", "assumed for the test");
  forced.add("base_formal", "assumed for the test");
  CHECK_FALSE(tc_equality_route(nt, 2, 20, forced).has_value());
}

TEST_CASE("the odd-extension bound composes with the kept resolution") {
  FibrationPresentation stiefel = load_fib("stiefel_n2.model");
  TcValue v = tc_extension_bound(stiefel, {"x", "z"}, 2, 40, AssertionSet{});
  CHECK(v.value == 3);
  CHECK(v.status == ReportStatus::conditional);
  REQUIRE_FALSE(v.provenance.empty());
  CHECK(v.provenance.front().route == "odd-extension bound");
  CHECK(v.provenance.front().detail.find("cohomology-equality route") != std::string::npos);
  CHECK_FALSE(v.assertions_used.empty());

  // Discarding the even generator is not an odd extension.
  CHECK_THROWS_AS(tc_extension_bound(stiefel, {"y", "z"}, 2, 40, AssertionSet{}), MathError);

  // Keeping {x, y} drops d z = x^2, so the kept fiber fails the machine
  // TNCZ check and falls through to the dimension bound.
  TcValue vy = tc_extension_bound(stiefel, {"x", "y"}, 2, 40, AssertionSet{});
  CHECK(vy.value == 6);
  CHECK(vy.status == ReportStatus::conditional);
  CHECK(vy.provenance.front().detail.find("dimension bound") != std::string::npos);

  // Keeping only {x} discards more declared dimension than the fiber has,
  // so every route for the kept part honestly fails.
  CHECK_THROWS_AS(tc_extension_bound(stiefel, {"x"}, 2, 40, AssertionSet{}), MathError);

  // An empty keep set reduces to the identity fibration; the bound then
  // agrees with the odd-fiber formula for an all-odd fiber.
  FibrationPresentation ky = load_fib("ky.model");
  TcValue empty_keep = tc_extension_bound(ky, {}, 3, 40, AssertionSet{});
  CHECK(empty_keep.value == 6);
  CHECK(empty_keep.value == tc_odd_fiber(ky, 3).value);
}

TEST_CASE("the sandwich closes exactly on the seven-manifold") {
  FibrationPresentation ky = load_fib("ky.model");
  BoundReport rep = tc_sandwich(ky, 2, 30, AssertionSet{});
  REQUIRE(rep.exact.has_value());
  CHECK(*rep.exact == 3);
  CHECK(rep.status == ReportStatus::exact);
  REQUIRE(rep.zcl_detail.has_value());
  CHECK(rep.zcl_detail->value == 3);
  CHECK_FALSE(has_note(rep.notes, "strictly below"));
}

TEST_CASE("the sandwich closes conditionally through the kept split") {
  FibrationPresentation stiefel = load_fib("stiefel_n2.model");
  BoundReport rep = tc_sandwich(stiefel, 2, 40, AssertionSet{}, std::vector<std::string>{"x", "z"});
  REQUIRE(rep.exact.has_value());
  CHECK(*rep.exact == 3);
  CHECK(rep.status == ReportStatus::conditional);
  REQUIRE(rep.lower.has_value());
  CHECK(rep.lower->value == 3);
  REQUIRE(rep.upper.has_value());
  CHECK(rep.upper->value == 3);
  CHECK_FALSE(rep.assertions_used.empty());
  REQUIRE(rep.zcl_detail.has_value());
  CHECK(rep.zcl_detail->value == 3);
}

TEST_CASE("the sandwich stays open but escalates witnesses on a truncation") {
  FibrationPresentation hyp = load_fib("hyperbolic_truncated.model");
  BoundReport rep = tc_sandwich(hyp, 2, 14, AssertionSet{});
  CHECK_FALSE(rep.exact.has_value());
  CHECK(rep.status == ReportStatus::window_limited);
  REQUIRE(rep.lower.has_value());
  // zcl gives 2; the degree-11 witness in the cube of the kernel pushes the
  // lower bound to 3 even though no upper bound is available.
  CHECK(rep.lower->value == 3);
  CHECK(rep.lower->modulo_truncation);
  CHECK_FALSE(rep.upper.has_value());
  CHECK(has_note(rep.notes, "dimension bound unavailable"));
  CHECK(has_note(rep.notes, "truncation threshold"));
}

TEST_CASE("difference rows compare zcl jumps against the fiber cup-length") {
  FibrationPresentation ky = load_fib("ky.model");
  DiffNilReport rep = diff_nil_check(ky, 3, 40, AssertionSet{});
  CHECK(rep.cupl_fiber == 2);
  CHECK(rep.cupl_status == ReportStatus::exact);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].r == 2);
  CHECK(rep.rows[0].zcl_low == 3);
  CHECK(rep.rows[0].zcl_high == 6);
  CHECK(rep.rows[0].holds);
  CHECK(rep.rows[0].certified);
  CHECK(rep.all_hold);

  FibrationPresentation nt = load_fib("not_tncz.model");
  DiffNilReport rn = diff_nil_check(nt, 3, 40, AssertionSet{});
  CHECK(rn.cupl_fiber == 2);
  REQUIRE(rn.rows.size() == 1);
  CHECK(rn.rows[0].zcl_low == 2);
  CHECK(rn.rows[0].zcl_high == 4);
  CHECK(rn.rows[0].holds);

  CHECK_THROWS_AS(diff_nil_check(ky, 2, 30, AssertionSet{}), MathError);
}
