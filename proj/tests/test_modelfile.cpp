#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "ptc/modelfile.hpp"

using namespace ptc;

namespace {

int parse_fails_at(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const std::vector<std::string> kFixtures = {
    "ky.model",           "not_tncz.model",   "hyperbolic_truncated.model",
    "stiefel_n2.model",   "s4_point.model",   "odd_sphere_point.model",
    "badmodel.model"};

}  // namespace

TEST_CASE("all bundled models parse") {
  for (const std::string& name : kFixtures) {
    CAPTURE(name);
    CdgaPresentation p = load_model_file(std::string(MODELS_DIR) + "/" + name);
    CHECK(p.generator_count() >= 1);
    CHECK_FALSE(p.meta().name.empty());
  }
  CHECK_THROWS_AS(load_model_file(std::string(MODELS_DIR) + "/does_not_exist.model"), IoError);
}

TEST_CASE("meta carries blocks, dimensions, truncation and assertions") {
  CdgaPresentation stiefel = load_model_file(std::string(MODELS_DIR) + "/stiefel_n2.model");
  CHECK(stiefel.meta().fiber_dim == 9);
  CHECK(stiefel.meta().base_dim == 6);
  CHECK(stiefel.meta().has_assertion("fiber_formal"));
  CHECK(stiefel.meta().has_assertion("fiber_elliptic"));
  CHECK(stiefel.meta().has_assertion("base_formal"));
  int base_count = 0;
  for (const Generator& g : stiefel.generators()) {
    if (g.block == Block::base) ++base_count;
  }
  CHECK(base_count == 2);

  CdgaPresentation hyp = load_model_file(std::string(MODELS_DIR) + "/hyperbolic_truncated.model");
  CHECK(hyp.meta().truncated_above == 7);
  CHECK_FALSE(hyp.meta().has_assertion("fiber_formal"));
}

TEST_CASE("serialization round-trips every fixture") {
  for (const std::string& name : kFixtures) {
    CAPTURE(name);
    CdgaPresentation p = load_model_file(std::string(MODELS_DIR) + "/" + name);
    std::string once = serialize_model(p);
    CdgaPresentation q = parse_model(once);
    CHECK(serialize_model(q) == once);
    REQUIRE(q.generator_count() == p.generator_count());
    for (int i = 0; i < p.generator_count(); ++i) {
      CHECK(q.generator(i).name == p.generator(i).name);
      CHECK(q.generator(i).degree == p.generator(i).degree);
      CHECK(q.generator(i).block == p.generator(i).block);
      CHECK(q.differential(i) == p.differential(i));
    }
    CHECK(q.meta().assertions == p.meta().assertions);
    CHECK(q.meta().truncated_above == p.meta().truncated_above);
  }
}

TEST_CASE("parse errors carry the offending line number") {
  CHECK(parse_fails_at("[junk]\n") == 1);
  CHECK(parse_fails_at("[meta\n") == 1);
  CHECK(parse_fails_at("x = 3\n") == 1);  // entry before any section
  CHECK(parse_fails_at("[generators]\nx 3\n") == 2);
  CHECK(parse_fails_at("[generators]\nx =\n") == 2);
  CHECK(parse_fails_at("[generators]\nx = banana\n") == 2);
  CHECK(parse_fails_at("[generators]\nx = 3 middle\n") == 2);
  CHECK(parse_fails_at("[generators]\nx = 3 fiber extra\n") == 2);
  CHECK(parse_fails_at("[generators]\nx = 3\n\nx = 5\n") == 4);
  CHECK(parse_fails_at("[generators]\nx = 3\n[differential]\ny = x\n") == 4);
  CHECK(parse_fails_at("[generators]\nx = 3\nz = 5\n[differential]\nz = x\nz = x\n") == 6);
  CHECK(parse_fails_at("[generators]\nx = 3\nz = 5\n[differential]\nz = x +\n") == 5);
  CHECK(parse_fails_at("[meta]\ncolor = blue\n[generators]\nx = 3\n") == 2);
  CHECK(parse_fails_at("[meta]\nassert. = empty\n[generators]\nx = 3\n") == 2);
  CHECK(parse_fails_at("[meta]\nname = empty\n") == 0);  // no generators at all
}

TEST_CASE("defaults: comments, blank lines, fiber block, zero differential") {
  CdgaPresentation p = parse_model(
      "# header comment\n"
      "[generators]\n"
      "\n"
      "x = 3\n"
      "b = 4 base\n");
  REQUIRE(p.generator_count() == 2);
  CHECK(p.generator(0).block == Block::fiber);
  CHECK(p.generator(1).block == Block::base);
  CHECK(p.differential(0).is_zero());
  CHECK(p.differential(1).is_zero());
  CHECK(p.meta().name.empty());

  CdgaPresentation withmeta = parse_model(
      "[meta]\n"
      "assert.fiber_formal = stated for the test\n"
      "[generators]\n"
      "y = 3\n");
  CHECK(withmeta.meta().has_assertion("fiber_formal"));
  CHECK(withmeta.meta().assertions.at("fiber_formal") == "stated for the test");
}
