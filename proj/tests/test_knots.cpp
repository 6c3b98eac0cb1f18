#include "doctest.h"

#include <fstream>

#include "goldknot/alexander.hpp"
#include "goldknot/error.hpp"
#include "goldknot/io.hpp"
#include "goldknot/knots.hpp"
#include "goldknot/presentation.hpp"
#include "oracles.hpp"

using namespace goldknot;

TEST_CASE("braid words parse and print") {
  const BraidWord b = parse_braid("s1 s2' s1^-1");
  CHECK(b.strands == 3);
  CHECK(b.letters.size() == 3);
  CHECK(format_braid(b) == "s1 s2' s1'");
  CHECK(parse_braid("s1 s1", 4).strands == 4);
  CHECK(parse_braid("", 2).letters.empty());
  CHECK_THROWS_AS(parse_braid("s0"), Error);
  CHECK_THROWS_AS(parse_braid("s1 x2"), Error);
  CHECK_THROWS_AS(parse_braid("s3", 2), Error);
}

TEST_CASE("closure components are the cycles of the permutation") {
  CHECK(closure_components(parse_braid("s1 s1 s1")) == 1);
  CHECK(closure_components(parse_braid("s1 s1")) == 2);
  CHECK(closure_components(parse_braid("", 2)) == 2);
  CHECK(closure_components(parse_braid("s1 s2' s1 s2'")) == 1);
  CHECK(closure_components(parse_braid("s1", 3)) == 2);
  CHECK_THROWS_AS(wirtinger_from_braid(parse_braid("s1 s1")), Error);
}

TEST_CASE("Wirtinger presentations of knots abelianize to Z") {
  for (const char* b : {"s1 s1 s1", "s1 s2' s1 s2'", "s1 s1 s1 s1 s1", "s1 s2 s3 s1 s2 s3 s1", "s1"}) {
    const GroupPresentation p = wirtinger_from_braid(parse_braid(b));
    CHECK(abelian_invariants(p) == std::vector<long>{0});
    CHECK(p.deficiency() == 1);
  }
}

TEST_CASE("braid Alexander polynomials match Seifert-matrix oracles") {
  const auto delta = [](const char* b) { return oracle::from_laurent(alexander_polynomial(wirtinger_from_braid(parse_braid(b)))); };
  CHECK(delta("s1 s1 s1") == oracle::normalize(oracle::seifert_alexander({{-1, 1}, {0, -1}})));
  CHECK(delta("s1 s2' s1 s2'") == oracle::normalize(oracle::seifert_alexander({{1, 1}, {0, -1}})));
  CHECK(delta("s1 s1 s1 s1 s1") == oracle::Poly{1, -1, 1, -1, 1});
  CHECK(delta("s1") == oracle::Poly{1});
}

TEST_CASE("catalog models carry their classical invariants") {
  const std::vector<std::pair<std::string, oracle::Poly>> expected{
      {"trefoil", {1, -1, 1}}, {"figure8", {1, -3, 1}}, {"T25", {1, -1, 1, -1, 1}}};
  for (const auto& [name, poly] : expected) {
    const FiberedKnotModel& m = catalog(name);
    CHECK(is_symplectic(m.homology_matrix()));
    CHECK(oracle::normalize(oracle::characteristic(m.homology_matrix())) == poly);
    CHECK(oracle::from_laurent(m.alexander_reference()) == poly);
    CHECK(m.monodromy().apply(boundary_word(m.fiber())) == boundary_word(m.fiber()));
    CHECK(oracle::from_laurent(alexander_polynomial(wirtinger_from_braid(catalog_braid(name)))) == poly);
  }
  CHECK(catalog("trefoil").class_period() == 6);
  CHECK(catalog("T25").class_period() == 10);
  CHECK_FALSE(catalog("figure8").class_period().has_value());
  CHECK_THROWS_AS(catalog("unknown"), Error);
}

TEST_CASE("monodromy powers compose") {
  const FiberedKnotModel& m = catalog("figure8");
  const FreeGroupAutomorphism p2 = m.monodromy_power(2);
  CHECK(m.monodromy_power(5).images() == m.monodromy().power(5).images());
  CHECK(m.monodromy_power(-2).after(p2).images() == FreeGroupAutomorphism::identity(2).images());
}

TEST_CASE("inner automorphisms are recognized") {
  const Alphabet a = Alphabet::genus(1);
  const Word c = a.parse_word("a1.b1");
  std::vector<Word> images;
  std::vector<Word> inverses;
  for (const char* g : {"a1", "b1"}) {
    images.push_back(multiply(multiply(c, a.parse_word(g)), invert(c)));
    inverses.push_back(multiply(multiply(invert(c), a.parse_word(g)), c));
  }
  CHECK(is_inner(FreeGroupAutomorphism(2, images, inverses)));
  CHECK(is_inner(FreeGroupAutomorphism::identity(2)));
  CHECK_FALSE(is_inner(catalog("trefoil").monodromy()));
  CHECK(is_inner(catalog("trefoil").monodromy_power(6)));
}

TEST_CASE("custom models load from JSON and are validated") {
  const Json good = Json::parse(R"({"genus":1,"monodromy":{"a1":"a1.b1","b1":"b1"},"inverse":{"a1":"a1.B1","b1":"b1"},"alexander":"t^2-3t+1"})");
  // a -> ab, b -> b is a single twist: char poly (t-1)^2, not the reference.
  CHECK_THROWS_AS(parse_model(good, "bad"), Error);
  const Json twist = Json::parse(R"({"genus":1,"monodromy":{"a1":"a1.b1","b1":"b1"},"inverse":{"a1":"a1.B1","b1":"b1"},"alexander":"t^2-2t+1"})");
  CHECK(parse_model(twist, "twist").genus() == 1);
  const Json broken = Json::parse(R"({"genus":1,"monodromy":{"a1":"a1"},"inverse":{"a1":"a1"},"alexander":"1"})");
  CHECK_THROWS_AS(parse_model(broken, "x"), Error);
}
