#include "doctest.h"

#include "goldknot/error.hpp"
#include "goldknot/selftest.hpp"
#include "goldknot/words.hpp"
#include "oracles.hpp"

using namespace goldknot;

namespace {

const Alphabet g1 = Alphabet::genus(1);
const Alphabet g2 = Alphabet::genus(2);

CyclicWord cls(const Alphabet& a, const char* text) { return conjugacy_class(a.parse_word(text)); }

}  // namespace

TEST_CASE("letters order generators before their inverses") {
  CHECK(Letter::generator(1) < Letter::generator(1, true));
  CHECK(Letter::generator(1, true) < Letter::generator(2));
  CHECK(Letter::generator(3, true).inverse() == Letter::generator(3));
  CHECK(Letter::generator(2, true).sign() == -1);
}

TEST_CASE("parse and format round trip") {
  CHECK(g2.format(g2.parse_word("a1.B2.b1")) == "a1.B2.b1");
  CHECK(g2.parse_word("a2^-1") == g2.parse_word("A2"));
  CHECK(g1.parse_word("1").empty());
  CHECK(g1.format(Word{}) == "1");
  CHECK_THROWS_AS(g1.parse_word("a2"), Error);
  CHECK_THROWS_AS(g1.parse_word("a1..b1"), Error);
}

TEST_CASE("free reduction agrees with a stack oracle") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> raw;
    std::vector<Letter> letters;
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int k = 0; k < n; ++k) {
      const int g = std::uniform_int_distribution<int>(1, 2)(rng);
      const bool inv = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      raw.push_back(inv ? -g : g);
      letters.push_back(Letter::generator(g, inv));
    }
    std::vector<int> got;
    const Word reduced = Word::reduce(letters);
    for (Letter l : reduced.letters()) got.push_back(l.inverted() ? -l.index() : l.index());
    CHECK(got == oracle::free_reduce(raw));
  }
}

TEST_CASE("multiply, invert and power") {
  const Word u = g1.parse_word("a1.b1");
  CHECK(multiply(u, invert(u)).empty());
  CHECK(g1.format(power(u, 2)) == "a1.b1.a1.b1");
  CHECK(g1.format(power(u, -1)) == "B1.A1");
  CHECK(power(u, 0).empty());
}

TEST_CASE("conjugacy classes are cyclically reduced least rotations") {
  CHECK(g1.format(cls(g1, "b1.a1")) == "a1.b1");
  CHECK(g1.format(cls(g1, "B1.a1.b1.b1")) == "a1.b1");
  CHECK(cls(g1, "a1.b1.A1").size() == 1);
  CHECK(cls(g1, "a1.A1").empty());
  CHECK(cls(g1, "a1.b1.A1.B1") == cls(g1, "b1.A1.B1.a1"));
  CHECK(cls(g1, "a1.b1") != cls(g1, "b1.a1.a1"));
}

TEST_CASE("rotation reads the class from a position") {
  const CyclicWord w = cls(g1, "a1.b1.b1");
  CHECK(g1.format(rotate(w, 1)) == "b1.b1.a1");
  CHECK(conjugacy_class(rotate(w, 2)) == w);
}

TEST_CASE("primitive roots") {
  auto [root, k] = primitive_root(cls(g1, "a1.b1.a1.b1.a1.b1"));
  CHECK(k == 3);
  CHECK(root == cls(g1, "a1.b1"));
  auto [same, one] = primitive_root(cls(g1, "a1.a1.b1"));
  CHECK(one == 1);
  CHECK(same == cls(g1, "a1.a1.b1"));
  CHECK(primitive_root(cls(g1, "a1.a1")).second == 2);
}

TEST_CASE("linear combinations drop zero terms") {
  LinearCombination c(cls(g1, "a1"), 2);
  c.add(cls(g1, "a1"), -2);
  CHECK(c.empty());
  c.add(cls(g1, "b1"), Rational(1, 2));
  CHECK(c.coefficient(cls(g1, "b1")) == Rational(1, 2));
  CHECK((c - c).empty());
  CHECK((Rational(2) * c).coefficient(cls(g1, "b1")) == 1);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(parse_rational("6/8") == Rational(3, 4));
}

TEST_CASE("automorphisms compose and invert") {
  // a -> a.b, b -> b
  const FreeGroupAutomorphism tb(2, {g1.parse_word("a1.b1"), g1.parse_word("b1")},
                                 {g1.parse_word("a1.B1"), g1.parse_word("b1")});
  const Word w = g1.parse_word("a1.b1.A1.B1");
  CHECK(tb.inverse().apply(tb.apply(w)) == w);
  CHECK(tb.power(3).apply(g1.parse_word("a1")) == g1.parse_word("a1.b1.b1.b1"));
  CHECK(tb.power(-2).apply(g1.parse_word("a1")) == g1.parse_word("a1.B1.B1"));
  CHECK(tb.after(tb.inverse()).apply(w) == w);
  CHECK(tb.homology_matrix() == std::vector<std::vector<std::int64_t>>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(FreeGroupAutomorphism(2, {g1.parse_word("a1.b1"), g1.parse_word("b1")},
                                        {g1.parse_word("a1"), g1.parse_word("b1")}),
                  Error);
}

TEST_CASE("abelianization counts exponents") {
  CHECK(abelianize(g2.parse_word("a1.a1.B2.a2"), 4) == std::vector<std::int64_t>{2, 0, 1, -1});
  CHECK_THROWS_AS(require_rank(g2.parse_word("b2"), 2), Error);
}
