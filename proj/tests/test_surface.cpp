#include "doctest.h"

#include "goldknot/error.hpp"
#include "goldknot/surface.hpp"

using namespace goldknot;

TEST_CASE("standard surfaces have commutator boundaries") {
  const Alphabet a1 = Alphabet::genus(1);
  CHECK(boundary_word(standard_surface(1)) == conjugacy_class(a1.parse_word("a1.b1.A1.B1")));
  const Alphabet a3 = Alphabet::genus(3);
  CHECK(boundary_word(standard_surface(3)) ==
        conjugacy_class(a3.parse_word("a1.b1.A1.B1.a2.b2.A2.B2.a3.b3.A3.B3")));
  CHECK(standard_surface(2).genus() == 2);
}

TEST_CASE("face tracing counts boundary components") {
  // The rose with order a, A, b, B is a planar surface with three faces.
  const std::vector<Letter> planar{Letter::generator(1), Letter::generator(1, true), Letter::generator(2),
                                   Letter::generator(2, true)};
  CHECK(trace_faces(2, planar).size() == 3);
  CHECK_THROWS_AS(RibbonSurface(2, planar), Error);
  CHECK(trace_faces(2, standard_surface(1).vertex_order()).size() == 1);
}

TEST_CASE("malformed vertex orders are rejected") {
  const Letter a = Letter::generator(1);
  CHECK_THROWS_AS(RibbonSurface(2, {a, a, a, a}), Error);
  CHECK_THROWS_AS(RibbonSurface(1, {a, a.inverse()}), Error);
  CHECK_THROWS_AS(standard_surface(0), Error);
}

TEST_CASE("cyclic sign of ends") {
  const RibbonSurface s = standard_surface(1);
  const auto& o = s.vertex_order();
  CHECK(s.cyclic_sign(o[0], o[1], o[2]) == 1);
  CHECK(s.cyclic_sign(o[1], o[2], o[0]) == 1);
  CHECK(s.cyclic_sign(o[1], o[0], o[2]) == -1);
  CHECK(s.position_after(o[1], o[2]) == 0);
  CHECK(s.position_after(o[1], o[1]) == 3);
}

TEST_CASE("connected sums concatenate boundaries") {
  const RibbonSurface s = connected_sum(standard_surface(1), standard_surface(1));
  CHECK(s.rank() == 4);
  CHECK(boundary_word(s) == boundary_word(standard_surface(2)));
  const RibbonSurface t = connected_sum(s, standard_surface(1));
  CHECK(boundary_word(t) == boundary_word(standard_surface(3)));
  CHECK(shift_word(Alphabet::genus(1).parse_word("a1.B1"), 2) == Alphabet::genus(2).parse_word("a2.B2"));
}
