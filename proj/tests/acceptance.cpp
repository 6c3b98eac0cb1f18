// Acceptance criteria. Prints one PASS/FAIL line per criterion; with an
// argument N runs criterion N only. Exit status is nonzero if any fail.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "goldknot/alexander.hpp"
#include "goldknot/cover.hpp"
#include "goldknot/goldman.hpp"
#include "goldknot/io.hpp"
#include "goldknot/knots.hpp"
#include "goldknot/liealg.hpp"
#include "goldknot/selftest.hpp"
#include "oracles.hpp"

using namespace goldknot;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

std::string fmt(const Alphabet& a, const CyclicWord& c) { return "<" + a.format(c) + ">"; }

LinearCombination bracket_with(const RibbonSurface& s, const CyclicWord& x, const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [c, q] : y.terms()) out += q * goldman_bracket(s, x, c);
  return out;
}

// 1. Antisymmetry and Jacobi on genus 1 and 2.
Outcome lie_axioms() {
  Outcome o;
  Rng rng(101);
  int pairs = 0;
  int triples = 0;
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 250; ++i, ++pairs) {
      const CyclicWord x = random_class(rng, s.rank(), 8);
      const CyclicWord y = random_class(rng, s.rank(), 8);
      o.require(goldman_bracket(s, x, y) == -goldman_bracket(s, y, x),
                "antisymmetry fails for " + fmt(a, x) + ", " + fmt(a, y));
    }
    for (int i = 0; i < 100; ++i, ++triples) {
      const CyclicWord x = random_class(rng, s.rank(), 8);
      const CyclicWord y = random_class(rng, s.rank(), 8);
      const CyclicWord z = random_class(rng, s.rank(), 8);
      const LinearCombination sum = bracket_with(s, x, goldman_bracket(s, y, z)) +
                                    bracket_with(s, y, goldman_bracket(s, z, x)) +
                                    bracket_with(s, z, goldman_bracket(s, x, y));
      o.require(sum.empty(), "Jacobi fails for " + fmt(a, x) + ", " + fmt(a, y) + ", " + fmt(a, z));
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
  return o;
}

// 2. Anchor values and centrality.
Outcome anchors() {
  Outcome o;
  Rng rng(202);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    const LinearCombination got = goldman_bracket(s, conjugacy_class(a.parse_word("a1")),
                                                  conjugacy_class(a.parse_word("b1")));
    o.require(got == LinearCombination(conjugacy_class(a.parse_word("a1.b1"))),
              "[<a1>,<b1>] = " + to_json(got, a).dump());
    // The boundary word read by hand from the standard vertex order.
    std::string boundary_text;
    for (int i = 1; i <= genus; ++i) {
      if (i > 1) boundary_text += '.';
      const std::string k = std::to_string(i);
      boundary_text += "a" + k + ".b" + k + ".A" + k + ".B" + k;
    }
    const CyclicWord boundary = conjugacy_class(a.parse_word(boundary_text));
    o.require(boundary == boundary_word(s), "unexpected boundary word " + a.format(boundary_word(s)));
    for (int i = 0; i < 100; ++i) {
      const CyclicWord x = random_class(rng, s.rank(), 8);
      o.require(goldman_bracket(s, x, x).empty(), "[x,x] != 0 for " + fmt(a, x));
      o.require(goldman_bracket(s, boundary, x).empty() && goldman_bracket(s, x, boundary).empty(),
                "boundary not central against " + fmt(a, x));
      o.require(goldman_bracket(s, CyclicWord{}, x).empty(), "trivial class not central against " + fmt(a, x));
    }
  }
  if (o.pass) o.detail = "[<a1>,<b1>] = +<a1.b1>; 200 partners";
  return o;
}

// 3. Homological projection against the symplectic-form bracket.
Outcome homology() {
  Outcome o;
  Rng rng(303);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 200; ++i) {
      const CyclicWord x = random_class(rng, s.rank(), 8);
      const CyclicWord y = random_class(rng, s.rank(), 8);
      const auto hx = abelianize(x.word(), s.rank());
      const auto hy = abelianize(y.word(), s.rank());
      HomologyCombination expected;
      if (const long long w = oracle::omega(hx, hy); w != 0) {
        HomologyVector sum(hx.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = hx[k] + hy[k];
        expected[sum] = Rational(static_cast<long>(w));
      }
      o.require(homological_projection(goldman_bracket(s, x, y), s.rank()) == expected,
                "projection differs for " + fmt(a, x) + ", " + fmt(a, y));
    }
  }
  if (o.pass) o.detail = "400 pairs";
  return o;
}

// 4. Fox calculus against Seifert matrices.
Outcome alexander_oracle() {
  Outcome o;
  struct Case {
    const char* name;
    std::vector<std::vector<long long>> seifert;
  };
  const std::vector<Case> cases{
      {"trefoil", {{-1, 1}, {0, -1}}},
      {"figure8", {{1, 1}, {0, -1}}},
      {"T25", {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}},
  };
  std::string detail;
  for (const auto& c : cases) {
    const LaurentPolynomial fox = alexander_polynomial(wirtinger_from_braid(catalog_braid(c.name)));
    const oracle::Poly seifert = oracle::normalize(oracle::seifert_alexander(c.seifert));
    const oracle::Poly got = oracle::from_laurent(fox);
    o.require(got == seifert, std::string(c.name) + ": Fox " + fox.to_string() + " vs Seifert oracle");
    o.require(std::llabs(oracle::at_one(got)) == 1, std::string(c.name) + ": Delta(1) != +-1");
    oracle::Poly reversed(got.rbegin(), got.rend());
    o.require(oracle::normalize(reversed) == got, std::string(c.name) + ": not symmetric");
    detail += std::string(detail.empty() ? "" : ", ") + c.name + " " + fox.to_string();
  }
  const LaurentPolynomial unknot = alexander_polynomial(wirtinger_from_braid(parse_braid("", 1)));
  o.require(unknot.to_string() == "1", "unknot gives " + unknot.to_string());
  if (o.pass) o.detail = detail;
  return o;
}

// 5. det(tI - M) = Delta and M symplectic.
Outcome fibered_consistency() {
  Outcome o;
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& m = catalog(name);
    const auto& h = m.homology_matrix();
    const oracle::Poly charpoly = oracle::normalize(oracle::characteristic(h));
    const oracle::Poly delta =
        oracle::from_laurent(alexander_polynomial(wirtinger_from_braid(catalog_braid(name))));
    o.require(charpoly == delta, name + ": det(tI - M) differs from Delta");
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::int64_t> ci(n);
        std::vector<std::int64_t> cj(n);
        for (std::size_t k = 0; k < n; ++k) {
          ci[k] = h[k][i];
          cj[k] = h[k][j];
        }
        std::vector<std::int64_t> ei(n, 0);
        std::vector<std::int64_t> ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        o.require(oracle::omega(ci, cj) == oracle::omega(ei, ej), name + ": M^T J M != J");
      }
    }
  }
  if (o.pass) o.detail = "trefoil, figure8, T25";
  return o;
}

// 6. Width-2 window: pushforward([b1,b2]) = 2 [p(b1), p(b2)].
Outcome naturality_scaling() {
  Outcome o;
  Rng rng(606);
  int agree = 0;
  int total = 0;
  for (const char* name : {"trefoil", "figure8"}) {
    const FiberedKnotModel& m = catalog(name);
    const WindowMap wm = window(m, 0, 1);
    const Alphabet wa = wm.alphabet();
    for (int i = 0; i < 50; ++i, ++total) {
      const CyclicWord b1 = random_class(rng, wm.rank(), 6);
      const CyclicWord b2 = random_class(rng, wm.rank(), 6);
      const LinearCombination lhs = wm.pushforward(goldman_bracket(wm.surface(), b1, b2));
      const LinearCombination rhs = Rational(2) * bracket_piK(m, wm.pushforward(b1), wm.pushforward(b2));
      agree += lhs == rhs ? 1 : 0;
      o.require(lhs == rhs, std::string(name) + ": " + fmt(wa, b1) + ", " + fmt(wa, b2) + " pushes to " +
                                to_json(lhs, m.alphabet()).dump() + " but 2[p(b1),p(b2)] = " +
                                to_json(rhs, m.alphabet()).dump());
    }
  }
  o.detail += " (" + std::to_string(agree) + "/" + std::to_string(total) + " pairs agree)";
  return o;
}

// 7. [tx, ty] = t[x, y] on pi_K, Pi_K and H.
Outcome t_equivariance() {
  Outcome o;
  Rng rng(707);
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& m = catalog(name);
    const Alphabet& a = m.alphabet();
    for (int i = 0; i < 100; ++i) {
      const CyclicWord x = random_class(rng, m.rank(), 5);
      const CyclicWord y = random_class(rng, m.rank(), 5);
      const LinearCombination xy = bracket_piK(m, x, y);
      const LinearCombination txty = bracket_piK(m, t_shift(m, x, 1), t_shift(m, y, 1));
      o.require(txty == t_shift(m, xy, 1), name + " pi: " + fmt(a, x) + ", " + fmt(a, y));
      o.require(project_to_PiK(m, txty, kDefaultOrbitBound) ==
                    project_to_PiK(m, t_shift(m, xy, 1), kDefaultOrbitBound),
                name + " Pi: " + fmt(a, x) + ", " + fmt(a, y));
      const HClass hx = abelianize(x.word(), m.rank());
      const HClass hy = abelianize(y.word(), m.rank());
      o.require(bracket_H(m.genus(), t_on_H(m, hx), t_on_H(m, hy)) == t_on_H(m, bracket_H(m.genus(), hx, hy)),
                name + " H: " + fmt(a, x) + ", " + fmt(a, y));
    }
  }
  if (o.pass) o.detail = "100 pairs per catalog knot";
  return o;
}

// 8. bracket_PiK under shifted representatives.
Outcome quotient_well_defined() {
  Outcome o;
  Rng rng(808);
  std::uniform_int_distribution<int> shift(-2, 2);
  int agree = 0;
  int total = 0;
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& m = catalog(name);
    const Alphabet& a = m.alphabet();
    for (int i = 0; i < 50; ++i, ++total) {
      const CyclicWord x = random_class(rng, m.rank(), 5);
      const CyclicWord y = random_class(rng, m.rank(), 5);
      const int n = shift(rng);
      const int k = shift(rng);
      const LinearCombination base = bracket_PiK(m, LinearCombination(x), LinearCombination(y), kDefaultOrbitBound);
      const LinearCombination moved = bracket_PiK(m, LinearCombination(t_shift(m, x, n)),
                                                  LinearCombination(t_shift(m, y, k)), kDefaultOrbitBound);
      agree += base == moved ? 1 : 0;
      o.require(base == moved, name + ": " + fmt(a, x) + ", " + fmt(a, y) + " with shifts " + std::to_string(n) +
                                   ", " + std::to_string(k) + ": " + to_json(base, a).dump() + " vs " +
                                   to_json(moved, a).dump());
    }
  }
  o.detail += " (" + std::to_string(agree) + "/" + std::to_string(total) + " pairs agree)";
  return o;
}

// 9. Schreier round trip and the trefoil relator schema.
Outcome cover_round_trip() {
  Outcome o;
  Rng rng(909);
  int words = 0;
  while (words < 100) {
    // Signed generator numbers; 1 is the meridian.
    std::vector<int> raw;
    const int length = std::uniform_int_distribution<int>(0, 14)(rng);
    for (int i = 0; i < length; ++i) {
      const int g = std::uniform_int_distribution<int>(1, 3)(rng);
      raw.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
    }
    int exponent = 0;
    for (int x : raw) exponent += x == 1 ? 1 : x == -1 ? -1 : 0;
    if (exponent != 0) continue;
    ++words;
    const std::vector<int> reduced = oracle::free_reduce(raw);
    std::vector<Letter> letters;
    for (int x : raw) letters.push_back(Letter::generator(std::abs(x), x < 0));
    const Word back = project_back(rewrite_to_cover(Word::reduce(letters)));
    std::vector<int> got;
    for (Letter l : back.letters()) got.push_back(l.inverted() ? -l.index() : l.index());
    o.require(got == reduced, "round trip changes a word of length " + std::to_string(raw.size()));
  }
  const FiberedKnotModel& m = catalog("trefoil");
  const LeveledPresentation lp = reidemeister_schreier(meridional_presentation(m));
  const Alphabet base = lp.base_alphabet();
  for (int k : {-2, 0, 3}) {
    const auto relators = lp.instantiate(k);
    o.require(relators.size() == 2, "trefoil schema has " + std::to_string(relators.size()) + " relators");
    for (std::size_t i = 0; i < relators.size() && i < 2; ++i) {
      const Word y = m.monodromy().images()[i];
      const Word z{Letter::generator(static_cast<int>(i) + 1)};
      const LeveledWord expected = multiply(at_level(y, k), invert(at_level(z, k + 1)));
      o.require(relators[i] == expected, "relator " + std::to_string(i + 1) + " at k = " + std::to_string(k) +
                                             " reads " + format_leveled(relators[i], base));
      o.require(to_fiber(m, relators[i]).empty(), "relator does not vanish in the fiber group");
    }
  }
  const auto zero = lp.instantiate(0);
  o.require(format_leveled(zero[0], base) == "a1(0).b1(0).A1(0).A1(1)" &&
                format_leveled(zero[1], base) == "b1(0).A1(0).B1(1)",
            "trefoil schema at k = 0 reads " + format_leveled(zero[0], base) + ", " + format_leveled(zero[1], base));
  if (o.pass) o.detail = "100 words; trefoil schema at k = -2, 0, 3";
  return o;
}

// 10. Byte-identical selftest reports.
Outcome determinism() {
  Outcome o;
  SelftestConfig serial;
  serial.seed = 20240601;
  serial.jobs = 1;
  SelftestConfig parallel = serial;
  parallel.jobs = 4;
  const std::string first = format_report_json(serial, run_selftest(serial));
  const std::string second = format_report_json(serial, run_selftest(serial));
  const std::string threaded = format_report_json(parallel, run_selftest(parallel));
  o.require(first == second, "two serial runs differ");
  o.require(first == threaded, "parallel report differs from serial");
  if (o.pass) o.detail = std::to_string(first.size()) + " byte report";
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"Lie axioms", lie_axioms},
      {"Goldman anchor values", anchors},
      {"homological homomorphism", homology},
      {"Alexander oracle", alexander_oracle},
      {"fibered consistency", fibered_consistency},
      {"naturality scaling", naturality_scaling},
      {"t-equivariance", t_equivariance},
      {"quotient well-definedness", quotient_well_defined},
      {"cover round-trip", cover_round_trip},
      {"determinism", determinism},
  };
  std::size_t first = 0;
  std::size_t last = criteria.size();
  if (argc > 1) {
    const long n = std::strtol(argv[1], nullptr, 10);
    if (n < 1 || n > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
    first = static_cast<std::size_t>(n - 1);
    last = first + 1;
  }
  int failures = 0;
  for (std::size_t i = first; i < last; ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
