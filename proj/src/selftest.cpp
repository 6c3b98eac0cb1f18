#include "goldknot/selftest.hpp"

#include <exception>
#include <functional>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "goldknot/alexander.hpp"
#include "goldknot/cover.hpp"
#include "goldknot/error.hpp"
#include "goldknot/goldman.hpp"
#include "goldknot/io.hpp"
#include "goldknot/liealg.hpp"

namespace goldknot {

CyclicWord random_class(Rng& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> length_dist(1, max_length);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, static_cast<std::uint32_t>(2 * rank - 1));
  const int length = length_dist(rng);
  std::vector<Letter> raw;
  while (static_cast<int>(raw.size()) < length) {
    const Letter l = Letter::from_code(code_dist(rng));
    if (!raw.empty() && l == raw.back().inverse()) continue;
    if (static_cast<int>(raw.size()) == length - 1 && raw.size() > 0 && l == raw.front().inverse()) continue;
    raw.push_back(l);
  }
  return conjugacy_class(Word::reduce(raw));
}

Word random_word(Rng& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, static_cast<std::uint32_t>(2 * rank - 1));
  const int length = length_dist(rng);
  std::vector<Letter> raw;
  while (static_cast<int>(raw.size()) < length) {
    const Letter l = Letter::from_code(code_dist(rng));
    if (!raw.empty() && l == raw.back().inverse()) continue;
    raw.push_back(l);
  }
  return Word::reduce(raw);
}

BraidWord random_knot_braid(Rng& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> length_dist(1, max_length);
  std::uniform_int_distribution<int> index_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (;;) {
    BraidWord b;
    b.strands = strands;
    const int length = length_dist(rng);
    for (int i = 0; i < length; ++i) b.letters.push_back({index_dist(rng), sign_dist(rng) ? 1 : -1});
    if (closure_components(b) == 1) return b;
  }
}

namespace {

// Records checks; keeps the first counterexample only.
class Check {
 public:
  explicit Check(SuiteResult& result) : result_(result) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures == 0) result_.counterexample = describe();
    ++result_.failures;
  }

 private:
  SuiteResult& result_;
};

struct Context {
  const SelftestConfig& config;
  Rng rng;
  Check check;
};

using Bracket = std::function<LinearCombination(const RibbonSurface&, const CyclicWord&, const CyclicWord&)>;

Bracket surface_bracket(const SelftestConfig& config) {
  if (!config.mutate_sign) return [](const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y) {
    return goldman_bracket(s, x, y);
  };
  return [](const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y) {
    LinearCombination r = goldman_bracket(s, x, y);
    return x < y ? -r : r;
  };
}

LinearCombination extend(const Bracket& bracket, const RibbonSurface& s, const CyclicWord& x,
                         const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [c, q] : y.terms()) out += q * bracket(s, x, c);
  return out;
}

std::string show(const Alphabet& a, std::initializer_list<CyclicWord> words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ", ";
    out += "<" + a.format(w) + ">";
  }
  return out;
}

std::string show(const LinearCombination& c, const Alphabet& a) { return to_json(c, a).dump(); }

// ---------------------------------------------------------------- goldman suites

void suite_circular_order(Context& ctx) {
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 150; ++i) {
      std::vector<Ray> rays;
      std::vector<std::string> labels;
      while (rays.size() < 4) {
        const CyclicWord w = random_class(ctx.rng, s.rank(), 6);
        const std::size_t p = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(ctx.rng);
        auto [back, fwd] = rays_at(w, p);
        const bool forward = std::uniform_int_distribution<int>(0, 1)(ctx.rng) == 1;
        Ray r = forward ? fwd : back;
        bool fresh = true;
        for (const Ray& o : rays) fresh = fresh && common_prefix(o, r).has_value();
        if (!fresh) continue;
        rays.push_back(std::move(r));
        labels.push_back(a.format(w) + "@" + std::to_string(p) + (forward ? "+" : "-"));
      }
      const int abc = circular_order(rays[0], rays[1], rays[2], s);
      const int bca = circular_order(rays[1], rays[2], rays[0], s);
      const int bac = circular_order(rays[1], rays[0], rays[2], s);
      const int acd = circular_order(rays[0], rays[2], rays[3], s);
      const int abd = circular_order(rays[0], rays[1], rays[3], s);
      const bool transitive = !(abc == 1 && acd == 1) || abd == 1;
      ctx.check.expect(abc == bca && bac == -abc && transitive, [&] {
        return "rays " + labels[0] + ", " + labels[1] + ", " + labels[2] + ", " + labels[3];
      });
    }
  }
}

void suite_antisymmetry(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 250; ++i) {
      const CyclicWord x = random_class(ctx.rng, s.rank(), 8);
      const CyclicWord y = random_class(ctx.rng, s.rank(), 8);
      const LinearCombination xy = bracket(s, x, y);
      const LinearCombination yx = bracket(s, y, x);
      ctx.check.expect(xy == -yx, [&] {
        return show(a, {x, y}) + ": [x,y] = " + show(xy, a) + ", [y,x] = " + show(yx, a);
      });
    }
  }
}

bool jacobi_holds(const Bracket& bracket, const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y,
                  const CyclicWord& z) {
  const LinearCombination sum = extend(bracket, s, x, bracket(s, y, z)) +
                                extend(bracket, s, y, bracket(s, z, x)) +
                                extend(bracket, s, z, bracket(s, x, y));
  return sum.empty();
}

void suite_jacobi(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 100; ++i) {
      const CyclicWord x = random_class(ctx.rng, s.rank(), 8);
      const CyclicWord y = random_class(ctx.rng, s.rank(), 8);
      const CyclicWord z = random_class(ctx.rng, s.rank(), 8);
      ctx.check.expect(jacobi_holds(bracket, s, x, y, z), [&] { return show(a, {x, y, z}); });
    }
  }
}

void suite_common_powers(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 60; ++i) {
      const CyclicWord root = primitive_root(random_class(ctx.rng, s.rank(), 4)).first;
      std::uniform_int_distribution<int> exponent(-3, 3);
      int e1 = 0;
      int e2 = 0;
      while (e1 == 0) e1 = exponent(ctx.rng);
      while (e2 == 0) e2 = exponent(ctx.rng);
      const CyclicWord x = conjugacy_class(power(root.word(), e1));
      const CyclicWord y = conjugacy_class(power(root.word(), e2));
      const CyclicWord z = random_class(ctx.rng, s.rank(), 6);
      ctx.check.expect(bracket(s, x, y) == -bracket(s, y, x) && bracket(s, x, z) == -bracket(s, z, x) &&
                           jacobi_holds(bracket, s, x, y, z),
                       [&] { return show(a, {x, y, z}); });
    }
  }
}

void suite_anchor(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    const CyclicWord a1 = conjugacy_class(Word{Letter::generator(1)});
    const CyclicWord b1 = conjugacy_class(Word{Letter::generator(2)});
    const LinearCombination expected(conjugacy_class(Word{Letter::generator(1), Letter::generator(2)}));
    const LinearCombination got = bracket(s, a1, b1);
    ctx.check.expect(got == expected, [&] { return "[<a1>,<b1>] = " + show(got, a); });
    for (int i = 0; i < 50; ++i) {
      const CyclicWord x = random_class(ctx.rng, s.rank(), 8);
      ctx.check.expect(bracket(s, x, x).empty(), [&] { return "[x,x] != 0 for " + show(a, {x}); });
    }
  }
}

void suite_centrality(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    const CyclicWord boundary = boundary_word(s);
    for (int i = 0; i < 100; ++i) {
      const CyclicWord x = random_class(ctx.rng, s.rank(), 8);
      ctx.check.expect(bracket(s, boundary, x).empty() && bracket(s, CyclicWord{}, x).empty(),
                       [&] { return "boundary or trivial class not central against " + show(a, {x}); });
    }
  }
}

void suite_homology(Context& ctx) {
  const Bracket bracket = surface_bracket(ctx.config);
  for (int genus : {1, 2}) {
    const RibbonSurface s = standard_surface(genus);
    const Alphabet a = Alphabet::genus(genus);
    for (int i = 0; i < 100; ++i) {
      const CyclicWord x = random_class(ctx.rng, s.rank(), 8);
      const CyclicWord y = random_class(ctx.rng, s.rank(), 8);
      const auto lhs = homological_projection(bracket(s, x, y), s.rank());
      const auto rhs = bracket_H(genus, abelianize(x.word(), s.rank()), abelianize(y.word(), s.rank()));
      ctx.check.expect(lhs == rhs, [&] { return show(a, {x, y}); });
    }
  }
}

void suite_parallel_kernel(Context& ctx) {
  const RibbonSurface s = standard_surface(2);
  const Alphabet a = Alphabet::genus(2);
  std::vector<ClassPair> pairs;
  for (int i = 0; i < 40; ++i) pairs.emplace_back(random_class(ctx.rng, 4, 8), random_class(ctx.rng, 4, 8));
  const auto serial = bracket_table_serial(s, pairs);
  const auto parallel = bracket_table_parallel(s, pairs, 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    ctx.check.expect(serial[i] == parallel[i] && serial[i] == goldman_bracket_parallel(s, x, y),
                     [&] { return show(a, {x, y}); });
  }
}

// ---------------------------------------------------------------- knots and alexander

void suite_fox_product_rule(Context& ctx) {
  const Alphabet a = Alphabet::generic(3);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(ctx.rng, 3, 6);
    const Word v = random_word(ctx.rng, 3, 6);
    for (int gen = 1; gen <= 3; ++gen) {
      const GroupRingElement lhs = fox_derivative(multiply(u, v), gen);
      const GroupRingElement rhs = fox_derivative(u, gen) + u * fox_derivative(v, gen);
      ctx.check.expect(lhs == rhs, [&] {
        return "u = " + a.format(u) + ", v = " + a.format(v) + ", generator " + std::to_string(gen);
      });
    }
  }
}

void suite_alexander_catalog(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const LaurentPolynomial braid = alexander_polynomial(wirtinger_from_braid(catalog_braid(name)));
    const LaurentPolynomial torus = alexander_polynomial(meridional_presentation(model));
    const LaurentPolynomial charpoly = characteristic_polynomial(model.homology_matrix());
    const auto& ref = model.alexander_reference();
    ctx.check.expect(equal_up_to_unit(braid, ref) && equal_up_to_unit(torus, ref) &&
                         equal_up_to_unit(charpoly, ref),
                     [&] {
                       return name + ": braid " + braid.to_string() + ", mapping torus " + torus.to_string() +
                              ", det(tI-M) " + charpoly.to_string();
                     });
    const Integer at_one = braid.at_one();
    ctx.check.expect((at_one == 1 || at_one == -1) && equal_up_to_unit(braid, braid.reciprocal()),
                     [&] { return name + ": " + braid.to_string() + " fails Delta(1) or symmetry"; });
  }
}

void suite_alexander_tietze(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const GroupPresentation p = wirtinger_from_braid(catalog_braid(name));
    const LaurentPolynomial base = alexander_polynomial(p);
    for (int i = 0; i < 5; ++i) {
      GroupPresentation q = p;
      const Word g = random_word(ctx.rng, p.rank(), 4);
      q.relators[0] = multiply(multiply(g, q.relators[0]), invert(g));
      // A new generator together with its defining relator extra = g.
      q.generator_names.push_back("extra");
      q.relators.push_back(multiply(Word{Letter::generator(q.rank())}, invert(g)));
      const LaurentPolynomial moved = alexander_polynomial(q);
      ctx.check.expect(equal_up_to_unit(moved, base), [&] {
        return name + " after Tietze moves with g = " + p.alphabet().format(g) + ": " + moved.to_string();
      });
    }
  }
}

void suite_wirtinger_abelianization(Context& ctx) {
  for (int i = 0; i < 20; ++i) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(ctx.rng);
    const BraidWord b = random_knot_braid(ctx.rng, strands, 8);
    const GroupPresentation p = wirtinger_from_braid(b);
    const auto invariants = abelian_invariants(p);
    ctx.check.expect(invariants == std::vector<long>{0} && p.deficiency() == 1,
                     [&] { return "braid " + format_braid(b); });
  }
}

void suite_catalog_invariants(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const CyclicWord w = boundary_word(model.fiber());
    ctx.check.expect(model.monodromy().apply(w) == w && is_symplectic(model.homology_matrix()),
                     [&] { return name; });
  }
}

// ---------------------------------------------------------------- cover

Word random_zero_exponent_word(Rng& rng, int rank, int max_length) {
  for (;;) {
    const Word w = random_word(rng, rank, max_length);
    if (meridian_exponent(w) == 0) return w;
  }
}

void suite_schreier_round_trip(Context& ctx) {
  const Alphabet a({"m", "x1", "x2", "x3"});
  for (int i = 0; i < 100; ++i) {
    const Word w = random_zero_exponent_word(ctx.rng, 4, 12);
    ctx.check.expect(project_back(rewrite_to_cover(w)) == w, [&] { return a.format(w); });
  }
}

void suite_relator_schema(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const GroupPresentation p = meridional_presentation(model);
    const LeveledPresentation lp = reidemeister_schreier(p);
    ctx.check.expect(lp.pairs.has_value(), [&] { return name + ": no y/z pairs"; });
    if (!lp.pairs) continue;
    for (int k = -2; k <= 2; ++k) {
      const auto relators = lp.instantiate(k);
      for (std::size_t i = 0; i < relators.size(); ++i) {
        const auto& [y, z] = (*lp.pairs)[i];
        const LeveledWord expected = multiply(at_level(y, k), invert(at_level(z, k + 1)));
        ctx.check.expect(relators[i] == expected && to_fiber(model, relators[i]).empty(), [&] {
          return name + ": relator " + std::to_string(i + 1) + " at k = " + std::to_string(k) + " reads " +
                 format_leveled(relators[i], lp.base_alphabet());
        });
      }
    }
  }
}

void suite_t_shift_compat(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const GroupPresentation p = meridional_presentation(model);
    for (int i = 0; i < 30; ++i) {
      const Word w = random_zero_exponent_word(ctx.rng, model.rank() + 1, 8);
      const LeveledWord lw = rewrite_to_cover(w);
      const int n = std::uniform_int_distribution<int>(-2, 2)(ctx.rng);
      const bool ok = to_fiber(model, t_shift(lw, n)) == t_shift(model, to_fiber(model, lw), n) &&
                      t_shift(t_shift(lw, n), -n) == lw;
      ctx.check.expect(ok, [&] { return name + ": " + p.alphabet().format(w) + ", n = " + std::to_string(n); });
    }
  }
}

// Words of one window copy, written in the fiber alphabet and shifted in.
void suite_window(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const WindowMap wm = window(model, 0, 1);
    const Alphabet a = model.alphabet();
    const CyclicWord w = boundary_word(model.fiber());
    const CyclicWord pushed = wm.pushforward(boundary_word(wm.surface()));
    const Word w_word = model.fiber().boundary_path();
    ctx.check.expect(pushed == conjugacy_class(multiply(w_word, t_shift(model, w_word, 1))) &&
                         w == model.monodromy().apply(w),
                     [&] { return name + ": window boundary pushes to " + a.format(pushed); });
    for (int i = 0; i < 15; ++i) {
      const CyclicWord x = random_class(ctx.rng, model.rank(), 5);
      const CyclicWord y = random_class(ctx.rng, model.rank(), 5);
      const int cx = std::uniform_int_distribution<int>(0, 1)(ctx.rng);
      const int cy = std::uniform_int_distribution<int>(0, 1)(ctx.rng);
      const CyclicWord bx = conjugacy_class(shift_word(x.word(), cx * model.rank()));
      const CyclicWord by = conjugacy_class(shift_word(y.word(), cy * model.rank()));
      const LinearCombination lhs = wm.pushforward(goldman_bracket(wm.surface(), bx, by));
      const LinearCombination rhs =
          cx == cy ? bracket_piK(model, wm.pushforward(bx), wm.pushforward(by)) : LinearCombination{};
      ctx.check.expect(lhs == rhs, [&] {
        return name + ": copies " + std::to_string(cx) + ", " + std::to_string(cy) + " with " + show(a, {x, y});
      });
    }
  }
}

// ---------------------------------------------------------------- liealg

void suite_t_equivariance(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const Alphabet& a = model.alphabet();
    for (int i = 0; i < 30; ++i) {
      const CyclicWord x = random_class(ctx.rng, model.rank(), 5);
      const CyclicWord y = random_class(ctx.rng, model.rank(), 5);
      const LinearCombination xy = bracket_piK(model, x, y);
      const LinearCombination txty = bracket_piK(model, t_shift(model, x, 1), t_shift(model, y, 1));
      ctx.check.expect(txty == t_shift(model, xy, 1), [&] { return name + " pi: " + show(a, {x, y}); });
      ctx.check.expect(project_to_PiK(model, txty, ctx.config.orbit_bound) ==
                           project_to_PiK(model, xy, ctx.config.orbit_bound),
                       [&] { return name + " Pi: " + show(a, {x, y}); });
      const HClass hx = abelianize(x.word(), model.rank());
      const HClass hy = abelianize(y.word(), model.rank());
      ctx.check.expect(bracket_H(model.genus(), t_on_H(model, hx), t_on_H(model, hy)) ==
                           t_on_H(model, bracket_H(model.genus(), hx, hy)),
                       [&] { return name + " H: " + show(a, {x, y}); });
    }
  }
}

void suite_homology_bracket(Context& ctx) {
  for (int genus : {1, 2}) {
    for (int i = 0; i < 50; ++i) {
      auto draw = [&] {
        HClass h(static_cast<std::size_t>(2 * genus));
        for (auto& v : h) v = std::uniform_int_distribution<std::int64_t>(-3, 3)(ctx.rng);
        return h;
      };
      const HClass h1 = draw();
      const HClass h2 = draw();
      const HClass h3 = draw();
      const HomologyCombination e1{{h1, 1}};
      const HomologyCombination e2{{h2, 1}};
      const HomologyCombination e3{{h3, 1}};
      HomologyCombination jacobi;
      auto accumulate = [&](const HomologyCombination& c) {
        for (const auto& [h, q] : c) {
          jacobi[h] += q;
          if (jacobi[h] == 0) jacobi.erase(h);
        }
      };
      accumulate(bracket_H(genus, e1, bracket_H(genus, e2, e3)));
      accumulate(bracket_H(genus, e2, bracket_H(genus, e3, e1)));
      accumulate(bracket_H(genus, e3, bracket_H(genus, e1, e2)));
      auto negated = bracket_H(genus, h2, h1);
      for (auto& [h, q] : negated) q = -q;
      ctx.check.expect(jacobi.empty() && bracket_H(genus, h1, h2) == negated, [&] {
        return "genus " + std::to_string(genus) + ": " + to_json(e1).dump() + to_json(e2).dump() +
               to_json(e3).dump();
      });
    }
  }
}

void suite_PiK_antisymmetry(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    for (int i = 0; i < 20; ++i) {
      const CyclicWord x = random_class(ctx.rng, model.rank(), 5);
      const CyclicWord y = random_class(ctx.rng, model.rank(), 5);
      const int bound = ctx.config.orbit_bound;
      const TOrbitClass ox = orbit_canonical(model, x, bound);
      const TOrbitClass oy = orbit_canonical(model, y, bound);
      ctx.check.expect(bracket_PiK(model, ox, oy, bound) == -bracket_PiK(model, oy, ox, bound) &&
                           bracket_PiK(model, ox, ox, bound).empty(),
                       [&] { return name + ": " + show(model.alphabet(), {x, y}); });
    }
  }
}

void suite_orbit_canonical(Context& ctx) {
  for (const auto& name : catalog_names()) {
    const FiberedKnotModel& model = catalog(name);
    const int bound = ctx.config.orbit_bound;
    for (int i = 0; i < 10; ++i) {
      const CyclicWord x = random_class(ctx.rng, model.rank(), model.class_period() ? 6 : 4);
      const TOrbitClass o = orbit_canonical(model, x, bound);
      const bool shift_invariant = orbit_canonical(model, t_shift(model, x, 5), bound) == o;
      const bool stable = orbit_canonical(model, x, 2 * bound) == o;
      ctx.check.expect(shift_invariant && stable, [&] { return name + ": " + show(model.alphabet(), {x}); });
    }
  }
}

struct SuiteEntry {
  const char* name;
  void (*run)(Context&);
};

constexpr SuiteEntry kSuites[] = {
    {"goldman.circular_order", suite_circular_order},
    {"goldman.antisymmetry", suite_antisymmetry},
    {"goldman.jacobi", suite_jacobi},
    {"goldman.common_powers", suite_common_powers},
    {"goldman.anchor", suite_anchor},
    {"goldman.centrality", suite_centrality},
    {"goldman.homology", suite_homology},
    {"goldman.parallel_kernel", suite_parallel_kernel},
    {"alexander.fox_product_rule", suite_fox_product_rule},
    {"alexander.catalog", suite_alexander_catalog},
    {"alexander.tietze", suite_alexander_tietze},
    {"knots.wirtinger_abelianization", suite_wirtinger_abelianization},
    {"knots.catalog_invariants", suite_catalog_invariants},
    {"cover.schreier_round_trip", suite_schreier_round_trip},
    {"cover.relator_schema", suite_relator_schema},
    {"cover.t_shift_compat", suite_t_shift_compat},
    {"cover.window_copies", suite_window},
    {"liealg.t_equivariance", suite_t_equivariance},
    {"liealg.homology_bracket", suite_homology_bracket},
    {"liealg.PiK_antisymmetry", suite_PiK_antisymmetry},
    {"liealg.orbit_canonical", suite_orbit_canonical},
};

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SuiteResult run_suite(const SelftestConfig& config, const SuiteEntry& entry) {
  SuiteResult result;
  result.name = entry.name;
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(name_hash(entry.name)),
                    static_cast<std::uint32_t>(name_hash(entry.name) >> 32)};
  Context ctx{config, Rng(seq), Check(result)};
  try {
    entry.run(ctx);
  } catch (const std::exception& e) {
    ++result.cases;
    if (result.failures == 0) result.counterexample = std::string("exception: ") + e.what();
    ++result.failures;
  }
  return result;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  return names;
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  const auto count = static_cast<int>(std::size(kSuites));
  std::vector<SuiteResult> results(static_cast<std::size_t>(count));
  int team = config.jobs;
#ifdef _OPENMP
  if (team <= 0) team = omp_get_max_threads();
#endif
  if (team <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = run_suite(config, kSuites[i]);
    return results;
  }
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = run_suite(config, kSuites[i]);
  return results;
}

std::string format_report_text(const SelftestConfig& config, const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  out << "selftest seed " << config.seed << '\n';
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures << " failed";
    out << ")\n";
    if (!r.passed()) out << "  counterexample: " << r.counterexample << '\n';
    passed += r.passed() ? 1 : 0;
  }
  out << passed << "/" << results.size() << " suites passed\n";
  return out.str();
}

std::string format_report_json(const SelftestConfig& config, const std::vector<SuiteResult>& results) {
  Json suites = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json s{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.passed()) s["counterexample"] = r.counterexample;
    suites.push_back(s);
    all = all && r.passed();
  }
  return Json{{"seed", config.seed}, {"passed", all}, {"suites", suites}}.dump(2) + "\n";
}

}  // namespace goldknot
