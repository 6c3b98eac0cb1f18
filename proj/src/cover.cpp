#include "goldknot/cover.hpp"

#include <algorithm>
#include <climits>

#include "goldknot/error.hpp"

namespace goldknot {

LeveledWord LeveledWord::reduce(std::span<const LeveledLetter> raw) {
  LeveledWord out;
  for (const LeveledLetter& l : raw) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

LeveledWord multiply(const LeveledWord& u, const LeveledWord& v) {
  std::vector<LeveledLetter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return LeveledWord::reduce(raw);
}

LeveledWord invert(const LeveledWord& u) {
  std::vector<LeveledLetter> raw;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(it->inverse());
  return LeveledWord::reduce(raw);
}

LeveledWord at_level(const Word& u, int level) {
  std::vector<LeveledLetter> raw;
  for (Letter l : u.letters()) raw.push_back({l.index(), level, l.inverted()});
  return LeveledWord::reduce(raw);
}

std::string format_leveled(const LeveledWord& u, const Alphabet& base) {
  if (u.empty()) return "1";
  std::string out;
  for (const LeveledLetter& l : u.letters()) {
    if (l.index > base.rank()) fail("leveled letter beyond the base alphabet");
    if (!out.empty()) out += '.';
    out += base.format(Letter::generator(l.index, l.inverted));
    out += '(' + std::to_string(l.level) + ')';
  }
  return out;
}

std::vector<LeveledWord> LeveledPresentation::instantiate(int k) const {
  std::vector<LeveledWord> out;
  for (const LeveledWord& r : schema) out.push_back(t_shift(r, k));
  return out;
}

GroupPresentation meridional_presentation(const FiberedKnotModel& model) {
  GroupPresentation p;
  p.generator_names.push_back("m");
  for (const auto& name : model.alphabet().names()) p.generator_names.push_back(name);
  const Word m{Letter::generator(1)};
  const Word m_inv = invert(m);
  for (int i = 1; i <= model.rank(); ++i) {
    const Word y = shift_word(model.monodromy().images()[static_cast<std::size_t>(i - 1)], 1);
    const Word z{Letter::generator(i + 1)};
    p.relators.push_back(multiply(multiply(multiply(m_inv, y), m), invert(z)));
  }
  return p;
}

GroupPresentation meridional_form(const GroupPresentation& p) {
  if (p.rank() < 1) fail("presentation has no generators");
  std::vector<Word> images{Word{Letter::generator(1)}};
  GroupPresentation out;
  out.generator_names.push_back("m");
  for (int j = 2; j <= p.rank(); ++j) {
    images.push_back(Word{Letter::generator(1), Letter::generator(j)});
    out.generator_names.push_back("u" + std::to_string(j));
  }
  for (const Word& r : p.relators) out.relators.push_back(substitute(images, r));
  return out;
}

int meridian_exponent(const Word& u) {
  int e = 0;
  for (Letter l : u.letters()) {
    if (l.index() == 1) e += l.sign();
  }
  return e;
}

namespace {

bool free_of_meridian(std::span<const Letter> u) {
  return std::none_of(u.begin(), u.end(), [](Letter l) { return l.index() == 1; });
}

Word unshift(std::span<const Letter> u) { return shift_word(Word::reduce(u), -1); }

// Splits m^-1 y m z^-1 into (y, z) over the base generators.
std::optional<std::pair<Word, Word>> split_conjugacy_relator(const Word& r) {
  const auto letters = r.letters();
  if (letters.size() < 2 || letters[0] != Letter::generator(1, true)) return std::nullopt;
  const auto it = std::find(letters.begin() + 1, letters.end(), Letter::generator(1));
  if (it == letters.end()) return std::nullopt;
  const auto mid = static_cast<std::size_t>(it - letters.begin());
  const auto y = letters.subspan(1, mid - 1);
  const auto z_inv = letters.subspan(mid + 1);
  if (!free_of_meridian(y) || !free_of_meridian(z_inv)) return std::nullopt;
  return std::pair{unshift(y), invert(unshift(z_inv))};
}

int min_level(const LeveledWord& u) {
  int lo = INT_MAX;
  for (const auto& l : u.letters()) lo = std::min(lo, l.level);
  return u.empty() ? 0 : lo;
}

}  // namespace

LeveledPresentation reidemeister_schreier(const GroupPresentation& p) {
  if (p.rank() < 1 || p.generator_names.front() != "m") {
    fail("presentation shape mismatch: generator 1 must be the meridian m");
  }
  LeveledPresentation out;
  out.meridian = "m";
  out.base_names.assign(p.generator_names.begin() + 1, p.generator_names.end());
  std::vector<std::pair<Word, Word>> pairs;
  bool conjugacy_shape = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    if (meridian_exponent(r) != 0) {
      fail("presentation shape mismatch: relator " + std::to_string(i + 1) +
           " has nonzero meridian exponent");
    }
    const LeveledWord rewritten = rewrite_to_cover(r);
    out.schema.push_back(t_shift(rewritten, -min_level(rewritten)));
    if (auto yz = split_conjugacy_relator(r)) {
      pairs.push_back(*yz);
    } else {
      conjugacy_shape = false;
    }
  }
  if (conjugacy_shape) out.pairs = std::move(pairs);
  return out;
}

LeveledWord rewrite_to_cover(const Word& w) {
  if (meridian_exponent(w) != 0) fail("not in the commutator cover subgroup: meridian exponent is nonzero");
  std::vector<LeveledLetter> raw;
  int level = 0;
  for (Letter l : w.letters()) {
    if (l.index() == 1) {
      level += l.sign();
    } else {
      raw.push_back({l.index() - 1, level, l.inverted()});
    }
  }
  return LeveledWord::reduce(raw);
}

Word project_back(const LeveledWord& u) {
  std::vector<Letter> raw;
  for (const LeveledLetter& l : u.letters()) {
    const Letter m = Letter::generator(1, l.level < 0);
    for (int i = 0; i < std::abs(l.level); ++i) raw.push_back(m);
    raw.push_back(Letter::generator(l.index + 1, l.inverted));
    for (int i = 0; i < std::abs(l.level); ++i) raw.push_back(m.inverse());
  }
  return Word::reduce(raw);
}

Word to_fiber(const FiberedKnotModel& model, const LeveledWord& u) {
  std::vector<Letter> raw;
  for (const LeveledLetter& l : u.letters()) {
    if (l.index > model.rank()) fail("leveled letter beyond the fiber rank");
    const Word image = model.monodromy_power(l.level).apply(Word{Letter::generator(l.index)});
    const Word piece = l.inverted ? invert(image) : image;
    raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word::reduce(raw);
}

LeveledWord t_shift(const LeveledWord& u, int n) {
  std::vector<LeveledLetter> raw(u.letters().begin(), u.letters().end());
  for (auto& l : raw) l.level += n;
  return LeveledWord::reduce(raw);
}

Word t_shift(const FiberedKnotModel& model, const Word& u, int n) {
  return model.monodromy_power(n).apply(u);
}

CyclicWord t_shift(const FiberedKnotModel& model, const CyclicWord& c, int n) {
  return model.monodromy_power(n).apply(c);
}

LinearCombination t_shift(const FiberedKnotModel& model, const LinearCombination& c, int n) {
  return model.monodromy_power(n).apply(c);
}

namespace {

RibbonSurface window_surface(const FiberedKnotModel& model, int copies) {
  RibbonSurface s = model.fiber();
  for (int j = 1; j < copies; ++j) s = connected_sum(s, model.fiber());
  return s;
}

}  // namespace

WindowMap::WindowMap(const FiberedKnotModel& model, int k, int l)
    : k_(k), l_(l), surface_(k <= l ? window_surface(model, l - k + 1) : model.fiber()) {
  if (k > l) fail("window needs k <= l");
  for (int n = k; n <= l; ++n) {
    const auto phi_n = model.monodromy_power(n);
    for (const Word& img : phi_n.images()) images_.push_back(img);
  }
}

Word WindowMap::pushforward(const Word& u) const {
  require_rank(u, rank());
  return substitute(images_, u);
}

CyclicWord WindowMap::pushforward(const CyclicWord& c) const {
  return conjugacy_class(pushforward(c.word()));
}

LinearCombination WindowMap::pushforward(const LinearCombination& c) const {
  LinearCombination out;
  for (const auto& [cls, q] : c.terms()) out.add(pushforward(cls), q);
  return out;
}

WindowMap window(const FiberedKnotModel& model, int k, int l) { return WindowMap(model, k, l); }

}  // namespace goldknot
