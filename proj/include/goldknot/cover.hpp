#pragma once

// The infinite cyclic cover of a knot complement.
//
// Convention: the meridional presentation of a fibered model has relators
// m^-1 phi(x_i) m x_i^-1, so conjugation by m realizes the monodromy,
// phi(x) = m x m^-1. Schreier rewriting with transversal {m^n} assigns the
// letter x at running m-exponent n to level n, hence
//
//   x^(n) = m^n x m^-n = phi^n(x),
//
// and the deck transformation t raises levels by one and acts on the fiber
// group as phi. Every relator family reads y^(k) (z^(k+1))^-1 with
// y = phi(x_i) and z = x_i.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goldknot/knots.hpp"
#include "goldknot/presentation.hpp"
#include "goldknot/surface.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

struct LeveledLetter {
  int index = 1;  // base generator, 1-based
  int level = 0;
  bool inverted = false;

  LeveledLetter inverse() const { return {index, level, !inverted}; }
  friend auto operator<=>(const LeveledLetter&, const LeveledLetter&) = default;
};

/// Freely reduced word over the leveled generators x_i^(n).
class LeveledWord {
 public:
  LeveledWord() = default;
  static LeveledWord reduce(std::span<const LeveledLetter> raw);

  std::span<const LeveledLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const LeveledWord&, const LeveledWord&) = default;
  friend auto operator<=>(const LeveledWord&, const LeveledWord&) = default;

 private:
  std::vector<LeveledLetter> letters_;
};

LeveledWord multiply(const LeveledWord& u, const LeveledWord& v);
LeveledWord invert(const LeveledWord& u);
/// Places every letter of a base word at one level.
LeveledWord at_level(const Word& u, int level);

/// Tokens name(level), e.g. "a1(0).B1(-1)"; "1" for the identity.
std::string format_leveled(const LeveledWord& u, const Alphabet& base);

/// Relators of a presentation of the commutator subgroup, given as a finite
/// schema: the relators of the cover are t^k(r) for r in `schema` and all k.
struct LeveledPresentation {
  std::string meridian;
  std::vector<std::string> base_names;
  std::vector<LeveledWord> schema;
  /// Present when every input relator has the form m^-1 y m z^-1; then
  /// schema[i] = y_i^(0) (z_i^(1))^-1.
  std::optional<std::vector<std::pair<Word, Word>>> pairs;

  Alphabet base_alphabet() const { return Alphabet(base_names); }
  std::vector<LeveledWord> instantiate(int k) const;
};

/// <m, x_1..x_2g | m^-1 phi(x_i) m x_i^-1>; generator 1 is m.
GroupPresentation meridional_presentation(const FiberedKnotModel& model);

/// For a presentation whose generators all map to t (Wirtinger style):
/// substitutes x_1 = m and x_j = m u_j, so that the u_j lie in the
/// commutator subgroup. Generator 1 of the result is m.
GroupPresentation meridional_form(const GroupPresentation& p);

/// Sum of the exponents of generator 1 in u.
int meridian_exponent(const Word& u);

/// Reidemeister-Schreier rewriting with transversal {m^n}. Requires
/// generator 1 to be named "m" and every relator to have m-exponent 0.
LeveledPresentation reidemeister_schreier(const GroupPresentation& p);

/// Letters x_i (generator i+1) met at running m-exponent c become x_i^(c);
/// m letters are absorbed. Throws unless the m-exponent of w is 0.
LeveledWord rewrite_to_cover(const Word& w);

/// x_i^(n) -> m^n x_i m^-n over the meridional generators.
Word project_back(const LeveledWord& u);

/// x_i^(n) -> phi^n(x_i) in the fiber group.
Word to_fiber(const FiberedKnotModel& model, const LeveledWord& u);

LeveledWord t_shift(const LeveledWord& u, int n);
Word t_shift(const FiberedKnotModel& model, const Word& u, int n);
CyclicWord t_shift(const FiberedKnotModel& model, const CyclicWord& c, int n);
LinearCombination t_shift(const FiberedKnotModel& model, const LinearCombination& c, int n);

/// Connected sum of the fiber translates t^k F, ..., t^l F together with
/// the map of its fundamental group to the fiber group. Copy j carries
/// handles j*g+1 .. (j+1)*g and projects by phi^(k+j).
class WindowMap {
 public:
  WindowMap(const FiberedKnotModel& model, int k, int l);

  int first() const { return k_; }
  int last() const { return l_; }
  int width() const { return l_ - k_ + 1; }
  int rank() const { return surface_.rank(); }
  const RibbonSurface& surface() const { return surface_; }
  Alphabet alphabet() const { return Alphabet::genus(surface_.genus()); }
  /// Image of window generator i (1-based).
  const std::vector<Word>& images() const { return images_; }

  Word pushforward(const Word& u) const;
  CyclicWord pushforward(const CyclicWord& c) const;
  LinearCombination pushforward(const LinearCombination& c) const;

 private:
  int k_;
  int l_;
  RibbonSurface surface_;
  std::vector<Word> images_;
};

WindowMap window(const FiberedKnotModel& model, int k, int l);

}  // namespace goldknot
