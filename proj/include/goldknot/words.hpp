#pragma once

// Free-group words, conjugacy classes and their rational group-ring span.
//
// Generators are numbered from 1. A letter is stored as a single code
// 2*(index-1) + inverted, so the natural integer order on codes is the
// total letter order used for canonical rotations: ascending generator
// index, and the positive letter before its inverse.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace goldknot {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter generator(int index, bool inverted = false) {
    return Letter(static_cast<std::uint32_t>(2 * (index - 1) + (inverted ? 1 : 0)));
  }
  static constexpr Letter from_code(std::uint32_t code) { return Letter(code); }

  constexpr int index() const { return static_cast<int>(code_ / 2) + 1; }
  constexpr bool inverted() const { return (code_ & 1u) != 0; }
  constexpr int sign() const { return inverted() ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> raw);

  /// Freely reduces `raw`.
  static Word reduce(std::span<const Letter> raw);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index used, 0 for the identity.
  int max_index() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int exponent);
/// Checks that every letter of `u` lies in a free group of the given rank.
void require_rank(const Word& u, int rank);

/// Exponent-sum vector of length `rank`.
std::vector<std::int64_t> abelianize(const Word& u, int rank);

/// A conjugacy class of the free group, stored as the cyclically reduced
/// representative that is least among its rotations.
class CyclicWord {
 public:
  CyclicWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter at_cyclic(std::size_t i) const { return letters_[i % letters_.size()]; }
  int max_index() const;

  /// The linear representative as a Word.
  Word word() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord conjugacy_class(const Word& u);
  std::vector<Letter> letters_;
};

CyclicWord conjugacy_class(const Word& u);

/// The representative of `w` read from position `p`: w_p w_{p+1} ... w_{p-1}.
Word rotate(const CyclicWord& w, std::size_t p);

/// Returns (p, k) with w = p^k and p not a proper power.
std::pair<CyclicWord, int> primitive_root(const CyclicWord& w);

/// Finite rational combination of conjugacy classes, an element of Q[G^].
class LinearCombination {
 public:
  using Terms = std::map<CyclicWord, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const CyclicWord& c, const Rational& coeff = 1);

  void add(const CyclicWord& c, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const CyclicWord& c) const;

  LinearCombination& operator+=(const LinearCombination& other);
  LinearCombination& operator-=(const LinearCombination& other);
  LinearCombination& operator*=(const Rational& scale);

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Replaces generator i of `u` by images[i-1] and freely reduces.
Word substitute(std::span<const Word> images, const Word& u);

/// Automorphism of the free group of rank `rank`, given by generator images
/// together with the images of the inverse map. Construction verifies that
/// the two maps are mutually inverse.
class FreeGroupAutomorphism {
 public:
  FreeGroupAutomorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);

  static FreeGroupAutomorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Word apply(const Word& u) const;
  CyclicWord apply(const CyclicWord& c) const;
  LinearCombination apply(const LinearCombination& c) const;

  FreeGroupAutomorphism inverse() const;
  /// (*this) after `first`: x -> this(first(x)).
  FreeGroupAutomorphism after(const FreeGroupAutomorphism& first) const;
  FreeGroupAutomorphism power(int n) const;

  /// Matrix of the induced map on Z^rank; column j is abelianize(image of x_j).
  std::vector<std::vector<std::int64_t>> homology_matrix() const;

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// Generator names used to print and parse words.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// a1, b1, a2, b2, ... for a genus-g surface group.
  static Alphabet genus(int g);
  /// prefix1, prefix2, ...
  static Alphabet generic(int rank, std::string_view prefix = "x");

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  std::string format(Letter l) const;
  std::string format(const Word& u) const;
  std::string format(const CyclicWord& c) const;

  /// word := token ('.' token)* ; "1" is the identity.
  Word parse_word(std::string_view text) const;
  Letter parse_letter(std::string_view token) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace goldknot
