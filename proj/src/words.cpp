#include "goldknot/words.hpp"

#include <algorithm>
#include <cctype>

#include "goldknot/error.hpp"

namespace goldknot {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    fail("malformed rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) fail("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Word

Word::Word(std::initializer_list<Letter> raw) : Word(reduce(std::span(raw.begin(), raw.size()))) {}

Word Word::reduce(std::span<const Letter> raw) {
  Word out;
  out.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(raw);
}

Word invert(const Word& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word::reduce(raw);
}

Word power(const Word& u, int exponent) {
  const Word base = exponent < 0 ? invert(u) : u;
  std::vector<Letter> raw;
  for (int i = 0; i < std::abs(exponent); ++i) {
    raw.insert(raw.end(), base.letters().begin(), base.letters().end());
  }
  return Word::reduce(raw);
}

void require_rank(const Word& u, int rank) {
  if (u.max_index() > rank) {
    fail("word uses generator " + std::to_string(u.max_index()) + " beyond rank " +
         std::to_string(rank));
  }
}

std::vector<std::int64_t> abelianize(const Word& u, int rank) {
  require_rank(u, rank);
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : u.letters()) v[static_cast<std::size_t>(l.index() - 1)] += l.sign();
  return v;
}

// ---------------------------------------------------------------- CyclicWord

namespace {

// Booth's least-rotation algorithm.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

int CyclicWord::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

Word CyclicWord::word() const { return Word::reduce(letters_); }

CyclicWord conjugacy_class(const Word& u) {
  auto s = u.letters();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  auto core = s.subspan(lo, hi - lo);
  const std::size_t r = least_rotation(core);
  CyclicWord c;
  c.letters_.reserve(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) c.letters_.push_back(core[(r + i) % core.size()]);
  return c;
}

Word rotate(const CyclicWord& w, std::size_t p) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) raw.push_back(w.at_cyclic(p + i));
  return Word::reduce(raw);
}

std::pair<CyclicWord, int> primitive_root(const CyclicWord& w) {
  if (w.empty()) fail("primitive_root of the trivial class");
  // Smallest period via the KMP failure function; the canonical rotation of
  // p^k is (canonical p)^k, so linear periodicity decides it.
  const auto s = w.letters();
  const std::size_t n = s.size();
  std::vector<std::size_t> fail_len(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail_len[k];
    if (s[i] == s[k]) ++k;
    fail_len[i + 1] = k;
  }
  std::size_t period = n - fail_len[n];
  if (n % period != 0) period = n;
  std::vector<Letter> root(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(period));
  return {conjugacy_class(Word::reduce(root)), static_cast<int>(n / period)};
}

// ---------------------------------------------------------------- LinearCombination

LinearCombination::LinearCombination(const CyclicWord& c, const Rational& coeff) { add(c, coeff); }

void LinearCombination::add(const CyclicWord& c, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LinearCombination::coefficient(const CyclicWord& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& other) {
  for (const auto& [c, q] : other.terms_) add(c, q);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& other) {
  for (const auto& [c, q] : other.terms_) add(c, -q);
  return *this;
}

LinearCombination& LinearCombination::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, q] : terms_) q *= scale;
  return *this;
}

// ---------------------------------------------------------------- FreeGroupAutomorphism

Word substitute(std::span<const Word> images, const Word& u) {
  std::vector<Letter> raw;
  for (Letter l : u.letters()) {
    const Word& img = images[static_cast<std::size_t>(l.index() - 1)];
    if (l.inverted()) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    } else {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    }
  }
  return Word::reduce(raw);
}

FreeGroupAutomorphism::FreeGroupAutomorphism(int rank, std::vector<Word> images,
                                             std::vector<Word> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (rank_ < 1) fail("automorphism rank must be positive");
  if (images_.size() != static_cast<std::size_t>(rank_) ||
      inverse_images_.size() != static_cast<std::size_t>(rank_)) {
    fail("automorphism needs one image per generator");
  }
  for (const Word& w : images_) require_rank(w, rank_);
  for (const Word& w : inverse_images_) require_rank(w, rank_);
  for (int i = 1; i <= rank_; ++i) {
    const Word x{Letter::generator(i)};
    if (substitute(inverse_images_, substitute(images_, x)) != x ||
        substitute(images_, substitute(inverse_images_, x)) != x) {
      fail("inverse images do not invert the automorphism at generator " + std::to_string(i));
    }
  }
}

FreeGroupAutomorphism FreeGroupAutomorphism::identity(int rank) {
  std::vector<Word> id;
  for (int i = 1; i <= rank; ++i) id.push_back(Word{Letter::generator(i)});
  return FreeGroupAutomorphism(rank, id, id);
}

Word FreeGroupAutomorphism::apply(const Word& u) const {
  require_rank(u, rank_);
  return substitute(images_, u);
}

CyclicWord FreeGroupAutomorphism::apply(const CyclicWord& c) const {
  return conjugacy_class(apply(c.word()));
}

LinearCombination FreeGroupAutomorphism::apply(const LinearCombination& c) const {
  LinearCombination out;
  for (const auto& [cls, q] : c.terms()) out.add(apply(cls), q);
  return out;
}

FreeGroupAutomorphism FreeGroupAutomorphism::inverse() const {
  return FreeGroupAutomorphism(rank_, inverse_images_, images_);
}

FreeGroupAutomorphism FreeGroupAutomorphism::after(const FreeGroupAutomorphism& first) const {
  if (first.rank_ != rank_) fail("automorphism rank mismatch");
  std::vector<Word> img;
  std::vector<Word> inv;
  for (int i = 0; i < rank_; ++i) {
    img.push_back(substitute(images_, first.images_[static_cast<std::size_t>(i)]));
    inv.push_back(substitute(first.inverse_images_, inverse_images_[static_cast<std::size_t>(i)]));
  }
  return FreeGroupAutomorphism(rank_, std::move(img), std::move(inv));
}

FreeGroupAutomorphism FreeGroupAutomorphism::power(int n) const {
  FreeGroupAutomorphism base = n < 0 ? inverse() : *this;
  FreeGroupAutomorphism out = identity(rank_);
  for (int i = 0; i < std::abs(n); ++i) out = base.after(out);
  return out;
}

std::vector<std::vector<std::int64_t>> FreeGroupAutomorphism::homology_matrix() const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rank_),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0));
  for (int j = 0; j < rank_; ++j) {
    const auto col = abelianize(images_[static_cast<std::size_t>(j)], rank_);
    for (int i = 0; i < rank_; ++i) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (n.empty() || !std::islower(static_cast<unsigned char>(n.front()))) {
      fail("generator names must start with a lowercase letter: '" + n + "'");
    }
  }
}

Alphabet Alphabet::genus(int g) {
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

Alphabet Alphabet::generic(int rank, std::string_view prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

std::string Alphabet::format(Letter l) const {
  if (l.index() > rank()) fail("letter beyond alphabet rank");
  std::string name = names_[static_cast<std::size_t>(l.index() - 1)];
  if (l.inverted()) {
    name.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
  }
  return name;
}

std::string Alphabet::format(const Word& u) const {
  if (u.empty()) return "1";
  std::string out;
  for (Letter l : u.letters()) {
    if (!out.empty()) out += '.';
    out += format(l);
  }
  return out;
}

std::string Alphabet::format(const CyclicWord& c) const { return format(c.word()); }

Letter Alphabet::parse_letter(std::string_view token) const {
  auto lookup = [&](std::string_view name) -> int {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<int>(i) + 1;
    }
    return 0;
  };
  constexpr std::string_view kInverseSuffix = "^-1";
  if (token.size() > kInverseSuffix.size() && token.ends_with(kInverseSuffix)) {
    const int idx = lookup(token.substr(0, token.size() - kInverseSuffix.size()));
    if (idx == 0) fail("unknown generator in token '" + std::string(token) + "'");
    return Letter::generator(idx, true);
  }
  if (int idx = lookup(token); idx != 0) return Letter::generator(idx);
  if (!token.empty() && std::isupper(static_cast<unsigned char>(token.front()))) {
    std::string lower(token);
    lower.front() = static_cast<char>(std::tolower(static_cast<unsigned char>(lower.front())));
    if (int idx = lookup(lower); idx != 0) return Letter::generator(idx, true);
  }
  fail("unknown generator token '" + std::string(token) + "'");
}

Word Alphabet::parse_word(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail("empty word literal (use \"1\" for the identity)");
  if (text == "1") return {};
  std::vector<Letter> raw;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = text.find('.', start);
    const std::size_t end = dot == std::string_view::npos ? text.size() : dot;
    const auto token = text.substr(start, end - start);
    if (token.empty()) fail("empty token at offset " + std::to_string(start) + " in '" + std::string(text) + "'");
    raw.push_back(parse_letter(token));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Word::reduce(raw);
}

}  // namespace goldknot
