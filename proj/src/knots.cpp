#include "goldknot/knots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "goldknot/error.hpp"

namespace goldknot {

// ---------------------------------------------------------------- braids

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord b;
  std::istringstream in{std::string(text)};
  std::string token;
  int max_index = 0;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    auto bad = [&](const std::string& why) {
      fail("braid token " + std::to_string(position) + " '" + token + "': " + why);
    };
    if (token.size() < 2 || token[0] != 's') bad("expected s<i>");
    std::size_t i = 1;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    if (i == 1) bad("missing generator index");
    const int index = std::stoi(token.substr(1, i - 1));
    int sign = 1;
    const std::string suffix = token.substr(i);
    if (suffix == "'" || suffix == "^-1") {
      sign = -1;
    } else if (!suffix.empty()) {
      bad("unexpected suffix '" + suffix + "'");
    }
    if (index < 1) bad("index out of range");
    max_index = std::max(max_index, index);
    b.letters.push_back({index, sign});
  }
  b.strands = strands.value_or(max_index + 1);
  if (b.strands < 1) fail("a braid needs at least one strand");
  if (max_index >= b.strands) {
    fail("braid generator s" + std::to_string(max_index) + " out of range for " +
         std::to_string(b.strands) + " strands");
  }
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.sign < 0) out += '\'';
  }
  return out;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (const auto& l : b.letters) {
    std::swap(perm[static_cast<std::size_t>(l.index - 1)], perm[static_cast<std::size_t>(l.index)]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

namespace {

Word substitute_generator(const Word& w, int gen, const Word& value) {
  const Word value_inv = invert(value);
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (l.index() == gen) {
      const Word& v = l.inverted() ? value_inv : value;
      raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    } else {
      raw.push_back(l);
    }
  }
  return Word::reduce(raw);
}

Word drop_generator(const Word& w, int gen) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    raw.push_back(l.index() > gen ? Letter::generator(l.index() - 1, l.inverted()) : l);
  }
  return Word::reduce(raw);
}

// Eliminates a generator occurring exactly once in some relator.
bool eliminate_once(GroupPresentation& p) {
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& rel = p.relators[r];
    for (int g = 1; g <= p.rank(); ++g) {
      std::size_t count = 0;
      std::size_t at = 0;
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (rel[i].index() == g) {
          ++count;
          at = i;
        }
      }
      if (count != 1) continue;
      const auto letters = rel.letters();
      const Word u = Word::reduce(letters.subspan(0, at));
      const Word v = Word::reduce(letters.subspan(at + 1));
      // u g^e v = 1
      const Word value = rel[at].inverted() ? multiply(v, u) : multiply(invert(u), invert(v));
      GroupPresentation next;
      next.generator_names = p.generator_names;
      next.generator_names.erase(next.generator_names.begin() + (g - 1));
      for (std::size_t k = 0; k < p.relators.size(); ++k) {
        if (k == r) continue;
        next.relators.push_back(drop_generator(substitute_generator(p.relators[k], g, value), g));
      }
      p = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

GroupPresentation wirtinger_from_braid(const BraidWord& b) {
  const int components = closure_components(b);
  if (components != 1) fail("closure has " + std::to_string(components) + " components");
  const auto n = static_cast<std::size_t>(b.strands);
  std::vector<Word> labels;
  for (std::size_t j = 0; j < n; ++j) labels.push_back(Word{Letter::generator(static_cast<int>(j) + 1)});
  for (const auto& l : b.letters) {
    Word& left = labels[static_cast<std::size_t>(l.index - 1)];
    Word& right = labels[static_cast<std::size_t>(l.index)];
    if (l.sign > 0) {
      Word new_left = multiply(multiply(left, right), invert(left));
      right = left;
      left = std::move(new_left);
    } else {
      Word new_right = multiply(multiply(invert(right), left), right);
      left = right;
      right = std::move(new_right);
    }
  }
  GroupPresentation p;
  for (std::size_t j = 0; j < n; ++j) {
    p.generator_names.push_back("x" + std::to_string(j + 1));
    // The last closure relation follows from the others.
    if (j + 1 < n) {
      p.relators.push_back(multiply(labels[j], Word{Letter::generator(static_cast<int>(j) + 1, true)}));
    }
  }
  while (eliminate_once(p)) {
  }
  std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
  for (std::size_t j = 0; j < p.generator_names.size(); ++j) p.generator_names[j] = "x" + std::to_string(j + 1);
  return p;
}

// ---------------------------------------------------------------- fibered models

bool is_symplectic(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) return false;
  auto omega = [](std::size_t i, std::size_t j) -> std::int64_t {
    if (i / 2 != j / 2) return 0;
    if (i == j) return 0;
    return i % 2 == 0 ? 1 : -1;
  };
  // (M^T J M)_{ij} = sum_{k,l} M_{ki} J_{kl} M_{lj}
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) s += m[k][i] * omega(k, l) * m[l][j];
      }
      if (s != omega(i, j)) return false;
    }
  }
  return true;
}

bool is_inner(const FreeGroupAutomorphism& phi) {
  // phi(x_1) = c x_1 c^-1 pins the conjugator to c x_1^k.
  const Word u = phi.images().front();
  std::size_t peel = 0;
  while (2 * peel + 1 < u.size() && u[peel] == u[u.size() - 1 - peel].inverse()) ++peel;
  if (u.size() != 2 * peel + 1 || u[peel] != Letter::generator(1)) return false;
  const Word c = Word::reduce(u.letters().subspan(0, peel));
  auto conjugate = [](const Word& w, const Word& x) { return multiply(multiply(w, x), invert(w)); };
  if (phi.rank() == 1) return true;
  const Word v = conjugate(invert(c), phi.images()[1]);
  int k = 0;
  for (std::size_t i = 0; i < v.size() && v[i].index() == 1; ++i) k += v[i].sign();
  const Word w = multiply(c, power(Word{Letter::generator(1)}, k));
  for (int i = 1; i <= phi.rank(); ++i) {
    if (phi.images()[static_cast<std::size_t>(i - 1)] != conjugate(w, Word{Letter::generator(i)})) return false;
  }
  return true;
}

namespace {

constexpr int kPowerRadius = 3;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool is_identity_matrix(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

FiberedKnotModel::FiberedKnotModel(std::string name, int genus, FreeGroupAutomorphism monodromy,
                                   LaurentPolynomial alexander_reference)
    : name_(std::move(name)),
      genus_(genus),
      fiber_(standard_surface(genus)),
      alphabet_(Alphabet::genus(genus)),
      monodromy_(std::move(monodromy)),
      alexander_(alexander_reference.normalized()),
      homology_(monodromy_.homology_matrix()),
      power_radius_(kPowerRadius) {
  if (monodromy_.rank() != 2 * genus_) fail("monodromy rank must be twice the genus");
  const CyclicWord boundary = boundary_word(fiber_);
  if (monodromy_.apply(boundary) != boundary) {
    fail("model '" + name_ + "': monodromy does not fix the boundary class");
  }
  if (!is_symplectic(homology_)) fail("model '" + name_ + "': homology matrix is not symplectic");
  const LaurentPolynomial charpoly = characteristic_polynomial(homology_);
  if (!equal_up_to_unit(charpoly, alexander_)) {
    fail("model '" + name_ + "': det(tI - M) = " + charpoly.to_string() +
         " differs from the Alexander polynomial " + alexander_.to_string());
  }
  for (int n = -power_radius_; n <= power_radius_; ++n) powers_.push_back(monodromy_.power(n));
  // An inner power acts trivially on homology, so only those N need the
  // free-group check; this also avoids the growing powers of Anosov maps.
  auto product = homology_;
  for (int n = 1; n <= kMaxClassPeriod; ++n) {
    if (is_identity_matrix(product) && is_inner(monodromy_.power(n))) {
      class_period_ = n;
      break;
    }
    product = matrix_product(homology_, product);
  }
}

FreeGroupAutomorphism FiberedKnotModel::monodromy_power(int n) const {
  if (n < -power_radius_ || n > power_radius_) return monodromy_.power(n);
  return powers_[static_cast<std::size_t>(n + power_radius_)];
}

namespace {

// Right-handed Dehn twists x -> x + omega(x, c) c on the standard genus-g
// surface, written as free-group automorphisms fixing the boundary word.
FreeGroupAutomorphism twist_about_a(int genus, int handle) {
  auto id = FreeGroupAutomorphism::identity(2 * genus);
  auto img = id.images();
  auto inv = id.inverse_images();
  const Letter a = Letter::generator(2 * handle - 1);
  const Letter b = Letter::generator(2 * handle);
  img[static_cast<std::size_t>(2 * handle - 1)] = Word{b, a.inverse()};
  inv[static_cast<std::size_t>(2 * handle - 1)] = Word{b, a};
  return FreeGroupAutomorphism(2 * genus, img, inv);
}

FreeGroupAutomorphism twist_about_b(int genus, int handle) {
  auto id = FreeGroupAutomorphism::identity(2 * genus);
  auto img = id.images();
  auto inv = id.inverse_images();
  const Letter a = Letter::generator(2 * handle - 1);
  const Letter b = Letter::generator(2 * handle);
  img[static_cast<std::size_t>(2 * handle - 2)] = Word{a, b};
  inv[static_cast<std::size_t>(2 * handle - 2)] = Word{a, b.inverse()};
  return FreeGroupAutomorphism(2 * genus, img, inv);
}

// Twist about the curve joining the two handles of genus 2 (class a1 + a2).
FreeGroupAutomorphism twist_about_connector() {
  const Letter a1 = Letter::generator(1);
  const Letter b1 = Letter::generator(2);
  const Letter a2 = Letter::generator(3);
  const Letter b2 = Letter::generator(4);
  std::vector<Word> img{Word{a1}, Word{a1.inverse(), a2.inverse(), b1}, Word{a2},
                        Word{a2.inverse(), a1.inverse(), b2}};
  std::vector<Word> inv{Word{a1}, Word{a2, a1, b1}, Word{a2}, Word{a1, a2, b2}};
  return FreeGroupAutomorphism(4, img, inv);
}

std::map<std::string, FiberedKnotModel, std::less<>> build_catalog() {
  std::map<std::string, FiberedKnotModel, std::less<>> out;
  const auto ta = twist_about_a(1, 1);
  const auto tb = twist_about_b(1, 1);
  out.emplace("trefoil", FiberedKnotModel("trefoil", 1, ta.after(tb), parse_laurent("t^2-t+1")));
  out.emplace("figure8",
              FiberedKnotModel("figure8", 1, ta.after(tb.inverse()), parse_laurent("t^2-3t+1")));
  // Chain a1, b1, c, b2 of the (2,5) torus knot fiber.
  const auto chain = twist_about_a(2, 1)
                         .after(twist_about_b(2, 1))
                         .after(twist_about_connector())
                         .after(twist_about_b(2, 2));
  out.emplace("T25", FiberedKnotModel("T25", 2, chain, parse_laurent("t^4-t^3+t^2-t+1")));
  return out;
}

const std::map<std::string, FiberedKnotModel, std::less<>>& catalog_map() {
  static const auto models = build_catalog();
  return models;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, model] : catalog_map()) names.push_back(name);
  return names;
}

const FiberedKnotModel& catalog(std::string_view name) {
  const auto& models = catalog_map();
  auto it = models.find(name);
  if (it == models.end()) fail("unknown catalog knot '" + std::string(name) + "'");
  return it->second;
}

BraidWord catalog_braid(std::string_view name) {
  if (name == "trefoil") return parse_braid("s1 s1 s1");
  if (name == "figure8") return parse_braid("s1 s2' s1 s2'");
  if (name == "T25") return parse_braid("s1 s1 s1 s1 s1");
  fail("unknown catalog knot '" + std::string(name) + "'");
}

}  // namespace goldknot
