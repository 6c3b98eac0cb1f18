#include "goldknot/alexander.hpp"

#include <string>
#include <vector>

#include "goldknot/error.hpp"

namespace goldknot {

GroupRingElement::GroupRingElement(const Word& w, const Integer& coeff) { add(w, coeff); }

void GroupRingElement::add(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, -c);
  return a;
}

GroupRingElement operator*(const Word& g, const GroupRingElement& a) {
  GroupRingElement out;
  for (const auto& [w, c] : a.terms_) out.add(multiply(g, w), c);
  return out;
}

LaurentPolynomial GroupRingElement::abelianized(std::span<const int> weights) const {
  LaurentPolynomial out;
  for (const auto& [w, c] : terms_) {
    int exponent = 0;
    for (Letter l : w.letters()) {
      if (static_cast<std::size_t>(l.index()) > weights.size()) fail("abelianization weight missing");
      exponent += l.sign() * weights[static_cast<std::size_t>(l.index() - 1)];
    }
    out += LaurentPolynomial::monomial(c, exponent);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  for (Letter l : w.letters()) {
    if (l.index() == gen && !l.inverted()) out.add(Word::reduce(prefix), 1);
    prefix.push_back(l);
    if (l.index() == gen && l.inverted()) out.add(Word::reduce(prefix), -1);
  }
  return out;
}

LaurentMatrix alexander_matrix(const GroupPresentation& p, std::span<const int> weights) {
  if (weights.size() != p.generator_names.size()) fail("one abelianization weight per generator required");
  LaurentMatrix m;
  for (const Word& r : p.relators) {
    std::vector<LaurentPolynomial> row;
    for (int j = 1; j <= p.rank(); ++j) row.push_back(fox_derivative(r, j).abelianized(weights));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPolynomial alexander_polynomial(const LaurentMatrix& m) {
  // A relator-free presentation has a single generator (the unknot).
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 1 : m.front().size();
  if (cols != rows + 1) {
    fail("expected a deficiency-one presentation, got " + std::to_string(rows) + " relators on " +
         std::to_string(cols) + " generators");
  }
  LaurentPolynomial g;
  for (std::size_t drop = 0; drop < cols; ++drop) {
    LaurentMatrix minor;
    for (const auto& row : m) {
      std::vector<LaurentPolynomial> r;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != drop) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    g = gcd(g, determinant(std::move(minor)));
  }
  const Integer at_one = g.at_one();
  if (at_one != 1 && at_one != -1) {
    fail("not a knot-group presentation: Alexander polynomial " + g.to_string() + " has value " +
         at_one.get_str() + " at t = 1");
  }
  return g.normalized();
}

LaurentPolynomial alexander_polynomial(const GroupPresentation& p) {
  if (p.relators.empty() && p.rank() == 1) return LaurentPolynomial::monomial(1, 0);
  const std::vector<int> weights = abelianization_weights(p);
  return alexander_polynomial(alexander_matrix(p, weights));
}

}  // namespace goldknot
