#pragma once

// Fox free differential calculus and the first elementary ideal of the
// Alexander module.

#include <map>
#include <span>

#include "goldknot/laurent.hpp"
#include "goldknot/presentation.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

/// Element of Z[F] with no zero coefficients.
class GroupRingElement {
 public:
  using Terms = std::map<Word, Integer>;

  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, const Integer& coeff = 1);

  void add(const Word& w, const Integer& coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const Word& g, const GroupRingElement& a);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Image under the homomorphism sending generator i to t^{weights[i-1]}.
  LaurentPolynomial abelianized(std::span<const int> weights) const;

 private:
  Terms terms_;
};

/// d w / d x_gen.
GroupRingElement fox_derivative(const Word& w, int gen);

/// Entry (i, j) is the abelianized derivative of relator i by generator j.
LaurentMatrix alexander_matrix(const GroupPresentation& p, std::span<const int> weights);

/// Gcd of the maximal minors of a deficiency-one Alexander matrix, normalized.
/// Throws when the value at t = 1 is not +-1.
LaurentPolynomial alexander_polynomial(const LaurentMatrix& m);

/// Uses the weights of the abelianization onto Z.
LaurentPolynomial alexander_polynomial(const GroupPresentation& p);

}  // namespace goldknot
