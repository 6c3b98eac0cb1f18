#pragma once

#include <string>
#include <vector>

#include "goldknot/words.hpp"

namespace goldknot {

/// Finite presentation; relators are freely reduced words in generators
/// 1..generator_names.size().
struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generator_names.size()); }
  int deficiency() const { return rank() - static_cast<int>(relators.size()); }
  Alphabet alphabet() const { return Alphabet(generator_names); }
};

/// Integer row reduction of the exponent-sum matrix; returns the invariant
/// factors of the abelianization followed by zeros for each free rank
/// (Z^r (+) Z/d1 (+) ...). A knot group yields {0}.
std::vector<long> abelian_invariants(const GroupPresentation& p);

/// The homomorphism onto Z when the abelianization has free rank one: the
/// primitive integer kernel vector of the exponent-sum matrix, with its
/// first nonzero entry positive. Throws for any other free rank.
std::vector<int> abelianization_weights(const GroupPresentation& p);

}  // namespace goldknot
