#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldknot/laurent.hpp"
#include "goldknot/presentation.hpp"
#include "goldknot/surface.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

struct BraidLetter {
  int index;  // 1 <= index < strands
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Tokens `s<i>`, `s<i>'` or `s<i>^-1`, whitespace separated. Without an
/// explicit strand count the braid has max index + 1 strands (at least 1).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

std::string format_braid(const BraidWord& b);

/// Number of cycles of the underlying permutation.
int closure_components(const BraidWord& b);

/// Knot group of the braid closure via the Artin action on the top arcs,
/// with the redundant closure relation dropped and generators that occur
/// once in a relator eliminated.
GroupPresentation wirtinger_from_braid(const BraidWord& b);

/// A fibered knot given by its fiber and monodromy. The covering
/// transformation t acts on pi_K = pi_1(fiber) as the monodromy itself.
class FiberedKnotModel {
 public:
  /// Validates that the monodromy fixes the boundary class, induces a
  /// symplectic map on homology and that det(tI - M) equals the reference
  /// Alexander polynomial up to +-t^k.
  FiberedKnotModel(std::string name, int genus, FreeGroupAutomorphism monodromy,
                   LaurentPolynomial alexander_reference);

  const std::string& name() const { return name_; }
  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  const RibbonSurface& fiber() const { return fiber_; }
  const FreeGroupAutomorphism& monodromy() const { return monodromy_; }
  const LaurentPolynomial& alexander_reference() const { return alexander_; }
  const std::vector<std::vector<std::int64_t>>& homology_matrix() const { return homology_; }
  const Alphabet& alphabet() const { return alphabet_; }

  /// Monodromy power phi^n, cached for small |n|.
  FreeGroupAutomorphism monodromy_power(int n) const;

  /// Least N <= kMaxClassPeriod with phi^N inner, i.e. acting trivially on
  /// conjugacy classes; empty if there is none.
  std::optional<int> class_period() const { return class_period_; }
  static constexpr int kMaxClassPeriod = 24;

 private:
  std::string name_;
  int genus_;
  RibbonSurface fiber_;
  Alphabet alphabet_;
  FreeGroupAutomorphism monodromy_;
  LaurentPolynomial alexander_;
  std::vector<std::vector<std::int64_t>> homology_;
  std::vector<FreeGroupAutomorphism> powers_;  // phi^-K .. phi^K
  int power_radius_;
  std::optional<int> class_period_;
};

/// Catalog entries: "trefoil", "figure8", "T25".
std::vector<std::string> catalog_names();
const FiberedKnotModel& catalog(std::string_view name);
/// Braid whose closure is the catalog knot.
BraidWord catalog_braid(std::string_view name);

/// Whether phi is conjugation by a fixed element.
bool is_inner(const FreeGroupAutomorphism& phi);

bool is_symplectic(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace goldknot
