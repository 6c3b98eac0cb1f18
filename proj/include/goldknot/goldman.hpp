#pragma once

// Combinatorial Goldman bracket on a one-vertex ribbon surface.
//
// Two cyclic words meet at the vertex once per pair of positions (p, q).
// Lifting both closed geodesics to the universal cover (a planar tree with
// the vertex order at every vertex), the lifts through a common vertex cross
// exactly when the four rays emanating from it interleave on the circle at
// infinity. A crossing whose lifts share a segment is counted once, at the
// first vertex of the segment in the direction of the first word.
//
//   [x, y] = sum_{(p,q)} sign(p, q) * <rotate(x, p) * rotate(y, q)>
//
// with the global sign fixed so that [<a1>, <b1>] = +<a1 b1> on the standard
// genus-1 surface.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "goldknot/surface.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

/// Purely periodic infinite reduced edge path leaving the vertex.
class Ray {
 public:
  explicit Ray(std::vector<Letter> period);

  Letter operator[](std::size_t k) const { return period_[k % period_.size()]; }
  std::size_t period_length() const { return period_.size(); }
  const std::vector<Letter>& period() const { return period_; }

 private:
  std::vector<Letter> period_;
};

/// Length of the common prefix of two rays, or nullopt if they are equal.
/// Comparing |period1| + |period2| letters is enough (Fine-Wilf).
std::optional<std::size_t> common_prefix(const Ray& r1, const Ray& r2);

/// (backward, forward) rays of `w` at position p.
std::pair<Ray, Ray> rays_at(const CyclicWord& w, std::size_t p);

/// +1 iff the ends of r1, r2, r3 occur counterclockwise around the circle at
/// infinity. Throws if two rays coincide.
int circular_order(const Ray& r1, const Ray& r2, const Ray& r3, const RibbonSurface& s);

/// Raw crossing sign of w at p with v at q: +1 for (w-, v-, w+, v+)
/// counterclockwise, -1 for (w-, v+, w+, v-), 0 if unlinked, if a ray of w
/// coincides with a ray of v, or if the crossing is counted elsewhere.
int linked_sign(const RibbonSurface& s, const CyclicWord& w, std::size_t p, const CyclicWord& v,
                std::size_t q);

/// Sign applied to raw crossing signs so that [<a1>,<b1>] = +<a1 b1>.
inline constexpr int kBracketOrientation = -1;

/// Serial reference implementation.
LinearCombination goldman_bracket(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y);

/// Bilinear extension.
LinearCombination goldman_bracket(const RibbonSurface& s, const LinearCombination& x,
                                  const LinearCombination& y);

/// OpenMP kernel over the outer position loop; equal to goldman_bracket.
LinearCombination goldman_bracket_parallel(const RibbonSurface& s, const CyclicWord& x,
                                           const CyclicWord& y);

using ClassPair = std::pair<CyclicWord, CyclicWord>;

/// Brackets of many independent pairs, in input order.
std::vector<LinearCombination> bracket_table_serial(const RibbonSurface& s,
                                                    std::span<const ClassPair> pairs);
/// Same, distributing pairs over OpenMP threads. `threads` = 0 uses the
/// runtime default.
std::vector<LinearCombination> bracket_table_parallel(const RibbonSurface& s,
                                                      std::span<const ClassPair> pairs,
                                                      int threads = 0);

using HomologyVector = std::vector<std::int64_t>;
using HomologyCombination = std::map<HomologyVector, Rational>;

/// Pushes each class to its exponent-sum vector, summing coefficients.
HomologyCombination homological_projection(const LinearCombination& c, int rank);

/// Standard symplectic form on Z^{2g}: blocks [[0,1],[-1,0]] in (a_i, b_i).
std::int64_t symplectic_form(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

}  // namespace goldknot
