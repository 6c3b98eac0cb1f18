#pragma once

// The Lie algebras of a fibered knot: Q[pi^_K] with the fiber-surface
// bracket, its quotient Q[Pi_K] by the t-action and the homological
// quotient Q[H].

#include <cstdint>
#include <vector>

#include "goldknot/goldman.hpp"
#include "goldknot/knots.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

inline constexpr int kDefaultOrbitBound = 5;

/// Bracket of two classes of pi_K, evaluated on the fiber surface.
LinearCombination bracket_piK(const FiberedKnotModel& model, const CyclicWord& x, const CyclicWord& y);
LinearCombination bracket_piK(const FiberedKnotModel& model, const LinearCombination& x,
                              const LinearCombination& y);

/// A t-orbit of classes, stored by its (length, lexicographic) least member
/// among the scanned translates t^n x, lo <= n <= hi.
struct TOrbitClass {
  CyclicWord representative;
  int lo = 0;
  int hi = 0;
  /// True when the scan returned to x, so the whole orbit was seen.
  bool finite = false;

  friend bool operator==(const TOrbitClass& a, const TOrbitClass& b) {
    return a.representative == b.representative;
  }
};

/// Scans t^n x outward from n = 0 until either the orbit closes up or the
/// class length has strictly increased for `bound` consecutive steps in both
/// directions. Throws if neither happens within the step limit.
TOrbitClass orbit_canonical(const FiberedKnotModel& model, const CyclicWord& x, int bound);

/// Replaces every class by its orbit representative, merging coefficients.
LinearCombination project_to_PiK(const FiberedKnotModel& model, const LinearCombination& c, int bound);

/// Bracket of the representatives, projected to orbit classes.
LinearCombination bracket_PiK(const FiberedKnotModel& model, const TOrbitClass& a, const TOrbitClass& b,
                              int bound);
LinearCombination bracket_PiK(const FiberedKnotModel& model, const LinearCombination& a,
                              const LinearCombination& b, int bound);

using HClass = HomologyVector;

/// omega(h1, h2) * [h1 + h2].
HomologyCombination bracket_H(int genus, const HClass& h1, const HClass& h2);
HomologyCombination bracket_H(int genus, const HomologyCombination& a, const HomologyCombination& b);

/// Monodromy action on H = Z^{2g}.
HClass t_on_H(const FiberedKnotModel& model, const HClass& h);
HomologyCombination t_on_H(const FiberedKnotModel& model, const HomologyCombination& c);

}  // namespace goldknot
