#pragma once

// One-vertex ribbon graphs (fattened roses) modelling the surface of genus g
// with one boundary circle.
//
// Each generator x_i contributes two directed ends at the vertex: the end
// through which x_i departs (named by the letter x_i) and the end through
// which it arrives, which is where x_i^{-1} departs (named by X_i). The
// vertex order lists all 2*rank ends counterclockwise.

#include <cstddef>
#include <span>
#include <vector>

#include "goldknot/words.hpp"

namespace goldknot {

/// Traces every face of the fattened rose: after arriving along a directed
/// end, depart along the counterclockwise successor of its reversal. Each
/// face is returned as the cyclic sequence of departing letters.
std::vector<std::vector<Letter>> trace_faces(int rank, std::span<const Letter> vertex_order);

class RibbonSurface {
 public:
  /// Validates: every end appears once, the rank is even and face tracing
  /// yields exactly one boundary component.
  RibbonSurface(int rank, std::vector<Letter> vertex_order, std::size_t basepoint = 0);

  int rank() const { return rank_; }
  int genus() const { return rank_ / 2; }
  const std::vector<Letter>& vertex_order() const { return order_; }
  std::size_t basepoint() const { return basepoint_; }

  /// Position of an end in the vertex order.
  std::size_t position(Letter end) const { return position_[end.code()]; }

  /// +1 when the three distinct ends occur counterclockwise, -1 otherwise.
  int cyclic_sign(Letter e1, Letter e2, Letter e3) const;

  /// Position of `end` counted counterclockwise from just after `cut`
  /// (cut itself maps to 2*rank-1).
  std::size_t position_after(Letter cut, Letter end) const;

  /// Boundary cycle read from the basepoint end, as a linear word.
  Word boundary_path() const;

  friend bool operator==(const RibbonSurface&, const RibbonSurface&) = default;

 private:
  int rank_;
  std::vector<Letter> order_;
  std::size_t basepoint_;
  std::vector<std::size_t> position_;
};

/// Standard model of genus g: vertex order (a1 B1 A1 b1 a2 B2 A2 b2 ...),
/// whose boundary reads [a1,b1][a2,b2]...[ag,bg].
RibbonSurface standard_surface(int genus);

/// The boundary class; throws unless the surface has one face.
CyclicWord boundary_word(const RibbonSurface& s);

/// Boundary connected sum: generators of `s2` are shifted up by s1.rank();
/// the boundary reads W1 * W2.
RibbonSurface connected_sum(const RibbonSurface& s1, const RibbonSurface& s2);

/// Generator shift used by connected_sum and the window surfaces.
Letter shift_letter(Letter l, int offset);
Word shift_word(const Word& u, int offset);

}  // namespace goldknot
