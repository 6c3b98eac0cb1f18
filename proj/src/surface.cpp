#include "goldknot/surface.hpp"

#include <string>

#include "goldknot/error.hpp"

namespace goldknot {

namespace {

std::vector<std::size_t> end_positions(int rank, std::span<const Letter> order) {
  const std::size_t ends = 2 * static_cast<std::size_t>(rank);
  if (order.size() != ends) {
    fail("vertex order must list " + std::to_string(ends) + " ends, got " + std::to_string(order.size()));
  }
  std::vector<std::size_t> pos(ends, ends);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Letter e = order[i];
    if (e.index() > rank) fail("vertex order names a generator beyond the rank");
    if (pos[e.code()] != ends) fail("vertex order repeats an end");
    pos[e.code()] = i;
  }
  return pos;
}

}  // namespace

std::vector<std::vector<Letter>> trace_faces(int rank, std::span<const Letter> vertex_order) {
  const auto pos = end_positions(rank, vertex_order);
  const std::size_t n = vertex_order.size();
  std::vector<bool> used(n, false);
  std::vector<std::vector<Letter>> faces;
  for (std::size_t start = 0; start < n; ++start) {
    if (used[start]) continue;
    std::vector<Letter> face;
    std::size_t at = start;
    while (!used[at]) {
      used[at] = true;
      const Letter depart = vertex_order[at];
      face.push_back(depart);
      at = (pos[depart.inverse().code()] + 1) % n;
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

RibbonSurface::RibbonSurface(int rank, std::vector<Letter> vertex_order, std::size_t basepoint)
    : rank_(rank), order_(std::move(vertex_order)), basepoint_(basepoint) {
  if (rank_ < 2 || rank_ % 2 != 0) fail("ribbon surface rank must be a positive even number");
  position_ = end_positions(rank_, order_);
  if (basepoint_ >= order_.size()) fail("basepoint outside the vertex order");
  const auto faces = trace_faces(rank_, order_);
  if (faces.size() != 1) {
    fail("not a one-boundary surface: face tracing found " + std::to_string(faces.size()) + " faces");
  }
}

int RibbonSurface::cyclic_sign(Letter e1, Letter e2, Letter e3) const {
  const std::size_t n = order_.size();
  const std::size_t p1 = position(e1);
  const std::size_t d2 = (position(e2) + n - p1) % n;
  const std::size_t d3 = (position(e3) + n - p1) % n;
  return d2 < d3 ? 1 : -1;
}

std::size_t RibbonSurface::position_after(Letter cut, Letter end) const {
  const std::size_t n = order_.size();
  return (position(end) + n - position(cut) - 1) % n;
}

Word RibbonSurface::boundary_path() const {
  std::vector<Letter> raw;
  const std::size_t n = order_.size();
  std::size_t at = basepoint_;
  for (std::size_t step = 0; step < n; ++step) {
    const Letter depart = order_[at];
    raw.push_back(depart);
    at = (position(depart.inverse()) + 1) % n;
  }
  return Word::reduce(raw);
}

RibbonSurface standard_surface(int genus) {
  if (genus < 1) fail("standard_surface needs genus >= 1");
  std::vector<Letter> order;
  for (int i = 1; i <= genus; ++i) {
    const Letter a = Letter::generator(2 * i - 1);
    const Letter b = Letter::generator(2 * i);
    order.insert(order.end(), {a, b.inverse(), a.inverse(), b});
  }
  return RibbonSurface(2 * genus, std::move(order), 0);
}

CyclicWord boundary_word(const RibbonSurface& s) { return conjugacy_class(s.boundary_path()); }

Letter shift_letter(Letter l, int offset) { return Letter::generator(l.index() + offset, l.inverted()); }

Word shift_word(const Word& u, int offset) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (Letter l : u.letters()) raw.push_back(shift_letter(l, offset));
  return Word::reduce(raw);
}

RibbonSurface connected_sum(const RibbonSurface& s1, const RibbonSurface& s2) {
  std::vector<Letter> order;
  const auto& o1 = s1.vertex_order();
  const auto& o2 = s2.vertex_order();
  for (std::size_t i = 0; i < o1.size(); ++i) order.push_back(o1[(s1.basepoint() + i) % o1.size()]);
  for (std::size_t i = 0; i < o2.size(); ++i) {
    order.push_back(shift_letter(o2[(s2.basepoint() + i) % o2.size()], s1.rank()));
  }
  return RibbonSurface(s1.rank() + s2.rank(), std::move(order), 0);
}

}  // namespace goldknot
