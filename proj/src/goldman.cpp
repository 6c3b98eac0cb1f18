#include "goldknot/goldman.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "goldknot/error.hpp"

namespace goldknot {

Ray::Ray(std::vector<Letter> period) : period_(std::move(period)) {
  if (period_.empty()) fail("a ray needs a nonempty period");
}

std::optional<std::size_t> common_prefix(const Ray& r1, const Ray& r2) {
  const std::size_t cap = r1.period_length() + r2.period_length();
  for (std::size_t k = 0; k < cap; ++k) {
    if (r1[k] != r2[k]) return k;
  }
  return std::nullopt;
}

std::pair<Ray, Ray> rays_at(const CyclicWord& w, std::size_t p) {
  if (w.empty()) fail("rays_at needs a nonempty word");
  const std::size_t n = w.size();
  if (p >= n) fail("rays_at position out of range");
  std::vector<Letter> forward;
  std::vector<Letter> backward;
  forward.reserve(n);
  backward.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    forward.push_back(w[(p + i) % n]);
    backward.push_back(w[(p + n - 1 - i) % n].inverse());
  }
  return {Ray(std::move(backward)), Ray(std::move(forward))};
}

int circular_order(const Ray& r1, const Ray& r2, const Ray& r3, const RibbonSurface& s) {
  const auto l12 = common_prefix(r1, r2);
  const auto l13 = common_prefix(r1, r3);
  const auto l23 = common_prefix(r2, r3);
  if (!l12 || !l13 || !l23) throw Error(ErrorCode::kDegeneratePair, "degenerate pair: coincident rays");
  const std::size_t m = std::min({*l12, *l13, *l23});
  if (*l12 == m && *l13 == m && *l23 == m) {
    // All three leave the same vertex along different ends.
    return s.cyclic_sign(r1[m], r2[m], r3[m]);
  }
  // Exactly one pair travels further together; inside its subtree the
  // counterclockwise order starts just after the end we arrived through.
  auto inner = [&](const Ray& a, const Ray& b, std::size_t depth) {
    const Letter arrival = a[depth - 1].inverse();
    return s.position_after(arrival, a[depth]) < s.position_after(arrival, b[depth]) ? 1 : -1;
  };
  if (*l12 > m) return inner(r1, r2, *l12);    // (r1, r2, r3)
  if (*l23 > m) return inner(r2, r3, *l23);    // (r2, r3, r1) = (r1, r2, r3)
  return -inner(r1, r3, *l13);                 // (r1, r3, r2) = -(r1, r2, r3)
}

namespace {

bool rays_equal(const Ray& a, const Ray& b) { return !common_prefix(a, b).has_value(); }

}  // namespace

int linked_sign(const RibbonSurface& s, const CyclicWord& w, std::size_t p, const CyclicWord& v,
                std::size_t q) {
  if (w.empty() || v.empty()) fail("linked_sign needs nonempty words");
  const auto [wm, wp] = rays_at(w, p);
  const auto [vm, vp] = rays_at(v, q);
  // Parallel strands of a common root: push apart, no crossing.
  if (rays_equal(wm, vm) || rays_equal(wm, vp) || rays_equal(wp, vm) || rays_equal(wp, vp)) return 0;
  // A shared segment is counted only where w enters it.
  if (wm[0] == vm[0] || wm[0] == vp[0]) return 0;
  const int minus_side = circular_order(wm, vm, wp, s);
  const int plus_side = circular_order(wm, vp, wp, s);
  if (minus_side == plus_side) return 0;
  return minus_side;
}

namespace {

void accumulate_row(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y, std::size_t p,
                    LinearCombination& out) {
  const Word xp = rotate(x, p);
  for (std::size_t q = 0; q < y.size(); ++q) {
    const int sign = linked_sign(s, x, p, y, q);
    if (sign == 0) continue;
    out.add(conjugacy_class(multiply(xp, rotate(y, q))), Rational(sign * kBracketOrientation));
  }
}

void check_rank(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y) {
  if (x.max_index() > s.rank() || y.max_index() > s.rank()) {
    fail("bracket argument uses a generator beyond the surface rank " + std::to_string(s.rank()));
  }
}

}  // namespace

LinearCombination goldman_bracket(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y) {
  check_rank(s, x, y);
  LinearCombination out;
  if (x.empty() || y.empty()) return out;
  for (std::size_t p = 0; p < x.size(); ++p) accumulate_row(s, x, y, p, out);
  return out;
}

LinearCombination goldman_bracket(const RibbonSurface& s, const LinearCombination& x,
                                  const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [cx, qx] : x.terms()) {
    for (const auto& [cy, qy] : y.terms()) {
      LinearCombination b = goldman_bracket(s, cx, cy);
      b *= qx * qy;
      out += b;
    }
  }
  return out;
}

LinearCombination goldman_bracket_parallel(const RibbonSurface& s, const CyclicWord& x,
                                           const CyclicWord& y) {
  check_rank(s, x, y);
  if (x.empty() || y.empty()) return {};
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  std::vector<LinearCombination> rows(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    accumulate_row(s, x, y, static_cast<std::size_t>(p), rows[static_cast<std::size_t>(p)]);
  }
  LinearCombination out;
  for (const auto& r : rows) out += r;
  return out;
}

std::vector<LinearCombination> bracket_table_serial(const RibbonSurface& s,
                                                    std::span<const ClassPair> pairs) {
  std::vector<LinearCombination> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) out.push_back(goldman_bracket(s, x, y));
  return out;
}

std::vector<LinearCombination> bracket_table_parallel(const RibbonSurface& s,
                                                      std::span<const ClassPair> pairs,
                                                      int threads) {
  std::vector<LinearCombination> out(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  int team = threads;
#ifdef _OPENMP
  if (team <= 0) team = omp_get_max_threads();
#endif
  // Exceptions must not escape an OpenMP region; keep the first one.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const auto& [x, y] = pairs[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = goldman_bracket(s, x, y);
    } catch (...) {
#pragma omp critical(goldknot_table_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

HomologyCombination homological_projection(const LinearCombination& c, int rank) {
  HomologyCombination out;
  for (const auto& [cls, q] : c.terms()) {
    auto [it, inserted] = out.try_emplace(abelianize(cls.word(), rank), q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::int64_t symplectic_form(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() != v.size() || u.size() % 2 != 0) fail("symplectic form needs equal even-length vectors");
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) total += u[i] * v[i + 1] - u[i + 1] * v[i];
  return total;
}

}  // namespace goldknot
