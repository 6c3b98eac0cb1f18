#include "goldknot/liealg.hpp"

#include <string>

#include "goldknot/error.hpp"

namespace goldknot {

LinearCombination bracket_piK(const FiberedKnotModel& model, const CyclicWord& x, const CyclicWord& y) {
  if (x.max_index() > model.rank() || y.max_index() > model.rank()) {
    fail("class outside the fiber alphabet of " + model.name());
  }
  return goldman_bracket(model.fiber(), x, y);
}

LinearCombination bracket_piK(const FiberedKnotModel& model, const LinearCombination& x,
                              const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [cx, qx] : x.terms()) {
    for (const auto& [cy, qy] : y.terms()) out += (qx * qy) * bracket_piK(model, cx, cy);
  }
  return out;
}

namespace {

constexpr int kOrbitStepLimit = 64;
constexpr std::size_t kOrbitLengthLimit = std::size_t{1} << 20;

bool shorter(const CyclicWord& a, const CyclicWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TOrbitClass orbit_canonical(const FiberedKnotModel& model, const CyclicWord& x, int bound) {
  if (bound < 1) fail("orbit search bound must be positive");
  TOrbitClass out{x, 0, 0, false};
  if (const auto period = model.class_period()) {
    // phi^period fixes every class: the orbit is exactly x, ..., t^(period-1) x.
    CyclicWord current = x;
    for (int n = 1; n < *period; ++n) {
      current = model.monodromy().apply(current);
      if (shorter(current, out.representative)) out.representative = current;
    }
    out.hi = *period - 1;
    out.finite = true;
    return out;
  }
  const FreeGroupAutomorphism backward = model.monodromy().inverse();
  // Scan one direction; returns false if a step or length limit was hit.
  auto scan = [&](const FreeGroupAutomorphism& step, int direction) {
    CyclicWord current = x;
    int streak = 0;
    for (int n = 1; n <= kOrbitStepLimit; ++n) {
      CyclicWord next = step.apply(current);
      if (next == x) {
        out.finite = true;
        return true;
      }
      streak = next.size() > current.size() ? streak + 1 : 0;
      if (shorter(next, out.representative)) out.representative = next;
      if (direction > 0) {
        out.hi = n;
      } else {
        out.lo = -n;
      }
      if (streak >= bound) return true;
      if (next.size() > kOrbitLengthLimit) return false;
      current = std::move(next);
    }
    return false;
  };
  const bool forward_ok = scan(model.monodromy(), 1);
  const bool backward_ok = out.finite || scan(backward, -1);
  if (!forward_ok || !backward_ok) {
    throw Error(ErrorCode::kUsage,
                "no minimum certified within bound " + std::to_string(bound) + " after scanning t^" +
                    std::to_string(out.lo) + " .. t^" + std::to_string(out.hi) + "; best candidate " +
                    model.alphabet().format(out.representative));
  }
  return out;
}

LinearCombination project_to_PiK(const FiberedKnotModel& model, const LinearCombination& c, int bound) {
  LinearCombination out;
  for (const auto& [cls, q] : c.terms()) out.add(orbit_canonical(model, cls, bound).representative, q);
  return out;
}

LinearCombination bracket_PiK(const FiberedKnotModel& model, const TOrbitClass& a, const TOrbitClass& b,
                              int bound) {
  return project_to_PiK(model, bracket_piK(model, a.representative, b.representative), bound);
}

LinearCombination bracket_PiK(const FiberedKnotModel& model, const LinearCombination& a,
                              const LinearCombination& b, int bound) {
  return project_to_PiK(model, bracket_piK(model, a, b), bound);
}

HomologyCombination bracket_H(int genus, const HClass& h1, const HClass& h2) {
  const auto n = static_cast<std::size_t>(2 * genus);
  if (h1.size() != n || h2.size() != n) {
    fail("homology classes must have length " + std::to_string(n));
  }
  HomologyCombination out;
  const std::int64_t w = symplectic_form(h1, h2);
  if (w == 0) return out;
  HClass sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = h1[i] + h2[i];
  out.emplace(std::move(sum), Rational(static_cast<long>(w)));
  return out;
}

HomologyCombination bracket_H(int genus, const HomologyCombination& a, const HomologyCombination& b) {
  HomologyCombination out;
  for (const auto& [h1, q1] : a) {
    for (const auto& [h2, q2] : b) {
      for (const auto& [h, q] : bracket_H(genus, h1, h2)) {
        Rational& slot = out[h];
        slot += q * q1 * q2;
        if (slot == 0) out.erase(h);
      }
    }
  }
  return out;
}

HClass t_on_H(const FiberedKnotModel& model, const HClass& h) {
  const auto& m = model.homology_matrix();
  if (h.size() != m.size()) fail("homology class length does not match the model rank");
  HClass out(h.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * h[j];
  }
  return out;
}

HomologyCombination t_on_H(const FiberedKnotModel& model, const HomologyCombination& c) {
  HomologyCombination out;
  for (const auto& [h, q] : c) out.emplace(t_on_H(model, h), q);
  return out;
}

}  // namespace goldknot
