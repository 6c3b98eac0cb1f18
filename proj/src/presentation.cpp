#include "goldknot/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "goldknot/error.hpp"

namespace goldknot {

std::vector<long> abelian_invariants(const GroupPresentation& p) {
  const std::size_t cols = p.generator_names.size();
  std::vector<std::vector<long>> m;
  for (const Word& r : p.relators) {
    const auto v = abelianize(r, p.rank());
    m.emplace_back(v.begin(), v.end());
  }
  const std::size_t rows = m.size();
  std::vector<long> diagonal;
  std::size_t top = 0;
  bool exhausted = false;
  while (!exhausted && top < rows && top < cols) {
    // Smith reduction on the block m[top.., top..].
    for (;;) {
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = top; i < rows; ++i) {
        for (std::size_t j = top; j < cols; ++j) {
          if (m[i][j] != 0 && (pi == rows || std::labs(m[i][j]) < std::labs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      std::swap(m[top], m[pi]);
      for (auto& row : m) std::swap(row[top], row[pj]);
      const long piv = m[top][top];
      bool clean = true;
      for (std::size_t i = top + 1; i < rows; ++i) {
        const long q = m[i][top] / piv;
        for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        clean = clean && m[i][top] == 0;
      }
      for (std::size_t j = top + 1; j < cols; ++j) {
        const long q = m[top][j] / piv;
        for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        clean = clean && m[top][j] == 0;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = top + 1; i < rows && divides; ++i) {
        for (std::size_t j = top + 1; j < cols; ++j) {
          if (m[i][j] % piv != 0) {
            for (std::size_t k = top; k < cols; ++k) m[top][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      diagonal.push_back(std::labs(piv));
      ++top;
      break;
    }
  }
  std::vector<long> out;
  for (long d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  for (std::size_t i = diagonal.size(); i < cols; ++i) out.push_back(0);
  return out;
}

std::vector<int> abelianization_weights(const GroupPresentation& p) {
  const auto cols = static_cast<std::size_t>(p.rank());
  std::vector<std::vector<mpq_class>> m;
  for (const Word& r : p.relators) {
    const auto v = abelianize(r, p.rank());
    m.emplace_back(v.begin(), v.end());
  }
  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const mpq_class lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  if (cols - pivots.size() != 1) {
    fail("abelianization has free rank " + std::to_string(cols - pivots.size()) + ", expected 1");
  }
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<mpq_class> kernel(cols, 0);
  kernel[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) kernel[pivots[i]] = -m[i][free_col];
  mpz_class den = 1;
  for (const auto& x : kernel) den = lcm(den, mpz_class(x.get_den()));
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : kernel) {
    ints.push_back(mpz_class(x * den));
    g = gcd(g, ints.back());
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const mpz_class& x) { return x != 0; });
  if (*first < 0) g = -g;
  std::vector<int> out;
  for (const auto& x : ints) out.push_back(static_cast<int>(mpz_class(x / g).get_si()));
  return out;
}

}  // namespace goldknot
