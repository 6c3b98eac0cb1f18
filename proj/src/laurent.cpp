#include "goldknot/laurent.hpp"

#include <cctype>
#include <utility>

#include "goldknot/error.hpp"

namespace goldknot {

LaurentPolynomial::LaurentPolynomial(long constant) { add_term(0, Integer(constant)); }

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coeff, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPolynomial::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) fail("exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) fail("exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    Integer a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

Integer LaurentPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (terms_.empty()) return {};
  LaurentPolynomial out = shifted(-min_exponent());
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentPolynomial parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail("empty polynomial");
  LaurentPolynomial out;
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    fail("malformed polynomial '" + std::string(text) + "' at offset " + std::to_string(i) + ": " + why);
  };
  auto read_int = [&](std::size_t& at) {
    const std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    return s.substr(start, at - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad("expected '+' or '-'");
    }
    const std::string digits = read_int(i);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    int exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) bad("'*' without coefficient");
      ++i;
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        const std::string ed = read_int(i);
        if (ed.empty()) bad("missing exponent");
        if (paren) {
          if (i >= s.size() || s[i] != ')') bad("missing ')'");
          ++i;
        }
        exponent = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      bad("expected a coefficient or 't'");
    }
    out += LaurentPolynomial::monomial(coeff * sign, exponent);
  }
  return out;
}

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) fail("division by the zero polynomial");
  if (a.is_zero()) return {};
  LaurentPolynomial rem = a;
  LaurentPolynomial quotient;
  const int bmin = b.min_exponent();
  const int bmax = b.max_exponent();
  const Integer blead = b.leading_coefficient();
  while (!rem.is_zero() && rem.max_exponent() - bmax >= rem.min_exponent() - bmin) {
    const Integer rlead = rem.leading_coefficient();
    if (!mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t())) break;
    const auto term = LaurentPolynomial::monomial(rlead / blead, rem.max_exponent() - bmax);
    quotient += term;
    rem -= term * b;
  }
  if (!rem.is_zero()) fail("polynomial division is not exact");
  return quotient;
}

namespace {

LaurentPolynomial primitive_part(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  const Integer c = p.content();
  LaurentPolynomial out;
  for (const auto& [e, coeff] : p.terms()) out += LaurentPolynomial::monomial(coeff / c, e);
  return out;
}

// Pseudo-remainder of ordinary polynomials (min exponent >= 0).
LaurentPolynomial pseudo_remainder(LaurentPolynomial a, const LaurentPolynomial& b) {
  const int db = b.max_exponent();
  const Integer lb = b.leading_coefficient();
  while (!a.is_zero() && a.max_exponent() >= db) {
    const Integer la = a.leading_coefficient();
    a = LaurentPolynomial::monomial(lb, 0) * a - LaurentPolynomial::monomial(la, a.max_exponent() - db) * b;
  }
  return a;
}

}  // namespace

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  LaurentPolynomial x = a.shifted(-a.min_exponent());
  LaurentPolynomial y = b.shifted(-b.min_exponent());
  Integer content = x.content();
  {
    Integer cy = y.content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cy.get_mpz_t());
  }
  x = primitive_part(x);
  y = primitive_part(y);
  if (x.max_exponent() < y.max_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r.shifted(-r.min_exponent()));
  }
  return (LaurentPolynomial::monomial(content, 0) * x).normalized();
}

LaurentPolynomial determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) fail("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  LaurentPolynomial prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPolynomial characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  LaurentMatrix a(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail("characteristic polynomial of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = LaurentPolynomial(-static_cast<long>(m[i][j]));
      if (i == j) a[i][j] += LaurentPolynomial::t();
    }
  }
  return determinant(std::move(a));
}

}  // namespace goldknot
