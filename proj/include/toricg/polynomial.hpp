#pragma once

#include "toricg/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace toricg {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient k multiplies t^k. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }
  static Polynomial monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  // Out-of-range (including negative) indices read as zero.
  Integer operator[](long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Integer eval(const Integer& t) const {
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
    return r;
  }

  // Coefficients of degree <= k.
  Polynomial truncated(long k) const {
    if (k < 0) return {};
    std::vector<Integer> v(coeffs_.begin(), coeffs_.begin() + std::min<long>(k + 1, size()));
    return Polynomial(std::move(v));
  }

  // t^n * p(1/t) for n >= degree.
  Polynomial reversed(long n) const {
    std::vector<Integer> v(static_cast<std::size_t>(std::max<long>(n + 1, 0)));
    for (long k = 0; k < static_cast<long>(coeffs_.size()); ++k) {
      if (coeffs_[k] == 0) continue;
      if (n - k < 0) throw Error("Polynomial::reversed: degree exceeds reversal length");
      v[static_cast<std::size_t>(n - k)] = coeffs_[k];
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  // Adds c * o * t^shift without building the temporary.
  void add_scaled(const Polynomial& o, const Integer& c, std::size_t shift = 0) {
    if (o.is_zero() || c == 0) return;
    if (o.coeffs_.size() + shift > coeffs_.size()) coeffs_.resize(o.coeffs_.size() + shift);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i + shift] += c * o.coeffs_[i];
    trim();
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "c0 + c1*t + c2*t^2"; zero terms are skipped, the zero polynomial is "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << "*";
        os << "t";
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

enum class PolyOp { add, sub, mul };

inline Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return {};
}

/// (t + shift)^n.
inline Polynomial binomial_power(long shift, long n) {
  if (n < 0) throw std::invalid_argument("binomial_power: negative exponent");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  Integer s = shift;
  Integer sp = 1;  // shift^(n-k), filled from the top
  for (long k = n; k >= 0; --k) {
    v[static_cast<std::size_t>(k)] = binomial(n, k) * sp;
    sp *= s;
  }
  return Polynomial(std::move(v));
}

/// True iff every coefficient of a - b is non-negative.
inline bool coefficientwise_geq(const Polynomial& a, const Polynomial& b) {
  const long n = std::max(a.degree(), b.degree());
  for (long k = 0; k <= n; ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

}  // namespace toricg
