#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospectra/scalar.hpp"

namespace cospectra {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
  }

  /// t - root
  static Polynomial linear_root(const Scalar& root) {
    return Polynomial(std::vector<Scalar>{Scalar(-root), Scalar(1)});
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  /// Horner evaluation in the caller's scalar type.
  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial operator-() const {
    auto out = coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    auto out = p.coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned exponent) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<BigRational> quot(rem.size() - db, BigRational(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    BigRational factor = rem[k] / b.leading();
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coefficients()[j];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

/// Exact quotient; throws if `b` does not divide `a`.
inline RationalPolynomial exact_divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

inline RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return BigRational(1 / p.leading()) * p;
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return RationalPolynomial(std::move(out));
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
inline IntPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt denominators = 1;
  for (const auto& c : p.coefficients()) denominators = lcm(denominators, BigInt(c.get_den()));
  std::vector<BigInt> ints;
  for (const auto& c : p.coefficients()) ints.emplace_back(BigInt(c.get_num() * (denominators / c.get_den())));
  BigInt content = 0;
  for (const auto& c : ints) content = gcd(content, c);
  if (ints.back() < 0) content = -content;
  for (auto& c : ints) c /= content;
  return IntPolynomial(std::move(ints));
}

/// Human-readable form in the variable t, e.g. "t^3 - 3t - 2".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    Scalar c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

}  // namespace cospectra
