#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlroots/integer.hpp"

namespace hlroots {

/// Dense univariate polynomial in q with exact coefficients. The
/// coefficient vector never ends in a zero, so the zero polynomial has no
/// coefficients and degree -1.
template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  Polynomial(R constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  Polynomial(int constant) : Polynomial(R(constant)) {}  // NOLINT

  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// Converting constructor, e.g. integer polynomial to rational.
  template <class S>
  explicit Polynomial(const Polynomial<S>& other) {
    coeffs_.reserve(other.coefficients().size());
    for (const auto& c : other.coefficients()) coeffs_.push_back(R(c));
  }

  static Polynomial monomial(R c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<R> v(static_cast<std::size_t>(exponent) + 1, R(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial q() { return monomial(R(1), 1); }

  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<R>& coefficients() const noexcept {
    return coeffs_;
  }
  [[nodiscard]] R operator[](int exponent) const {
    if (exponent < 0 || exponent > degree()) return R(0);
    return coeffs_[static_cast<std::size_t>(exponent)];
  }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  [[nodiscard]] int valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  template <class X>
  [[nodiscard]] X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + X(*it);
    return acc;
  }

  /// q^degree_bound * p(1/q). Requires degree() <= degree_bound.
  [[nodiscard]] Polynomial reversed(int degree_bound) const {
    if (degree() > degree_bound)
      throw std::invalid_argument("reversal bound below degree");
    if (is_zero()) return {};
    std::vector<R> v(static_cast<std::size_t>(degree_bound) + 1, R(0));
    for (int e = 0; e <= degree(); ++e)
      v[static_cast<std::size_t>(degree_bound - e)] = coeffs_[static_cast<std::size_t>(e)];
    return Polynomial(std::move(v));
  }

  [[nodiscard]] Polynomial shifted(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return {};
    std::vector<R> v(static_cast<std::size_t>(exponent), R(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// p(q^e).
  [[nodiscard]] Polynomial substitute_power(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    if (is_zero()) return {};
    if (e == 0) return Polynomial(evaluate(R(1)));
    std::vector<R> v(static_cast<std::size_t>(degree() * e) + 1, R(0));
    for (int i = 0; i <= degree(); ++i)
      v[static_cast<std::size_t>(i * e)] = coeffs_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Adds c*q^exponent.
  void add_term(const R& c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<int>(coeffs_.size()) <= exponent)
      coeffs_.resize(static_cast<std::size_t>(exponent) + 1, R(0));
    coeffs_[static_cast<std::size_t>(exponent)] += c;
    trim();
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder. Every division step must be exact in R (always
  /// true for a monic divisor); otherwise std::domain_error.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<R> rem = coeffs_;
    const int dd = d.degree();
    const R& lead = d.coeffs_.back();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<R> quot(static_cast<std::size_t>(degree() - dd) + 1, R(0));
    for (int i = degree(); i >= dd; --i) {
      const R& top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      R c = top / lead;
      if (c * lead != top) throw std::domain_error("inexact polynomial division");
      quot[static_cast<std::size_t>(i - dd)] = c;
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Exact division; std::domain_error on a nonzero remainder.
  [[nodiscard]] Polynomial exact_div(const Polynomial& d) const {
    auto [quot, rem] = divmod(d);
    if (!rem.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
    return quot;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
Polynomial<R> operator*(const Polynomial<R>& p, const R& scalar) {
  return p * Polynomial<R>(scalar);
}

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// Descending exponents, explicit coefficients, unit coefficients elided:
/// "3*q^5+17*q^4+q-1". Zero renders as "0".
std::string to_string(const IntPolynomial& p, const std::string& var = "q");
std::string to_string(const RatPolynomial& p, const std::string& var = "q");

/// Whether every coefficient is an integer.
bool is_integral(const RatPolynomial& p);
/// Throws std::domain_error when a coefficient is not an integer.
IntPolynomial to_integral(const RatPolynomial& p);

/// Parses the text form produced by to_string (integer coefficients).
IntPolynomial parse_polynomial(const std::string& text, const std::string& var = "q");

/// (q)_n = prod_{i=1}^{n} (1 + q + ... + q^{i-1}).
IntPolynomial q_factorial(int n);

/// [a+b; a, b] = (q)_{a+b} / ((q)_a (q)_b), computed by the Pascal
/// recurrence. Throws std::invalid_argument on negative arguments.
IntPolynomial q_binomial(int a, int b);

/// The k-th cyclotomic polynomial, by exact division of q^k - 1.
IntPolynomial cyclotomic_polynomial(int k);

/// Value of a polynomial at a primitive k-th root of unity, held as the
/// residue modulo the k-th cyclotomic polynomial. The representation does
/// not depend on which primitive root is meant.
template <class R>
class Cyclotomic {
 public:
  explicit Cyclotomic(int order, Polynomial<R> value = {})
      : order_(order), residue_(reduce(order, std::move(value))) {}

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const Polynomial<R>& residue() const noexcept { return residue_; }
  [[nodiscard]] bool is_zero() const noexcept { return residue_.is_zero(); }
  [[nodiscard]] bool is_integer() const noexcept { return residue_.is_constant(); }
  /// Constant term; meaningful when is_integer().
  [[nodiscard]] R constant() const { return residue_[0]; }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    residue_ += o.residue_;
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    residue_ -= o.residue_;
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    return Cyclotomic(a.order_, -a.residue_);
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return Cyclotomic(a.order_, a.residue_ * b.residue_);
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const R& s) {
    return Cyclotomic(a.order_, a.residue_ * s);
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.residue_ == b.residue_;
  }

  /// zeta^e for e >= 0.
  static Cyclotomic root_power(int order, int e) {
    return Cyclotomic(order, Polynomial<R>::monomial(R(1), e % order));
  }

 private:
  static Polynomial<R> reduce(int order, Polynomial<R> p) {
    if (order < 1) throw std::invalid_argument("root order must be positive");
    const Polynomial<R> phi(cyclotomic_polynomial(order));
    // q^order = 1 first: cheap and keeps the divisions short.
    if (p.degree() >= order) {
      std::vector<R> folded(static_cast<std::size_t>(order), R(0));
      for (int e = 0; e <= p.degree(); ++e) folded[static_cast<std::size_t>(e % order)] += p[e];
      p = Polynomial<R>(std::move(folded));
    }
    return p.divmod(phi).second;
  }
  void check(const Cyclotomic& o) const {
    if (o.order_ != order_) throw std::invalid_argument("mixed root orders");
  }

  int order_;
  Polynomial<R> residue_;
};

using CyclotomicValue = Cyclotomic<BigInt>;

template <class R>
Cyclotomic<R> eval_at_primitive_root(const Polynomial<R>& p, int k) {
  return Cyclotomic<R>(k, p);
}

/// Residue rendered in the variable z (a primitive root), e.g. "-z-1".
std::string to_string(const Cyclotomic<BigInt>& v);
std::string to_string(const Cyclotomic<Rational>& v);

}  // namespace hlroots
