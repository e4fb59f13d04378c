#pragma once
// Truncated power series in q with exact rational coefficients, and the
// series c(n), a(n) and phi(q) built from Euler products.

#include <cstddef>
#include <string>
#include <vector>

#include "svoa/exactfield.hpp"

namespace svoa {

class QSeries {
 public:
  // Zero series keeping coefficients of q^0..q^order.
  explicit QSeries(int order = 0);
  QSeries(int order, std::vector<Rational> coeffs);  // extra entries are dropped
  static QSeries constant(int order, const Rational& c);
  static QSeries monomial(int order, int k, const Rational& c = 1);  // c q^k

  int order() const { return order_; }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend bool operator==(const QSeries& a, const QSeries& b);

  // Requires a nonzero constant term; throws std::domain_error otherwise.
  QSeries inverse() const;
  // Negative exponents go through inverse().
  QSeries pow(int k) const;
  // f(q^k), truncated at the same order.
  QSeries dilate(int k) const;
  // Truncate or extend to a new order.
  QSeries with_order(int order) const;

  std::string str() const;

 private:
  int order_;
  std::vector<Rational> c_;
};

// phi(q) = prod_{n>=1} (1 - q^n).
QSeries euler_phi(int order);
// 8 prod ((1 + q^m) / (1 - q^m))^8, expanded factor by factor.
QSeries c_series(int order);
// prod ((1 - q^m) / (1 + q^m))^8, expanded factor by factor.
QSeries a_series(int order);
// c(n) for a single n.
Rational c_coefficient(int n);

}  // namespace svoa
