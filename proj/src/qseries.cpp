#include "svoa/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace svoa {

namespace {

// f *= (1 + s q^m)
void times_binomial(QSeries& f, int m, int s) {
  for (int i = f.order(); i >= m; --i) f[i] += s * f[i - m];
}

// f /= (1 - q^m), i.e. f *= sum_k q^{km}
void over_one_minus(QSeries& f, int m) {
  for (int i = m; i <= f.order(); ++i) f[i] += f[i - m];
}

// f /= (1 + q^m)
void over_one_plus(QSeries& f, int m) {
  for (int i = m; i <= f.order(); ++i) f[i] -= f[i - m];
}

}  // namespace

QSeries::QSeries(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

QSeries QSeries::constant(int order, const Rational& c) { return monomial(order, 0, c); }

QSeries QSeries::monomial(int order, int k, const Rational& c) {
  QSeries f(order);
  if (k >= 0 && k <= order) f[k] = c;
  return f;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order_ < order_) *this = with_order(o.order_);
  for (int i = 0; i <= order_; ++i) (*this)[i] += o[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order_ < order_) *this = with_order(o.order_);
  for (int i = 0; i <= order_; ++i) (*this)[i] -= o[i];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  int n = std::min(order_, o.order_);
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += (*this)[i] * o[j];
  }
  return *this = std::move(out);
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator==(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order_, b.order_);
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

QSeries QSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("QSeries::inverse: zero constant term");
  QSeries g(order_);
  Rational inv0 = 1 / c_[0];
  g[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += (*this)[k] * g[n - k];
    g[n] = -s * inv0;
  }
  return g;
}

QSeries QSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result = constant(order_, 1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

QSeries QSeries::dilate(int k) const {
  if (k < 1) throw std::invalid_argument("QSeries::dilate: k must be positive");
  QSeries f(order_);
  for (int i = 0; i * k <= order_; ++i) f[i * k] = (*this)[i];
  return f;
}

QSeries QSeries::with_order(int order) const {
  QSeries f(order);
  for (int i = 0; i <= std::min(order, order_); ++i) f[i] = (*this)[i];
  return f;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    if ((*this)[i] == 0) continue;
    if (!first) os << " + ";
    os << (*this)[i] << "*q^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

QSeries euler_phi(int order) {
  QSeries f = QSeries::constant(order, 1);
  for (int m = 1; m <= order; ++m) times_binomial(f, m, -1);
  return f;
}

QSeries c_series(int order) {
  QSeries f = QSeries::constant(order, 8);
  for (int m = 1; m <= order; ++m)
    for (int r = 0; r < 8; ++r) {
      times_binomial(f, m, 1);
      over_one_minus(f, m);
    }
  return f;
}

QSeries a_series(int order) {
  QSeries f = QSeries::constant(order, 1);
  for (int m = 1; m <= order; ++m)
    for (int r = 0; r < 8; ++r) {
      times_binomial(f, m, -1);
      over_one_plus(f, m);
    }
  return f;
}

Rational c_coefficient(int n) {
  if (n < 0) return 0;
  static std::vector<Rational> cache;
  if (static_cast<int>(cache.size()) <= n) cache = c_series(std::max(n, 2 * static_cast<int>(cache.size()))).coeffs();
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace svoa
