#include "svoa/exactfield.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace svoa {

struct Scalar::Big {
  std::array<mpz_class, 4> n;
  mpz_class d;
};

namespace {

constexpr std::int64_t kStoreLimit = std::int64_t{1} << 62;
constexpr std::int64_t kFastLimit = std::int64_t{1} << 30;

bool fits_store(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) < 62;
}

std::int64_t to_i64(const mpz_class& v) {
  // mpz_get_si is limited to long, which is 64 bit on the supported platforms.
  static_assert(sizeof(long) == 8);
  return mpz_get_si(v.get_mpz_t());
}

mpz_class from_i64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

std::uint64_t uabs(std::int64_t v) { return v < 0 ? std::uint64_t(-v) : std::uint64_t(v); }

// zeta^k on the power basis: index and sign.
void reduce_power(int k, int& idx, int& sign) {
  k = ((k % 8) + 8) % 8;
  sign = k >= 4 ? -1 : 1;
  idx = k % 4;
}

}  // namespace

Scalar::Scalar(long v) {
  if (uabs(v) >= std::uint64_t(kStoreLimit)) {
    *this = from_big({mpz_class(v), 0, 0, 0}, 1);
    return;
  }
  n_[0] = v;
}

Scalar Scalar::from_fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return from_rational(make_rational(num, den));
}

Scalar Scalar::from_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return from_big({c.get_num(), 0, 0, 0}, c.get_den());
}

Scalar Scalar::from_coords(const std::array<Rational, 4>& c) {
  mpz_class den = 1;
  for (const auto& x : c) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    den = g;
  }
  std::array<mpz_class, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = c[k].get_num() * (den / c[k].get_den());
  return from_big(std::move(n), std::move(den));
}

Scalar Scalar::zeta(int n) {
  int idx, sign;
  reduce_power(n, idx, sign);
  Scalar s;
  s.n_[idx] = sign;
  return s;
}

Scalar Scalar::sqrt2() {
  Scalar s;
  s.n_[1] = 1;
  s.n_[3] = -1;
  return s;
}

Scalar Scalar::inv_sqrt2() {
  Scalar s;
  s.n_[1] = 1;
  s.n_[3] = -1;
  s.d_ = 2;
  return s;
}

void Scalar::normalize_small() {
  std::uint64_t g = uabs(d_);
  for (auto v : n_) g = std::gcd(g, uabs(v));
  if (n_[0] == 0 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0) {
    d_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& v : n_) v /= std::int64_t(g);
    d_ /= std::int64_t(g);
  }
}

Scalar Scalar::from_big(std::array<mpz_class, 4> n, mpz_class d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    d = -d;
    for (auto& v : n) v = -v;
  }
  mpz_class g = d;
  for (const auto& v : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  bool zero = n[0] == 0 && n[1] == 0 && n[2] == 0 && n[3] == 0;
  if (zero) return Scalar();
  if (g != 1) {
    for (auto& v : n) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  }
  bool fits = fits_store(d);
  for (const auto& v : n) fits = fits && fits_store(v);
  Scalar s;
  if (fits) {
    for (int k = 0; k < 4; ++k) s.n_[k] = to_i64(n[k]);
    s.d_ = to_i64(d);
    return s;
  }
  auto big = std::make_shared<Big>();
  big->n = std::move(n);
  big->d = std::move(d);
  s.big_ = std::move(big);
  return s;
}

void Scalar::to_mpz(std::array<mpz_class, 4>& n, mpz_class& d) const {
  if (big_) {
    n = big_->n;
    d = big_->d;
    return;
  }
  for (int k = 0; k < 4; ++k) n[k] = from_i64(n_[k]);
  d = from_i64(d_);
}

Rational Scalar::coord(int k) const {
  Rational q;
  if (big_) {
    q = Rational(big_->n[k], big_->d);
  } else {
    q = Rational(from_i64(n_[k]), from_i64(d_));
  }
  q.canonicalize();
  return q;
}

std::array<Rational, 4> Scalar::coords() const {
  return {coord(0), coord(1), coord(2), coord(3)};
}

bool Scalar::is_zero() const {
  return !big_ && n_[0] == 0 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0;
}

bool Scalar::is_rational() const {
  if (big_) return big_->n[1] == 0 && big_->n[2] == 0 && big_->n[3] == 0;
  return n_[1] == 0 && n_[2] == 0 && n_[3] == 0;
}

std::optional<int> Scalar::root_of_unity_exponent() const {
  if (big_ || d_ != 1) return std::nullopt;
  int nz = 0, idx = 0;
  for (int k = 0; k < 4; ++k) {
    if (n_[k] != 0) {
      ++nz;
      idx = k;
    }
  }
  if (nz != 1) return std::nullopt;
  if (n_[idx] == 1) return idx;
  if (n_[idx] == -1) return idx + 4;
  return std::nullopt;
}

Scalar Scalar::operator-() const {
  if (big_) {
    auto b = *big_;
    for (auto& v : b.n) v = -v;
    return from_big(std::move(b.n), std::move(b.d));
  }
  Scalar s = *this;
  for (auto& v : s.n_) v = -v;
  return s;
}

namespace {
bool fast_ok(const std::array<std::int64_t, 4>& n, std::int64_t d) {
  std::uint64_t m = uabs(d);
  for (auto v : n) m |= uabs(v);
  return m < std::uint64_t(kFastLimit);
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (small() && o.small() && fast_ok(n_, d_) && fast_ok(o.n_, o.d_)) {
    if (d_ == o.d_) {
      for (int k = 0; k < 4; ++k) n_[k] += o.n_[k];
    } else {
      std::int64_t g = std::gcd(d_, o.d_);
      std::int64_t fa = o.d_ / g, fb = d_ / g;
      for (int k = 0; k < 4; ++k) n_[k] = n_[k] * fa + o.n_[k] * fb;
      d_ *= fa;
    }
    normalize_small();
    return *this;
  }
  std::array<mpz_class, 4> a, b;
  mpz_class da, db;
  to_mpz(a, da);
  o.to_mpz(b, db);
  for (int k = 0; k < 4; ++k) a[k] = a[k] * db + b[k] * da;
  return *this = from_big(std::move(a), da * db);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (small() && o.small() && fast_ok(n_, d_) && fast_ok(o.n_, o.d_)) {
    const auto& a = n_;
    const auto& b = o.n_;
    std::array<std::int64_t, 4> c{
        a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
        a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
        a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]};
    n_ = c;
    d_ *= o.d_;
    normalize_small();
    return *this;
  }
  std::array<mpz_class, 4> a, b, c;
  mpz_class da, db;
  to_mpz(a, da);
  o.to_mpz(b, db);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i + j < 4)
        c[i + j] += a[i] * b[j];
      else
        c[i + j - 4] -= a[i] * b[j];
    }
  }
  return *this = from_big(std::move(c), da * db);
}

Scalar Scalar::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("galois exponent must be odd");
  std::array<mpz_class, 4> a, c;
  mpz_class d;
  to_mpz(a, d);
  for (int j = 0; j < 4; ++j) {
    int idx, sign;
    reduce_power(j * k, idx, sign);
    if (sign > 0)
      c[idx] += a[j];
    else
      c[idx] -= a[j];
  }
  return from_big(std::move(c), std::move(d));
}

Rational Scalar::norm() const {
  Scalar p = *this * galois(3) * galois(5) * galois(7);
  return p.coord(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta8)");
  Scalar conjs = galois(3) * galois(5) * galois(7);
  Rational nrm = (*this * conjs).coord(0);
  return conjs * from_rational(1 / nrm);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.small() && b.small()) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.small() != b.small()) return false;  // canonical forms differ
  return a.big_->n == b.big_->n && a.big_->d == b.big_->d;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    Rational c = coord(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
  }
  return os.str();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  std::array<Rational, 4> c;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    std::string term = s.substr(pos, next - pos);
    if (term.empty()) throw std::invalid_argument("malformed scalar: " + std::string(text));
    int power = 0;
    std::string coef = term;
    auto star = term.find("*z");
    if (star != std::string::npos) {
      coef = term.substr(0, star);
      std::string rest = term.substr(star + 2);
      if (rest.empty()) {
        power = 1;
      } else if (rest.size() == 2 && rest[0] == '^' && rest[1] >= '0' && rest[1] <= '3') {
        power = rest[1] - '0';
      } else {
        throw std::invalid_argument("malformed scalar power: " + term);
      }
    }
    Rational q;
    if (q.set_str(coef, 10) != 0) throw std::invalid_argument("malformed rational: " + coef);
    q.canonicalize();
    c[power] += q;
    pos = next + 1;
    if (next == s.size()) break;
  }
  return from_coords(c);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational binomial(const Rational& top, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long j = 0; j < k; ++j) {
    r *= top - j;
    r /= j + 1;
  }
  return r;
}

}  // namespace svoa
