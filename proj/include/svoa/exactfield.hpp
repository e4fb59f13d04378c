#pragma once
// Exact arithmetic in Q(zeta), zeta a primitive 8th root of unity.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace svoa {

using Rational = mpq_class;

// Element a0 + a1 z + a2 z^2 + a3 z^3 with z^4 = -1.
//
// Stored as four integer numerators over one positive common denominator,
// reduced so that the five numbers are coprime. Small values live inline in
// int64; anything larger moves to a shared immutable GMP representation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  static Scalar from_rational(const Rational& q);
  static Scalar from_fraction(long num, long den);
  static Scalar from_coords(const std::array<Rational, 4>& c);
  static Scalar zeta(int n);  // zeta^n, n taken mod 8
  static Scalar imag_unit() { return zeta(2); }
  static Scalar sqrt2();
  static Scalar inv_sqrt2();

  Rational coord(int k) const;
  std::array<Rational, 4> coords() const;
  bool is_zero() const;
  bool is_rational() const;
  // Returns k when the value is zeta^k.
  std::optional<int> root_of_unity_exponent() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  // Field automorphism zeta -> zeta^k for odd k.
  Scalar galois(int k) const;
  Scalar conj() const { return galois(7); }
  // Norm down to Q.
  Rational norm() const;

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  struct Big;
  std::array<std::int64_t, 4> n_{0, 0, 0, 0};
  std::int64_t d_ = 1;
  std::shared_ptr<const Big> big_;

  bool small() const { return !big_; }
  void normalize_small();
  static Scalar from_big(std::array<mpz_class, 4> n, mpz_class d);
  void to_mpz(std::array<mpz_class, 4>& n, mpz_class& d) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Canonicalized num/den.
Rational make_rational(long num, long den);

// Binomial coefficient with rational upper argument and integer k >= 0.
Rational binomial(const Rational& top, long k);

}  // namespace svoa
