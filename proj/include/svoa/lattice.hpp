#pragma once
// The rank 18 lattice L = L^X + L^{psi,phi} + L^{chi,sigma}, its coset grading
// and the structure maps Delta, eta, B and epsilon.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "svoa/exactfield.hpp"

namespace svoa {

inline constexpr int kDim = 18;
// Coordinate directions. 0..9 span L^X (9 is the timelike x^10), 10..14 are
// phi^1..phi^5, 15 is the timelike phi, 16 is chi and 17 is sigma.
inline constexpr int kX0 = 0;
inline constexpr int kPsi0 = 10;
inline constexpr int kPhi = 15;
inline constexpr int kChi = 16;
inline constexpr int kSigma = 17;
inline constexpr std::array<int, kDim> kMetric{1, 1, 1, 1, 1, 1, 1, 1, 1, -1,
                                               1, 1, 1, 1, 1, -1, 1, 1};

// A vector of the ambient space with coordinates in (1/2)Z, stored doubled.
struct Vec {
  std::array<std::int8_t, kDim> d{};

  static Vec unit(int i, int twice = 2);
  static Vec from_twice(const std::array<int, kDim>& t);
  int twice(int i) const { return d[i]; }
  Rational at(int i) const { return make_rational(d[i], 2); }
  bool is_zero() const;

  Vec operator-() const;
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(int k, const Vec& v);
  friend bool operator==(const Vec& a, const Vec& b) = default;
  friend auto operator<=>(const Vec& a, const Vec& b) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Vec& v) {
    return H::combine_contiguous(std::move(h), v.d.data(), v.d.size());
  }
  std::string str() const;
};

// Four times the inner product; exact for all vectors with half-integral coordinates.
int ip4(const Vec& a, const Vec& b);
// The inner product as a rational.
Rational ip(const Vec& a, const Vec& b);
// Twice the inner product, for pairs where it is known to be integral.
int ip2(const Vec& a, const Vec& b);

// Element of Gamma(L) = Z2^2 x Z2. psi_phi: 0, V, S, C encoded as 0..3 so that
// the group law is xor; chi_sigma is 0 or 1.
struct CosetClass {
  std::uint8_t psi_phi = 0;
  std::uint8_t chi_sigma = 0;

  int index() const { return psi_phi + 4 * chi_sigma; }
  static CosetClass from_index(int i) {
    return {static_cast<std::uint8_t>(i & 3), static_cast<std::uint8_t>(i >> 2)};
  }
  friend CosetClass operator+(CosetClass a, CosetClass b) {
    return {static_cast<std::uint8_t>(a.psi_phi ^ b.psi_phi),
            static_cast<std::uint8_t>(a.chi_sigma ^ b.chi_sigma)};
  }
  friend bool operator==(CosetClass, CosetClass) = default;
  std::string str() const;
  // Parity in the GSO projected algebra: 0 even, 1 odd, -1 projected out.
  int gso_parity() const;
  bool is_gso() const { return gso_parity() >= 0; }
  bool ramond() const { return psi_phi >= 2; }
};

// Coset representative delta used for Delta and condition (nc).
Vec coset_representative(CosetClass c);

// Twice Delta(a, b) reduced mod 2, so 0 or 1.
int delta2(CosetClass a, CosetClass b);

class SuperLattice {
 public:
  // lx_basis: ten vectors supported on directions 0..9.
  static SuperLattice build(const std::vector<Vec>& lx_basis, int y = 1);
  static SuperLattice preset(std::string_view name, int y = 1);

  int y() const { return y_; }
  const std::vector<Vec>& basis() const { return basis_; }
  std::vector<std::vector<Rational>> gram() const;
  std::vector<std::vector<Rational>> lx_gram() const;

  bool contains(const Vec& v) const;
  bool lx_contains(const Vec& v) const;
  CosetClass coset_class(const Vec& v) const;  // throws unless v is in L
  // Coordinates of v on the ordered basis; throws unless v is in L.
  std::array<long, kDim> basis_coords(const Vec& v) const;

  // Exponent k with eta(a, b) = zeta^k, k in {0, 4}.
  int eta_exp(CosetClass a, CosetClass b) const { return eta_[a.index()][b.index()]; }
  Scalar eta(CosetClass a, CosetClass b) const { return Scalar::zeta(eta_exp(a, b)); }
  int b_exp(const Vec& a, const Vec& b) const;
  Scalar B(const Vec& a, const Vec& b) const { return Scalar::zeta(b_exp(a, b)); }
  int eps_exp(const Vec& a, const Vec& b) const;
  Scalar epsilon(const Vec& a, const Vec& b) const { return Scalar::zeta(eps_exp(a, b)); }
  // The seed exponents epsilon(b_i, b_j) on the ordered basis.
  const std::array<std::array<int, kDim>, kDim>& seed() const { return seed_; }

  // The eta table rendered with the column as first argument.
  std::string eta_grid() const;

 private:
  int y_ = 1;
  std::vector<Vec> basis_;
  // Integer matrix and denominator giving L^X basis coordinates from doubled coordinates.
  std::array<std::array<long, 10>, 10> lx_inv_{};
  long lx_den_ = 1;
  std::array<std::array<int, 8>, 8> eta_{};
  std::array<std::array<int, kDim>, kDim> seed_{};
};

// Background charge vector rho with L0(e^mu) = mu^2/2 - (rho, mu).
Vec background_charge();

}  // namespace svoa
