#pragma once
// The generalized Kac-Moody side: the trace identity behind dim H = c(n),
// the asymptotics of c(n), positive roots of II_{9,1} with respect to a
// timelike reference vector r, the truncated denominator identity and the
// Cartan matrix of the norm zero simple roots.
//
// Lattice vectors are Vec values supported on the L^X directions 0..9.
// Heights are h(a) = -(r, a); the positive cone is the side with h > 0.

#include <cstddef>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "svoa/lattice.hpp"
#include "svoa/qseries.hpp"

namespace svoa {

// ---- q-series identities ----

struct TraceIdentityReport {
  int order = 0;
  QSeries lattice_side{0};  // sum (-1)^m q^{lambda^2/2 - p^2/2 + m(m+1)/2 + 1/2}
  QSeries closed_form{0};   // 8 q phi(q^2)^8 / phi(q)
  std::size_t lattice_terms = 0;
  bool equal = false;
};
// Both sides to q^order; the lattice side runs over (lambda, -p-1) in the
// even sublattice of L^{psi,phi} and m >= |p|.
TraceIdentityReport trace_identity_check(int order);

struct AsymptoticReport {
  int n = 0;
  Rational c;
  // c(n) divided by A n^{-11/4} exp(2 pi sqrt(2n)) with A = 1/2 (the quoted constant)
  double ratio_quoted = 0;
  // the same with the constant A = 2^{-15/4} from the modular transformation of the generating function
  double ratio_modular = 0;
  // c(n) divided by the leading circle method term with the Bessel function I_5
  double ratio_bessel = 0;
};
// The only floating point computation in the library.
AsymptoticReport asymptotic_ratio(int n);

// ---- lattice side ----

// The default reference vector (1, 1, 0, ..., 0; 2), norm -2, in II_{9,1}.
Vec default_reference_vector();
// Coordinates "x1,...,x10" (halves allowed as 1/2); throws std::invalid_argument.
Vec parse_lx_vector(const std::string& text);
std::string lx_str(const Vec& v);

int lx_norm(const Vec& v);  // a^2, integral on II_{9,1}
int height(const Vec& r, const Vec& a);

class GradedSeries {
 public:
  using Map = absl::flat_hash_map<Vec, Rational>;

  GradedSeries(const Vec& r, int max_height);
  static GradedSeries one(const Vec& r, int max_height);

  const Vec& reference() const { return r_; }
  int max_height() const { return n_; }
  int height_of(const Vec& a) const { return height(r_, a); }

  // Terms of height outside [0, max_height] are dropped.
  void add(const Vec& a, const Rational& c);
  Rational coefficient(const Vec& a) const;
  // this *= sum_k b[k] e(k alpha), with b[0] = 1.
  void multiply_by_factor(const Vec& alpha, const std::vector<Rational>& b);

  friend GradedSeries operator*(const GradedSeries& x, const GradedSeries& y);
  friend GradedSeries operator+(const GradedSeries& x, const GradedSeries& y);
  friend bool operator==(const GradedSeries& x, const GradedSeries& y);

  // Nonzero terms ordered by (height, vector).
  std::vector<std::pair<Vec, Rational>> terms() const;
  std::size_t size() const;

 private:
  Vec r_;
  int n_;
  std::vector<Map> by_height_;
};

struct Root {
  Vec alpha;
  int height = 0;
  int norm = 0;  // a^2 <= 0
  Rational mult;  // c(-a^2/2), for both parities
  bool primitive = true;
};

struct RootTable {
  Vec r;
  int max_height = 0;
  std::vector<Root> roots;   // ordered by (height, vector)
  std::vector<Root> simple;  // the norm zero roots, each with multiplicity (8, 8)
  std::size_t count_null_primitive(int h) const;
};

// Throws std::invalid_argument unless r is in II_{9,1} with r^2 < 0.
RootTable enumerate_positive_roots(const Vec& r, int max_height);
// Brute-force oracle: scans a coordinate box around the majorant bound,
// widened by `margin` half units in every direction.
std::vector<Vec> box_scan_positive_roots(const Vec& r, int max_height, int margin = 1);

// Coefficients of ((1 - x)/(1 + x))^c up to x^k_max.
std::vector<Rational> factor_coefficients(const Rational& c, int k_max);

struct DenominatorReport {
  int max_height = 0;
  std::size_t roots = 0;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::vector<std::pair<Vec, std::pair<Rational, Rational>>> first_mismatches;  // lambda -> (lhs, rhs)
  // Observed LHS values by ray multiple n (n = 1, 2, ...) of primitive null vectors.
  std::vector<std::vector<Rational>> ray_values;
  std::size_t off_ray_nonzero = 0;
  bool ok() const { return mismatches == 0 && compared > 0; }
};
DenominatorReport denominator_check(const Vec& r, int max_height);
DenominatorReport denominator_check(const RootTable& table);

struct CartanReport {
  std::vector<Vec> simple_roots;  // each with even and odd multiplicity 8
  std::vector<std::vector<int>> matrix;  // (a_i, a_j)
  bool diagonal_zero = false;
  bool off_diagonal_nonpositive = false;
  bool zero_iff_proportional = false;
  bool ok() const { return diagonal_zero && off_diagonal_nonpositive && zero_iff_proportional; }
};
CartanReport cartan_matrix(const RootTable& table);

}  // namespace svoa
