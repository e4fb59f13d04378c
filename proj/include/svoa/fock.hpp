#pragma once
// Fock space S(h^-) x C[L]: basis monomials, sparse states and gradings.

#include <absl/container/flat_hash_map.h>
#include <absl/container/inlined_vector.h>

#include "json.hpp"
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svoa/exactfield.hpp"
#include "svoa/lattice.hpp"

namespace svoa {

// An oscillator e_dir(-mode) packed as (mode << 5) | dir.
using Osc = std::uint16_t;
inline constexpr Osc make_osc(int dir, int mode) { return static_cast<Osc>((mode << 5) | dir); }
inline constexpr int osc_dir(Osc o) { return o & 31; }
inline constexpr int osc_mode(Osc o) { return o >> 5; }

using OscList = absl::InlinedVector<Osc, 6>;

struct Monomial {
  Vec mom;
  OscList osc;  // sorted ascending

  Monomial() = default;
  explicit Monomial(const Vec& m) : mom(m) {}
  Monomial(const Vec& m, OscList o);

  int degree() const;
  // Number of oscillators pointing along dir.
  int count_dir(int dir) const;
  void add(Osc o);
  void sort();
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mom == b.mom && a.osc == b.osc;
  }
  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    return H::combine(H::combine_contiguous(std::move(h), m.osc.data(), m.osc.size()), m.mom, m.osc.size());
  }
};

// Deterministic order used for output: oscillator degree, oscillators, momentum.
bool monomial_less(const Monomial& a, const Monomial& b);

class State {
 public:
  using Map = absl::flat_hash_map<Monomial, Scalar>;

  State() = default;
  State(const Monomial& m, const Scalar& c = Scalar(1)) { add(m, c); }  // NOLINT
  static State vacuum() { return State(Monomial()); }
  static State exp(const Vec& mu) { return State(Monomial(mu)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;
  void add(const Monomial& m, const Scalar& c);
  void add(Monomial&& m, const Scalar& c);

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Scalar& s);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Scalar& s, State a) { return a *= s; }
  State operator-() const;
  friend bool operator==(const State& a, const State& b);

  std::vector<std::pair<Monomial, Scalar>> sorted() const;
  std::string str() const;

 private:
  Map terms_;
};

// A Heisenberg direction sum_i c_i e_i over the coordinate directions.
struct Direction {
  std::vector<std::pair<int, Scalar>> comps;
  static Direction unit(int dir) { return Direction{{{dir, Scalar(1)}}}; }
  static Direction of(const Vec& v);
};

// h(n) acting on v.
State heis_apply(const Direction& h, int n, const State& v);
// Multiply by e_dir(-mode), mode >= 1.
State create(int dir, int mode, const State& v);

struct Grading {
  CosetClass cls;
  int osc_degree = 0;
  Rational l0;
  Rational ghost;
  Rational picture;
  int gso_parity = -1;  // -1 when outside V^GSO

  friend bool operator==(const Grading&, const Grading&) = default;
  std::string str() const;
};

// L0 eigenvalue of a monomial, N + mu^2/2 - (rho, mu).
Rational monomial_l0(const Monomial& m);
Rational ghost_number(const Vec& mu);
Rational picture_number(const Vec& mu);
Grading grade(const SuperLattice& L, const Monomial& m);
// Throws std::invalid_argument listing the distinct grades when v is inhomogeneous.
Grading grade(const SuperLattice& L, const State& v);

// All oscillator lists of total degree exactly `level` over the given directions,
// in a fixed lexicographic order.
std::vector<OscList> oscillator_lists(const std::vector<int>& dirs, int level);

nlohmann::json to_json(const State& v);
State state_from_json(const nlohmann::json& j);

}  // namespace svoa
