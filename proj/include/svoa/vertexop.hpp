#pragma once
// Vertex operators of the lattice vertex algebra: mode products a_n b,
// the derivation D, Schur polynomials and axiom checks.

#include <absl/container/flat_hash_map.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svoa/fock.hpp"
#include "svoa/lattice.hpp"

namespace svoa {

// Element of (1/2)Z stored doubled.
struct Half {
  int t = 0;

  static constexpr Half of(int n) { return Half{2 * n}; }
  static constexpr Half twice(int t) { return Half{t}; }
  bool is_integer() const { return t % 2 == 0; }
  int integer() const;  // throws unless integral
  Rational value() const { return make_rational(t, 2); }
  std::string str() const;

  friend Half operator+(Half a, Half b) { return Half{a.t + b.t}; }
  friend Half operator-(Half a, Half b) { return Half{a.t - b.t}; }
  Half operator-() const { return Half{-t}; }
  friend auto operator<=>(Half, Half) = default;
};

using SchurTerms = std::vector<std::pair<OscList, Scalar>>;

class VertexAlgebra {
 public:
  explicit VertexAlgebra(SuperLattice L);

  const SuperLattice& lattice() const { return L_; }

  // a_n b, extended bilinearly. Pairs of monomials whose classes do not allow
  // the index n contribute zero and are counted in stats().mismatches.
  State mode(const State& a, Half n, const State& b);
  State mode(const State& a, int n, const State& b) { return mode(a, Half::of(n), b); }
  // a_n b on monomials without touching the memo cache.
  State mode_mono_uncached(const Monomial& a, Half n, const Monomial& b);
  const State& mode_mono(const Monomial& a, Half n, const Monomial& b);

  State derivation(const State& a) const;
  // D^j a / j!
  State divided_derivation(const State& a, int j) const;

  // Largest index n with a_n b possibly nonzero.
  static std::optional<Half> cutoff(const State& a, const State& b);
  static Half cutoff(const Monomial& a, const Monomial& b);

  // S_k(alpha) expanded on coordinate oscillators.
  const SchurTerms& schur(const Vec& alpha, int k);

  struct Stats {
    std::size_t hits = 0, misses = 0, mismatches = 0;
  };
  const Stats& stats() const { return stats_; }
  void set_cache_enabled(bool on) { cache_enabled_ = on; }
  bool cache_enabled() const { return cache_enabled_; }
  void set_cache_limit(std::size_t n) { cache_limit_ = n; }
  void clear_cache();
  std::size_t cache_size() const { return cache_.size(); }
  // Versioned JSON-lines persistence; entries failing their content hash are skipped.
  void save_cache(const std::string& path) const;
  std::size_t load_cache(const std::string& path);

 private:
  struct Key {
    Monomial a;
    int n;
    Monomial b;
    friend bool operator==(const Key&, const Key&) = default;
    template <typename H>
    friend H AbslHashValue(H h, const Key& k) {
      return H::combine(std::move(h), k.a, k.n, k.b);
    }
  };
  struct SchurKey {
    Vec alpha;
    int k;
    friend bool operator==(const SchurKey&, const SchurKey&) = default;
    template <typename H>
    friend H AbslHashValue(H h, const SchurKey& k) {
      return H::combine(std::move(h), k.alpha, k.k);
    }
  };

  SuperLattice L_;
  absl::flat_hash_map<Key, State> cache_;
  absl::flat_hash_map<SchurKey, SchurTerms> schur_;
  bool cache_enabled_ = true;
  std::size_t cache_limit_ = 400000;
  Stats stats_;
};

// The operator v -> a_n v with a per-monomial cache.
class ModeOperator {
 public:
  ModeOperator(VertexAlgebra& va, State a, Half n) : va_(&va), a_(std::move(a)), n_(n) {}
  ModeOperator(VertexAlgebra& va, State a, int n) : ModeOperator(va, std::move(a), Half::of(n)) {}
  const State& apply(const Monomial& m);
  State apply(const State& v);
  State operator()(const State& v) { return apply(v); }
  const State& field() const { return a_; }
  Half index() const { return n_; }

 private:
  VertexAlgebra* va_;
  State a_;
  Half n_;
  absl::flat_hash_map<Monomial, State> cache_;
};

struct BorcherdsReport {
  State lhs, rhs;
  bool equal = false;
};

// Both sides of the Borcherds identity for homogeneous a, b, c.
BorcherdsReport check_borcherds(VertexAlgebra& va, const State& a, const State& b, const State& c, Half n,
                                Half k, Half m);

// eta(a, b) sum_j (-1)^{n+1+j} D^(j)(b_{n+j} a), the right side of skew symmetry.
State skew_symmetry_rhs(VertexAlgebra& va, const State& a, Half n, const State& b);

// L0 eigenvalue of a homogeneous state; throws when inhomogeneous.
Rational l0_of(const State& a);

// a_n^* b = (-1)^h sum_m (L1^m a / m!)_{2h-n-m-2} b where h = L0(a) and L1 = omega_2.
State adjoint_mode(VertexAlgebra& va, const State& a, Half n, const State& b, const State& omega);

// Class of a homogeneous state.
CosetClass class_of(const SuperLattice& L, const State& a);

}  // namespace svoa
