#pragma once
// Named states of the superstring vertex algebra: matter, ghosts, the N=2
// currents, the BRST current, spinor fields and picture changing.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "svoa/vertexop.hpp"

namespace svoa {

// The 32 weights (+-1/2)^5 of D5*, ordered by the bit pattern of minus signs
// (bit i set means coordinate i is -1/2). Spinors have an even number of
// minus signs, conjugate spinors an odd number; 16 each.
std::vector<Vec> spinor_weights();
std::vector<Vec> spinor_weights(bool conjugate);

class FieldRegistry {
 public:
  explicit FieldRegistry(VertexAlgebra& va);

  VertexAlgebra& algebra() const { return *va_; }
  const SuperLattice& lattice() const { return va_->lattice(); }

  bool has(const std::string& name) const { return fields_.count(name) != 0; }
  // Throws std::out_of_range for unknown names.
  const State& get(const std::string& name) const;
  std::vector<std::string> names() const;

  // Indexed families, mu = 1..10, i = 1..5, spinor index a = 0..15.
  const State& x(int mu) const { return get("x" + std::to_string(mu)); }
  const State& psi(int mu) const { return get("psi" + std::to_string(mu)); }
  const State& Psi(int sign, int i) const { return get(std::string(sign > 0 ? "Psi+" : "Psi-") + std::to_string(i)); }
  const State& S_dot(int a) const { return get("S_dot" + std::to_string(a)); }
  const State& S(int a) const { return get("S" + std::to_string(a)); }
  const State& P_tilde(int mu) const { return get("Ptilde" + std::to_string(mu)); }
  const State& P(int mu) const { return get("P" + std::to_string(mu)); }

 private:
  void put(const std::string& name, State s) { fields_[name] = std::move(s); }
  VertexAlgebra* va_;
  std::map<std::string, State> fields_;
};

// The U(1) current of the ghost N=2 algebra, i.e. the one under which
// tau_Gh+ and tau_Gh- carry charge +1 and -1. With the metric used here
// (phi timelike) this is -j_Gh = 3 phi(-1) - 2 sigma(-1).
State ghost_n2_current(const FieldRegistry& reg);

// g^{mu mu} for mu = 1..10.
inline int metric_g(int mu) { return kMetric[mu - 1]; }

// a_n b for every n > -1 allowed by the classes, keyed by n.
std::map<Half, State> singular_part(VertexAlgebra& va, const State& a, const State& b);

struct OpeReport {
  std::string a, b;
  std::map<Half, State> computed, expected;
  bool equal = false;
  std::string str() const;
};

// Pairs with a transcribed expected singular part.
std::vector<std::pair<std::string, std::string>> ope_pairs();
OpeReport verify_ope(const FieldRegistry& reg, const std::string& a, const std::string& b);

// 2 * (coefficient of 1 in w_3 w); throws std::domain_error if w_3 w is not
// a multiple of the vacuum.
Scalar central_charge(VertexAlgebra& va, const State& w);

// Conformally shifted mode a_(m) = a_{m + h - 1}, h = L0(a). Throws if the
// shifted index is incompatible with the classes of a and the target.
State mode_operator(VertexAlgebra& va, const State& a, Half m, const State& v);

}  // namespace svoa
