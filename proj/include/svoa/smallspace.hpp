#pragma once
// The small algebra V_S (generated by e^gamma, D xi, eta, b, c), its sectors
// B(alpha)^k_{p,n} and C(alpha)_{p,n} = B(alpha)^0_{p,n}, and the invariant
// bilinear forms ( , ) and ( , )_C.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svoa/fields.hpp"
#include "svoa/linalg.hpp"

namespace svoa {

struct SectorSpec {
  Vec alpha;  // momentum in L^X (directions 0..9)
  Rational picture;
  int ghost = 0;
  Rational l0;  // k
  bool gso = true;
  bool ker_b1 = true;

  std::string str() const;
};

struct SectorBasis {
  SectorSpec spec;
  std::vector<State> states;
  std::size_t dim() const { return states.size(); }
};

// Coordinates of states on a list of basis states, through the monomials they use.
class MonomialIndex {
 public:
  int index(const Monomial& m);  // assigns a new index when unseen
  std::optional<int> find(const Monomial& m) const;
  SparseVec coords(const State& v);  // extends the index
  SparseVec coords_existing(const State& v) const;  // throws if v leaves the index
  std::size_t size() const { return order_.size(); }
  const Monomial& at(int i) const { return order_[static_cast<std::size_t>(i)]; }
  State state(const SparseVec& v) const;

 private:
  absl::flat_hash_map<Monomial, int> ids_;
  std::vector<Monomial> order_;
};

class SmallSpace {
 public:
  explicit SmallSpace(const FieldRegistry& reg);

  VertexAlgebra& algebra() const { return reg_->algebra(); }
  const FieldRegistry& registry() const { return *reg_; }

  // V_S is the kernel of eta_0 (eta = e^{-chi}); the chi sector factorizes.
  bool contains(const State& v) const;
  // Member of V_S^GSO: in V_S and every monomial in a GSO class.
  bool contains_gso(const State& v) const;

  // Basis of ker eta_0 on the chi Fock space at charge m and oscillator level N.
  const std::vector<State>& chi_kernel(int m, int level);
  // Basis of ker b_1 on the sigma Fock space at charge s and oscillator level N.
  const std::vector<State>& sigma_kernel(int s, int level);
  // All sigma Fock monomials at charge s and level N (used when ker_b1 is off).
  std::vector<State> sigma_fock(int s, int level) const;

  // Span oracle for chi_kernel: products eta_(-n)... (D xi)-type modes xi_(-m), m >= 1,
  // applied to the chi vacuum, restricted to charge m and level N.
  std::vector<State> chi_generated(int m, int level);
  // Span oracle for sigma_kernel: products of c_(1), c_(-k) (k >= 1), b_(-k) (k >= 2).
  std::vector<State> sigma_generated(int s, int level);

  // Smallest L0 contribution of the chi sector of V_S at charge m, and of the
  // sigma sector (ker b_1 when flagged) at charge s.
  static Rational chi_min_weight(int m);
  static Rational sigma_min_weight(int s, bool ker_b1);

  // Exact basis of B(alpha)^k_{p,n}; deterministic order.
  SectorBasis enumerate(const SectorSpec& spec);
  // Sum over all ghost numbers. Only p = -1 gives a finite space; other
  // pictures throw std::domain_error.
  std::map<int, SectorBasis> enumerate_all_ghosts(const Vec& alpha, const Rational& picture, const Rational& l0,
                                                  bool ker_b1 = true);
  // Fixed ghost window, for pictures where the sum over n is infinite.
  std::map<int, SectorBasis> enumerate_window(const Vec& alpha, const Rational& picture, const Rational& l0, int lo,
                                              int hi, bool ker_b1 = true);

  // The invariant form with (e^{3 sigma - 2 phi}, 1) = 1, via (u, v) = f(u_{-1}^* v).
  Scalar pairing(const State& u, const State& v);
  // (u, v)_C = (c_{-2} u, v).
  Scalar pairing_c(const State& u, const State& v);
  // a_n^* v with the total Virasoro element.
  State adjoint(const State& a, Half n, const State& v);

 private:
  const FieldRegistry* reg_;
  std::map<std::pair<int, int>, std::vector<State>> chi_ker_, sigma_ker_;
};

}  // namespace svoa
