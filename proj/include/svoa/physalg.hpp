#pragma once
// The Lie superalgebra of physical states: elements are classes in
// H(alpha)_{-1,1} (even) and H(alpha)_{-1/2,1} (odd). Bracket, the dot
// product u_{-1} v, the invariant form and the SUSY and Jacobi suites.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "svoa/cohomology.hpp"

namespace svoa {

// An element of the physical state algebra: a representative with its
// momentum and parity (0 even, picture -1; 1 odd, picture -1/2).
struct Element {
  Vec alpha;
  int parity = 0;
  State rep;
  std::string label;

  Rational picture() const { return parity == 0 ? Rational(-1) : Rational(-1, 2); }
};

struct BracketResult {
  Element value;
  std::vector<Scalar> coords;  // class on the slice representatives
  bool is_zero() const;
};

class PhysAlg {
 public:
  explicit PhysAlg(Brst& brst);

  Brst& brst() { return *brst_; }
  const GammaData& gammas();

  // The slice at (alpha, picture) restricted to ghost number `ghost`.
  ComplexSlice& slice(const Vec& alpha, const Rational& picture, int ghost = 1);

  // Basis of the root space. At alpha = 0 the even part is P^1..P^10 and the
  // odd part Q^a = S_dot^a_{-1} c (not in G, only in the extended algebra).
  std::vector<Element> basis(const Vec& alpha, int parity);
  Element P(int mu) const;
  Element Q(int a) const;

  // Throws std::invalid_argument unless u lies in ker b_1 and ker Q at the
  // picture of its parity.
  void require_representative(const Element& u);

  // {u, v} = (-1)^{|u|} (b_0 u)_0 v on states, |u| the parity in the vertex algebra.
  State curly(const Element& u, const Element& v);
  // [u, v]: {u, v}, followed by X_{-1} when u or v is even; reduced to its class.
  BracketResult bracket(const Element& u, const Element& v);
  // Class coordinates of an element in its slice; throws if it is not closed.
  std::vector<Scalar> coords(const Element& u);
  bool is_exact_class(const Element& u) { return is_zero_vector(coords(u)); }

  // u_{-1} v with its grading, and whether a state of that grading is exact.
  State dot_product(const State& u, const State& v);
  bool is_exact_state(const State& v);

  // <u, v> on G: (u, v)_H for even pairs, -(u~, v)_H for odd ones with
  // X_{-1} u~ = u, zero across parities. Throws std::domain_error when the
  // preimage does not exist (odd at alpha = 0).
  Scalar invariant_form(const Element& u, const Element& v);
  // A -3/2 picture representative u~ with X_{-1} u~ = u in cohomology.
  State odd_preimage(const Element& u);

  static bool is_zero_vector(const std::vector<Scalar>& v);

 private:
  Brst* brst_;
  std::unique_ptr<GammaData> gammas_;
  std::map<std::tuple<Vec, int, int>, std::unique_ptr<ComplexSlice>> slices_;
};

// ---- suites ----

struct SusyReport {
  std::size_t qq_checked = 0, qq_failures = 0;   // {Q^a, Q^b} = (1/sqrt2)(G_mu C)^{ab} P^mu
  std::size_t pq_checked = 0, pq_failures = 0;   // [P^mu, Q^a] = 0
  std::size_t px_checked = 0, px_failures = 0;   // [P^mu, x] = alpha^mu x
  std::size_t pp_checked = 0, pp_failures = 0;   // <P^mu, P^nu> = g^{mu nu} and [P^mu, P^nu] = 0
  bool ok() const { return qq_failures + pq_failures + px_failures + pp_failures == 0 && qq_checked > 0; }
};
// samples: elements x in G(alpha), alpha != 0, for the [P^mu, x] checks.
SusyReport susy_check(PhysAlg& g, const std::vector<Element>& samples);

struct JacobiReport {
  std::size_t elements = 0;
  std::size_t pairs = 0, antisymmetry_failures = 0;
  std::size_t triples = 0, jacobi_failures = 0;
  std::vector<std::string> failures;
  bool ok() const { return antisymmetry_failures + jacobi_failures == 0 && pairs > 0; }
};
// All unordered pairs and triples of distinct elements; super antisymmetry
// and the super Jacobi identity modulo im Q.
JacobiReport jacobi_check(PhysAlg& g, const std::vector<Element>& elements);

// The default 12 representatives: momenta alpha = e1 + e10, -gamma with
// gamma = alpha + beta, beta = (-1, 1, 0, ..., 0, -2), and 0. Every pair and
// triple sum has norm >= -4, so all slices stay at the first two levels.
std::vector<Element> default_jacobi_elements(PhysAlg& g);

struct InvarianceReport {
  std::size_t triples = 0, failures = 0;
  std::size_t symmetry_checked = 0, symmetry_failures = 0;  // <u,v> = (-1)^{p(u)p(v)} <v,u>
  bool ok() const { return failures + symmetry_failures == 0 && triples > 0; }
};
// <[u,v],w> = <u,[v,w]> for triples with momenta summing to zero.
InvarianceReport invariance_check(PhysAlg& g, const std::vector<Element>& elements);

}  // namespace svoa
