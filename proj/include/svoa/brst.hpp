#pragma once
// The BRST operator Q = (j^BRST)_0, its nilpotency certificate, the
// decomposition Q = Q0 + Q1 + Q2 and the picture changing operator X_{-1}.

#include <string>
#include <vector>

#include "svoa/smallspace.hpp"

namespace svoa {

struct CertificateReport {
  State q_j, d_v;  // Q j^BRST and D v
  bool equal = false;
};

struct LemmaReport {
  bool hypotheses = false;
  std::string failed;  // first failed hypothesis, empty when they hold
  State q0_v, d_c_v;   // Q0 v and D(c_{-1} v)
  bool equal = false;
};

struct SweepReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<State> counterexamples;  // first few inputs with Q^2 v != 0
  bool ok() const { return failures == 0; }
};

class Brst {
 public:
  explicit Brst(SmallSpace& small);

  SmallSpace& small() const { return *small_; }
  VertexAlgebra& algebra() const { return small_->algebra(); }
  const FieldRegistry& registry() const { return small_->registry(); }

  State apply_q(const State& v) { return q_(v); }
  State apply_q0(const State& v) { return q0_(v); }
  State apply_q1(const State& v) { return q1_(v); }
  State apply_q2(const State& v) { return q2_(v); }

  // The correction state with Q j^BRST = D v.
  const State& correction() const { return registry().get("brst_v"); }
  CertificateReport nilpotency_certificate();

  // Q^2 on every monomial of oscillator degree <= max_degree at each momentum.
  SweepReport q_squared_sweep(const std::vector<Vec>& momenta, int max_degree);

  // X_{-1} v; throws std::invalid_argument when v is not in the small algebra.
  State picture_change(const State& v);
  State apply_x(const State& v) { return x_(v); }

  // Hypotheses of the lemma Q0 v = D(c_{-1} v), checked for modes up to
  // the oscillator degree of v (higher modes vanish on it), then the identity.
  LemmaReport lemma_ecl_check(const State& v);

 private:
  SmallSpace* small_;
  ModeOperator q_, q0_, q1_, q2_, x_;
};

// Named pieces of j^BRST whose zero modes give Q0, Q1, Q2.
State brst_q0_field(const FieldRegistry& reg);
State brst_q1_field(const FieldRegistry& reg);
State brst_q2_field(const FieldRegistry& reg);

}  // namespace svoa
