#include "svoa/brst.hpp"

#include <stdexcept>

namespace svoa {

namespace {
Scalar frac(long n, long d) { return Scalar::from_fraction(n, d); }
}  // namespace

State brst_q0_field(const FieldRegistry& reg) {
  VertexAlgebra& va = reg.algebra();
  State w = reg.get("omega_M") + reg.get("omega_betagamma") + frac(1, 2) * reg.get("omega_bc");
  return va.mode(reg.get("c"), -1, w);
}

State brst_q1_field(const FieldRegistry& reg) {
  return reg.algebra().mode(reg.get("gamma"), -1, reg.get("tau_M"));
}

State brst_q2_field(const FieldRegistry& reg) {
  VertexAlgebra& va = reg.algebra();
  const State& g = reg.get("gamma");
  return Scalar(-1) * va.mode(g, -1, va.mode(g, -1, reg.get("b")));
}

Brst::Brst(SmallSpace& small)
    : small_(&small),
      q_(small.algebra(), small.registry().get("j_BRST"), 0),
      q0_(small.algebra(), brst_q0_field(small.registry()), 0),
      q1_(small.algebra(), brst_q1_field(small.registry()), 0),
      q2_(small.algebra(), brst_q2_field(small.registry()), 0),
      x_(small.algebra(), small.registry().get("X"), -1) {}

CertificateReport Brst::nilpotency_certificate() {
  CertificateReport r;
  r.q_j = apply_q(registry().get("j_BRST"));
  r.d_v = algebra().derivation(correction());
  r.equal = r.q_j == r.d_v;
  return r;
}

SweepReport Brst::q_squared_sweep(const std::vector<Vec>& momenta, int max_degree) {
  SweepReport rep;
  const SuperLattice& L = algebra().lattice();
  CosetClass cq = class_of(L, registry().get("j_BRST"));
  std::vector<int> dirs;
  for (int i = 0; i < kDim; ++i) dirs.push_back(i);
  for (const Vec& mu : momenta) {
    if (delta2(cq, L.coset_class(mu)) != 0) throw std::invalid_argument("Q has no zero mode on this sector");
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& o : oscillator_lists(dirs, d)) {
        State v(Monomial(mu, o));
        ++rep.checked;
        if (!apply_q(apply_q(v)).is_zero()) {
          ++rep.failures;
          if (rep.counterexamples.size() < 5) rep.counterexamples.push_back(v);
        }
      }
  }
  return rep;
}

State Brst::picture_change(const State& v) {
  if (!small_->contains(v)) throw std::invalid_argument("picture_change: state is not in the small algebra");
  return apply_x(v);
}

LemmaReport Brst::lemma_ecl_check(const State& v) {
  LemmaReport r;
  VertexAlgebra& va = algebra();
  const FieldRegistry& reg = registry();
  State wmbg = reg.get("omega_M") + reg.get("omega_betagamma");
  const State& wbc = reg.get("omega_bc");
  int deg = 0;
  for (const auto& [m, c] : v.terms()) deg = std::max(deg, m.degree());
  // L_n = omega_{n+1}; modes beyond the oscillator degree annihilate v
  auto fail = [&](std::string what) {
    r.hypotheses = false;
    r.failed = std::move(what);
    return r;
  };
  if (!(va.mode(wmbg, 1, v) == v)) return fail("(L^M_0 + L^bg_0) v != v");
  for (int n = 1; n <= deg + 2; ++n)
    if (!va.mode(wmbg, n + 1, v).is_zero()) return fail("(L^M_" + std::to_string(n) + " + L^bg) v != 0");
  for (int n = -1; n <= deg + 2; ++n)
    if (!va.mode(wbc, n + 1, v).is_zero()) return fail("L^bc_" + std::to_string(n) + " v != 0");
  r.hypotheses = true;
  r.q0_v = apply_q0(v);
  r.d_c_v = va.derivation(va.mode(reg.get("c"), -1, v));
  r.equal = r.q0_v == r.d_c_v;
  return r;
}

}  // namespace svoa
