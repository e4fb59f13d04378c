#include <random>

#include "doctest.h"
#include "svoa/fields.hpp"

using namespace svoa;

namespace {

struct Env {
  VertexAlgebra va{SuperLattice::preset("II9,1")};
  FieldRegistry reg{va};
};

Env& env() {
  static Env e;
  return e;
}

Scalar q(long n, long d) { return Scalar::from_fraction(n, d); }

// Sample monomials over a few momenta, with up to two oscillators.
std::vector<State> samples(bool ramond, int count, unsigned seed) {
  std::vector<Vec> moms;
  const Vec phi = Vec::unit(kPhi), sig = Vec::unit(kSigma), chi = Vec::unit(kChi);
  if (!ramond) {
    moms = {Vec{}, -phi, Vec::unit(kPsi0) - phi, sig, -phi + chi, Vec::unit(kPsi0 + 2) + sig,
            env().va.lattice().basis()[0]};
  } else {
    auto sp = spinor_weights(true), sc = spinor_weights(false);
    moms = {sp[0] - Vec::unit(kPhi, 1), sc[3] - Vec::unit(kPhi, 3), sp[5] - Vec::unit(kPhi, 1) + sig,
            sc[7] + Vec::unit(kPhi, 1) + chi};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pm(0, static_cast<int>(moms.size()) - 1), dir(0, kDim - 1), md(1, 2),
      len(0, 2);
  std::vector<State> out;
  for (int i = 0; i < count; ++i) {
    Monomial m(moms[pm(rng)]);
    int l = len(rng);
    for (int k = 0; k < l; ++k) m.add(make_osc(dir(rng), md(rng)));
    out.emplace_back(m);
  }
  return out;
}

State op(const std::string& f, Half m, const State& v) { return mode_operator(env().va, env().reg.get(f), m, v); }

Half h2(int twice) { return Half::twice(twice); }

}  // namespace

TEST_CASE("OPE tables") {
  auto& e = env();
  int n = 0;
  for (const auto& [a, b] : ope_pairs()) {
    OpeReport r = verify_ope(e.reg, a, b);
    CHECK_MESSAGE(r.equal, r.str());
    ++n;
  }
  CHECK(n > 300);
  CHECK_THROWS_AS(verify_ope(e.reg, "b", "omega_M"), std::out_of_range);
  CHECK_THROWS_AS(e.reg.get("nope"), std::out_of_range);
}

TEST_CASE("central charges") {
  auto& e = env();
  CHECK(central_charge(e.va, e.reg.get("omega_M")) == Scalar(15));
  CHECK(central_charge(e.va, e.reg.get("omega_Gh")) == Scalar(-15));
  CHECK(central_charge(e.va, e.reg.get("omega_phi")) == Scalar(13));
  CHECK(central_charge(e.va, e.reg.get("omega_chi")) == Scalar(-2));
  CHECK(central_charge(e.va, e.reg.get("omega_sigma")) == Scalar(-26));
  CHECK(central_charge(e.va, e.reg.get("omega")) == Scalar(0));
  CHECK(central_charge(e.va, e.reg.get("tau_M")).is_zero());
  // weight 3, so w_3 w has weight 2 and is not a vacuum multiple
  const State& x1 = e.reg.x(1);
  State w = e.va.mode(x1, -1, e.va.mode(e.reg.x(2), -1, e.reg.x(3)));
  CHECK_THROWS_AS(central_charge(e.va, w), std::domain_error);
}

TEST_CASE("alternative expressions of the named fields") {
  auto& e = env();
  auto& va = e.va;
  const auto& r = e.reg;
  CHECK(r.get("omega_M") == q(1, 2) * va.mode(r.get("tau_M"), 0, r.get("tau_M")));
  CHECK(r.get("omega_Gh") == q(1, 2) * va.mode(r.get("tau_Gh"), 0, r.get("tau_Gh")));
  CHECK(r.get("omega_Gh") == r.get("omega_phi") + r.get("omega_chi") + r.get("omega_sigma"));
  CHECK(r.get("omega_bc") == r.get("omega_sigma"));
  CHECK(r.get("omega_betagamma") == r.get("omega_phi") + r.get("omega_chi"));
  CHECK(r.get("tau_M") == r.get("tau_M+") + r.get("tau_M-"));
  // omega^M through the bosonized fermions
  State alt;
  for (int mu = 1; mu <= 10; ++mu) alt += (q(1, 2) * Scalar(metric_g(mu))) * va.mode(r.x(mu), -1, r.x(mu));
  for (int i = 0; i < 5; ++i) {
    State p = State::exp(Vec{});
    Monomial m;
    m.add(make_osc(kPsi0 + i, 1));
    m.add(make_osc(kPsi0 + i, 1));
    alt += q(1, 2) * State(m);
  }
  CHECK(alt == r.get("omega_M"));
  // X = Q xi in the four term form
  const State& b = r.get("b");
  const State& c = r.get("c");
  const State& eta = r.get("eta");
  State e2phi = State::exp(Vec::unit(kPhi, 4));
  State inner = va.mode(e2phi, -1, b);
  State four = va.mode(c, -1, va.derivation(r.get("xi"))) + va.mode(r.get("tau_M"), -1, State::exp(Vec::unit(kPhi))) +
               va.derivation(va.mode(eta, -1, inner)) + va.mode(va.derivation(eta), -1, inner);
  CHECK(r.get("X") == four);
  CHECK(grade(e.va.lattice(), r.get("X")).ghost == 0);
  CHECK(grade(e.va.lattice(), r.get("X")).picture == 1);
  CHECK(grade(e.va.lattice(), r.get("X")).l0 == 0);
}

TEST_CASE("ghost grading table") {
  auto& e = env();
  for (int n = -3; n <= 3; ++n) {
    for (int which : {kPhi, kChi, kSigma}) {
      State v = State::exp(Vec::unit(which, 2 * n));
      State l0 = op("omega", Half::of(0), v), jn = op("j_N", Half::of(0), v), jp = op("j_P", Half::of(0), v);
      long el = which == kPhi ? -n * (n + 2) : which == kChi ? n * (n - 1) : n * (n - 3);
      long en = which == kPhi ? 0 : which == kChi ? -n : n;
      long ep = which == kSigma ? 0 : n;
      CHECK(l0 == q(el, 2) * v);
      CHECK(jn == Scalar(en) * v);
      CHECK(jp == Scalar(ep) * v);
    }
  }
  const State& j = e.reg.get("j_BRST");
  CHECK(op("omega", Half::of(0), j) == j);
  CHECK(op("j_N", Half::of(0), j) == j);
  CHECK(op("j_P", Half::of(0), j).is_zero());
}

TEST_CASE("ghost N=2 current sign") {
  auto& e = env();
  // Charges straight from the Gram form, independent of the mode kernel.
  Vec jv = Vec::unit(kPhi, -6) + Vec::unit(kSigma, 4);  // doubled -3 phi + 2 sigma
  Vec tm = Vec::unit(kPhi) - Vec::unit(kChi) - Vec::unit(kSigma);
  CHECK(ip(jv, tm) == Rational(1));
  CHECK(op("j_Gh", Half::of(0), e.reg.get("tau_Gh-")) == e.reg.get("tau_Gh-"));
  CHECK(op("j_Gh", Half::of(0), e.reg.get("tau_Gh+")) == Scalar(-1) * e.reg.get("tau_Gh+"));
  State j = ghost_n2_current(e.reg);
  CHECK(op("j_Gh", Half::of(0), j).is_zero());
  CHECK(e.va.mode(j, 1, j) == Scalar(-5) * State::vacuum());
}

TEST_CASE("shifted modes") {
  auto& e = env();
  State one = State::vacuum();
  CHECK(op("tau_M", h2(-3), one) == e.reg.get("tau_M"));
  CHECK(op("tau_M", h2(-1), one).is_zero());
  CHECK(op("j_M", Half::of(0), e.reg.Psi(1, 1)) == e.reg.Psi(1, 1));
  CHECK_THROWS_AS(op("tau_M", Half::of(0), one), std::invalid_argument);
}

TEST_CASE("N=2 matter commutators") {
  const Scalar cM(15);
  for (bool ramond : {false, true}) {
    for (const State& v : samples(ramond, 6, ramond ? 5 : 4)) {
      int off = ramond ? 1 : 0;  // G_n has n in Z + 1/2 on NS states
      for (int m = -1; m <= 1; ++m) {
        for (int nt = -3 + off; nt <= 3; nt += 2) {
          Half M = Half::of(m), N = h2(nt);
          for (std::string s : {"+", "-"}) {
            std::string G = "tau_M" + s;
            State lhs = op("omega_M", M, op(G, N, v)) - op(G, N, op("omega_M", M, v));
            State rhs = Scalar::from_rational(Rational(m) / 2 - N.value()) * op(G, M + N, v);
            CHECK(lhs == rhs);
            State jl = op("j_M", M, op(G, N, v)) - op(G, N, op("j_M", M, v));
            CHECK(jl == Scalar(s == "+" ? 1 : -1) * op(G, M + N, v));
          }
        }
      }
      for (int mt = -3 + off; mt <= 3; mt += 2) {
        for (int nt = -3 + off; nt <= 3; nt += 2) {
          Half M = h2(mt), N = h2(nt);
          State pm = op("tau_M+", M, op("tau_M-", N, v)) + op("tau_M-", N, op("tau_M+", M, v));
          State rhs = op("omega_M", M + N, v) + Scalar::from_rational((M.value() - N.value()) / 2) * op("j_M", M + N, v);
          if ((M + N).t == 0) rhs += (cM * Scalar::from_rational((M.value() * M.value() - Rational(1, 4)) / 6)) * v;
          CHECK(pm == rhs);
          for (std::string s : {"+", "-"}) {
            std::string G = "tau_M" + s;
            CHECK((op(G, M, op(G, N, v)) + op(G, N, op(G, M, v))).is_zero());
          }
        }
      }
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          Half M = Half::of(m), N = Half::of(n);
          State ll = op("omega_M", M, op("omega_M", N, v)) - op("omega_M", N, op("omega_M", M, v));
          State rhs = Scalar(m - n) * op("omega_M", M + N, v);
          if (m + n == 0) rhs += (cM * q(m * (m * m - 1), 12)) * v;
          CHECK(ll == rhs);
          State jj = op("j_M", M, op("j_M", N, v)) - op("j_M", N, op("j_M", M, v));
          CHECK(jj == (m + n == 0 ? Scalar(5 * m) * v : State()));
        }
    }
  }
}

TEST_CASE("free field (anti)commutators") {
  auto& e = env();
  auto& va = e.va;
  for (bool ramond : {false, true}) {
    for (const State& v : samples(ramond, 5, 9)) {
      // raw psi modes are integral on NS and half-integral on R targets
      int off = ramond ? 1 : 0;
      for (int mu : {1, 2, 9, 10})
        for (int nu : {1, 2, 10})
          for (int mt = -4 + off; mt <= 2; mt += 2)
            for (int nt = -4 + off; nt <= 2; nt += 2) {
              Half M = h2(mt), N = h2(nt);
              State a = va.mode(e.reg.psi(mu), M, va.mode(e.reg.psi(nu), N, v)) +
                        va.mode(e.reg.psi(nu), N, va.mode(e.reg.psi(mu), M, v));
              bool delta = (M + N + Half::of(1)).t == 0;
              CHECK(a == (delta && mu == nu ? Scalar(metric_g(mu)) * v : State()));
            }
    }
  }
  for (const State& v : samples(false, 6, 12)) {
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        State cb = va.mode(e.reg.get("c"), m, va.mode(e.reg.get("b"), n, v)) +
                   va.mode(e.reg.get("b"), n, va.mode(e.reg.get("c"), m, v));
        CHECK(cb == (m + n + 1 == 0 ? v : State()));
        State cc = va.mode(e.reg.get("c"), m, va.mode(e.reg.get("c"), n, v)) +
                   va.mode(e.reg.get("c"), n, va.mode(e.reg.get("c"), m, v));
        CHECK(cc.is_zero());
      }
  }
  for (const State& v : samples(false, 6, 13)) {
    // gamma, beta are in class (V,1); their modes on NS targets are integral
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        State gb = va.mode(e.reg.get("gamma"), m, va.mode(e.reg.get("beta"), n, v)) -
                   va.mode(e.reg.get("beta"), n, va.mode(e.reg.get("gamma"), m, v));
        CHECK(gb == (m + n + 1 == 0 ? v : State()));
      }
  }
}

TEST_CASE("omega is a Virasoro element with D = L_-1") {
  for (bool ramond : {false, true}) {
    for (const State& v : samples(ramond, 8, 21)) {
      CHECK(op("omega", Half::of(-1), v) == env().va.derivation(v));
      State l0 = op("omega", Half::of(0), v);
      CHECK(l0 == Scalar::from_rational(monomial_l0(v.terms().begin()->first)) * v);
    }
  }
}
