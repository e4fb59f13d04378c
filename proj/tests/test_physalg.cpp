#include "doctest.h"
#include "svoa/physalg.hpp"

using namespace svoa;

namespace {

struct Env {
  VertexAlgebra va{SuperLattice::preset("II9,1")};
  FieldRegistry reg{va};
  SmallSpace small{reg};
  Brst brst{small};
  PhysAlg g{brst};
};

Env& env() {
  static Env e;
  return e;
}

const Vec kAlpha = Vec::unit(0) + Vec::unit(9);

}  // namespace

TEST_CASE("SUSY algebra") {
  auto& g = env().g;
  std::vector<Element> samples;
  for (int parity : {0, 1}) {
    auto b = g.basis(kAlpha, parity);
    samples.insert(samples.end(), b.begin(), b.begin() + 2);
  }
  auto rep = susy_check(g, samples);
  CHECK(rep.qq_checked == 256);
  CHECK(rep.qq_failures == 0);
  CHECK(rep.pq_failures == 0);
  CHECK(rep.px_failures == 0);
  CHECK(rep.pp_failures == 0);
}

TEST_CASE("bracket rejects non-representatives") {
  auto& g = env().g;
  Element bad = g.basis(kAlpha, 0).at(0);
  bad.rep = g.slice(kAlpha, Rational(-1)).sector(1).states.front();
  if (!env().brst.apply_q(bad.rep).is_zero()) CHECK_THROWS_AS(g.bracket(bad, g.P(1)), std::invalid_argument);
  Element wrong_picture = g.basis(kAlpha, 1).at(0);
  wrong_picture.parity = 0;
  CHECK_THROWS_AS(g.bracket(wrong_picture, g.P(1)), std::invalid_argument);
}

TEST_CASE("bracket class is independent of the representative") {
  auto& g = env().g;
  Element u = g.basis(kAlpha, 0).at(0);
  Element v = g.basis(-kAlpha, 0).at(0);
  auto r = g.bracket(u, v);
  const auto& c0 = g.slice(kAlpha, Rational(-1)).sector(0);
  for (std::size_t i = 0; i < std::min<std::size_t>(c0.dim(), 5); ++i) {
    State q = env().brst.apply_q(c0.states[i]);
    Element u2 = u;
    u2.rep += q;
    CHECK(g.bracket(u2, v).coords == r.coords);
  }
}

TEST_CASE("dot product") {
  auto& g = env().g;
  Element u = g.basis(kAlpha, 0).at(0);
  Element v = g.basis(-kAlpha, 1).at(0);
  CHECK(g.dot_product(State::vacuum(), v.rep) == v.rep);
  // u.v - (-1)^{|u||v|} v.u is exact
  auto par = [&](const State& s) { return class_of(env().va.lattice(), s).gso_parity(); };
  State uv = g.dot_product(u.rep, v.rep), vu = g.dot_product(v.rep, u.rep);
  State diff = uv - ((par(u.rep) * par(v.rep)) % 2 ? Scalar(-1) : Scalar(1)) * vu;
  CHECK(env().brst.apply_q(diff).is_zero());
  CHECK(g.is_exact_state(diff));
  // X_{-1}(u.v) - (X_{-1} u).v is exact
  State d2 = env().brst.picture_change(uv) - g.dot_product(env().brst.picture_change(u.rep), v.rep);
  CHECK(g.is_exact_state(d2));
}

TEST_CASE("invariant form") {
  auto& g = env().g;
  const auto& gd = g.gammas();
  for (int mu = 1; mu <= 10; ++mu)
    for (int nu = 1; nu <= 10; ++nu)
      CHECK(g.invariant_form(g.P(mu), g.P(nu)) == (mu == nu ? Scalar(metric_g(mu)) : Scalar()));
  // <xi, alpha | zeta, -alpha> = xi_mu zeta_nu g^{mu nu} on explicit massless vectors
  auto& va = env().va;
  const auto& reg = env().reg;
  auto vec_state = [&](int mu, const Vec& a) {
    State inner = va.mode(reg.get("c"), -1, State::exp(a));
    inner = va.mode(State::exp(-Vec::unit(kPhi)), -1, inner);
    return va.mode(reg.psi(mu), -1, inner);
  };
  for (int mu : {2, 3, 5})
    for (int nu : {2, 3, 5}) {
      Element x{kAlpha, 0, vec_state(mu, kAlpha), "x"}, y{-kAlpha, 0, vec_state(nu, -kAlpha), "y"};
      CHECK(g.invariant_form(x, y) == (mu == nu ? Scalar(1) : Scalar()));
    }
  // odd part: <X|u,-3/2,alpha>, |v,-1/2,-alpha>> = u_b v_g C^{b g}
  State ea = State::exp(kAlpha), c = reg.get("c");
  State cem = va.mode(c, -1, State::exp(-kAlpha));
  // closed odd states at -alpha come from the Dirac kernel
  std::vector<SparseVec> rows;
  Matrix d = dirac_block(gd, -kAlpha);
  for (const auto& row : d) {
    SparseVec r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) r.emplace_back(static_cast<int>(j), row[j]);
    rows.push_back(r);
  }
  auto ker = kernel_of(rows);
  REQUIRE(ker.size() == 8);
  int checked = 0;
  for (int b = 0; b < 16; b += 5)
    for (const auto& k : ker) {
      State ut = va.mode(reg.S(b), -1, va.mode(ea, -1, c));
      Element x{kAlpha, 1, env().brst.picture_change(ut), "x"};
      Element y{-kAlpha, 1, State(), "y"};
      Scalar expect;
      for (const auto& [gi, vg] : k) {
        y.rep += vg * va.mode(reg.S_dot(gi), -1, cem);
        expect += vg * gd.c[static_cast<std::size_t>(16 + b)][static_cast<std::size_t>(gi)];
      }
      REQUIRE(env().brst.apply_q(y.rep).is_zero());
      if (x.rep.is_zero()) continue;
      CHECK(g.invariant_form(x, y) == expect);
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("odd pairing does not depend on the preimage") {
  auto& g = env().g;
  Element u = g.basis(kAlpha, 1).at(0);
  Element v = g.basis(-kAlpha, 1).at(0);
  State ut = g.odd_preimage(u);
  Scalar base = -env().small.pairing_c(ut, v.rep);
  CHECK(base == g.invariant_form(u, v));
  const auto& c0 = g.slice(kAlpha, Rational(-3, 2)).sector(0);
  for (std::size_t i = 0; i < c0.dim(); ++i) {
    State q = env().brst.apply_q(c0.states[i]);
    CHECK(-env().small.pairing_c(ut + q, v.rep) == base);
  }
  CHECK_THROWS_AS(g.odd_preimage(g.Q(0)), std::domain_error);
}

TEST_CASE("bracket of opposite root spaces lands on the Cartan part") {
  auto& g = env().g;
  Element x = g.basis(kAlpha, 0).at(0), y = g.basis(-kAlpha, 0).at(0);
  auto r = g.bracket(x, y);
  std::vector<Scalar> expect(r.coords.size());
  Scalar f = g.invariant_form(x, y);
  for (int mu = 1; mu <= 10; ++mu) {
    auto pc = g.coords(g.P(mu));
    Scalar a = f * Scalar::from_rational(kAlpha.at(mu - 1));
    for (std::size_t k = 0; k < pc.size(); ++k) expect[k] += a * pc[k];
  }
  CHECK(r.coords == expect);
  // proportional null roots commute
  Element z = g.basis(2 * kAlpha, 0).at(0);
  CHECK(g.bracket(x, z).is_zero());
}

TEST_CASE("Jacobi and antisymmetry") {
  auto& g = env().g;
  auto el = default_jacobi_elements(g);
  CHECK(el.size() == 12);
  auto rep = jacobi_check(g, el);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.pairs == 66);
  CHECK(rep.triples == 220);
  CHECK(rep.antisymmetry_failures == 0);
  CHECK(rep.jacobi_failures == 0);
}

TEST_CASE("invariance on massless triples") {
  auto& g = env().g;
  std::vector<Element> el;
  for (const Vec& a : {kAlpha, -kAlpha})
    for (int parity : {0, 1}) {
      auto b = g.basis(a, parity);
      el.push_back(b.at(0));
      el.push_back(b.at(1));
    }
  el.push_back(g.P(1));
  el.push_back(g.P(10));
  auto rep = invariance_check(g, el);
  CHECK(rep.triples > 0);
  CHECK(rep.failures == 0);
  CHECK(rep.symmetry_failures == 0);
}
