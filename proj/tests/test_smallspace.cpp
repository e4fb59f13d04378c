#include <random>

#include "doctest.h"
#include "svoa/brst.hpp"

using namespace svoa;

namespace {

struct Env {
  VertexAlgebra va{SuperLattice::preset("II9,1")};
  FieldRegistry reg{va};
  SmallSpace small{reg};
  Brst brst{small};
};

Env& env() {
  static Env e;
  return e;
}

const Vec kAlpha = Vec::unit(0) + Vec::unit(9);

// Coefficients of y^charge q^weight in prod over factors (1 + y^e q^w),
// truncated at weight `top`; independent of any vertex algebra code.
using Poly = std::map<std::pair<int, int>, long>;
Poly fermion_product(const std::vector<std::pair<int, int>>& factors, int top) {
  Poly p{{{0, 0}, 1}};
  for (auto [e, w] : factors) {
    Poly n = p;
    for (auto [k, c] : p)
      if (k.second + w <= top) n[{k.first + e, k.second + w}] += c;
    p = std::move(n);
  }
  return p;
}

long chi_character(int m, int weight) {
  std::vector<std::pair<int, int>> f;
  for (int k = 1; k <= weight + 1; ++k) f.push_back({1, k}), f.push_back({-1, k});
  auto p = fermion_product(f, weight);
  auto it = p.find({m, weight});
  return it == p.end() ? 0 : it->second;
}

long sigma_character(int s, int weight) {
  std::vector<std::pair<int, int>> f{{1, -1}};
  for (int k = 1; k <= weight + 2; ++k) f.push_back({1, k});
  for (int k = 2; k <= weight + 2; ++k) f.push_back({-1, k});
  auto p = fermion_product(f, weight);
  auto it = p.find({s, weight});
  return it == p.end() ? 0 : it->second;
}

bool same_span(const std::vector<State>& a, const std::vector<State>& b) {
  MonomialIndex idx;
  Echelon ea(false), eb(false), both(false);
  for (const auto& s : a) ea.insert(idx.coords(s)), both.insert(idx.coords(s));
  for (const auto& s : b) eb.insert(idx.coords(s)), both.insert(idx.coords(s));
  return ea.rank() == eb.rank() && both.rank() == ea.rank();
}

int parity(const State& v) { return grade(env().va.lattice(), v).gso_parity; }

}  // namespace

TEST_CASE("chi sector: kernel of eta_0 against generation and the character") {
  auto& s = env().small;
  for (int m = -3; m <= 3; ++m)
    for (int level = 0; level <= 5; ++level) {
      int w = level + (m * m - m) / 2;
      const auto& ker = s.chi_kernel(m, level);
      CHECK_MESSAGE(static_cast<long>(ker.size()) == chi_character(m, w), "m=", m, " N=", level);
      CHECK(same_span(ker, s.chi_generated(m, level)));
      if (SmallSpace::chi_min_weight(m) > w) CHECK(ker.empty());
    }
  // xi itself is outside, D xi inside
  CHECK_FALSE(s.contains(env().reg.get("xi")));
  CHECK(s.contains(env().va.derivation(env().reg.get("xi"))));
  CHECK(s.contains(env().reg.get("eta")));
}

TEST_CASE("sigma sector: kernel of b_1 against generation and the character") {
  auto& s = env().small;
  for (int sg = -3; sg <= 4; ++sg)
    for (int level = 0; level <= 5; ++level) {
      int w = level + (sg * sg - 3 * sg) / 2;
      const auto& ker = s.sigma_kernel(sg, level);
      CHECK_MESSAGE(static_cast<long>(ker.size()) == sigma_character(sg, w), "s=", sg, " N=", level);
      CHECK(same_span(ker, s.sigma_generated(sg, level)));
      if (SmallSpace::sigma_min_weight(sg, true) > w) CHECK(ker.empty());
    }
}

TEST_CASE("massless sectors") {
  auto& s = env().small;
  auto vec = s.enumerate({kAlpha, Rational(-1), 1, Rational(0)});
  CHECK(vec.dim() == 10);
  for (const auto& v : vec.states) {
    CHECK(s.contains_gso(v));
    CHECK(env().va.mode(env().reg.get("b"), 1, v).is_zero());
    Grading g = grade(env().va.lattice(), v);
    CHECK(g.l0 == 0);
    CHECK(g.ghost == 1);
    CHECK(g.picture == -1);
  }
  CHECK(s.enumerate({kAlpha, Rational(-1, 2), 0, Rational(0)}).dim() == 0);
  CHECK(s.enumerate({kAlpha, Rational(-3, 2), 1, Rational(0)}).dim() == 16);
  CHECK(s.enumerate({kAlpha, Rational(-1, 2), 1, Rational(0)}).dim() == 16);
  CHECK(s.enumerate({Vec{}, Rational(-1), 1, Rational(0)}).dim() == 10);
  CHECK_THROWS_AS(s.enumerate_all_ghosts(kAlpha, Rational(-1, 2), Rational(0)), std::domain_error);
  auto all = s.enumerate_all_ghosts(kAlpha, Rational(-1), Rational(0));
  CHECK(all.at(1).dim() == 10);
  CHECK_THROWS_AS(s.enumerate({Vec::unit(kPhi), Rational(-1), 1, Rational(0)}), std::invalid_argument);
}

TEST_CASE("sector bases are independent and graded") {
  auto& s = env().small;
  for (SectorSpec spec : {SectorSpec{kAlpha, Rational(0), 1, Rational(1)}, SectorSpec{Vec{}, Rational(-1), 0, Rational(1)},
                          SectorSpec{kAlpha, Rational(-1), 2, Rational(1)}}) {
    auto b = s.enumerate(spec);
    MonomialIndex idx;
    std::vector<SparseVec> rows;
    for (const auto& v : b.states) {
      rows.push_back(idx.coords(v));
      Grading g = grade(env().va.lattice(), v);
      CHECK(g.l0 == spec.l0);
      CHECK(g.ghost == spec.ghost);
      CHECK(g.picture == spec.picture);
      CHECK(s.contains_gso(v));
    }
    CHECK(rank_of(rows) == b.dim());
    CHECK(b.dim() > 0);
  }
}

TEST_CASE("normalization and support of the invariant form") {
  auto& e = env();
  auto& s = e.small;
  const Vec phi = Vec::unit(kPhi), sig = Vec::unit(kSigma);
  CHECK(s.pairing(State::exp(3 * sig - 2 * phi), State::vacuum()) == Scalar(1));
  CHECK(s.pairing(State::vacuum(), State::exp(3 * sig - 2 * phi)) == Scalar(1));
  // gammas in L^X + L^{psi,phi}, then pairs with n + n' = 3 and gamma + gamma' = -2 phi or not
  std::vector<Vec> gammas = {Vec{}, -phi, kAlpha - phi + Vec::unit(kPsi0), -2 * phi, kAlpha,
                             spinor_weights(true)[1] - Vec::unit(kPhi, 1),
                             spinor_weights(false)[6] - Vec::unit(kPhi, 3), Vec::unit(kPsi0 + 3) - phi};
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pg(0, static_cast<int>(gammas.size()) - 1), pn(-2, 5), coin(0, 1);
  int tried = 0, nonzero = 0;
  while (tried < 50) {
    Vec g = gammas[pg(rng)];
    int n = pn(rng);
    bool matched = coin(rng);
    Vec g2 = matched ? -2 * phi - g : gammas[pg(rng)];
    int n2 = matched ? 3 - n : pn(rng);
    Vec a = g + n * sig, b = g2 + n2 * sig;
    const auto& L = e.va.lattice();
    if (!L.coset_class(a).is_gso() || !L.coset_class(b).is_gso()) continue;
    if (monomial_l0(Monomial(a)) != monomial_l0(Monomial(b))) continue;
    ++tried;
    Scalar v = s.pairing(State::exp(a), State::exp(b));
    bool expect = (g + g2 == -2 * phi) && n + n2 == 3;
    CHECK_MESSAGE(v.is_zero() != expect, a.str(), " ", b.str());
    nonzero += !v.is_zero();
  }
  CHECK(nonzero > 5);
}

TEST_CASE("adjoints of b, c, Q and X") {
  auto& e = env();
  auto& s = e.small;
  std::vector<State> samples;
  for (SectorSpec spec : {SectorSpec{kAlpha, Rational(-1), 1, Rational(0)}, SectorSpec{kAlpha, Rational(0), 1, Rational(1)},
                          SectorSpec{kAlpha, Rational(-1, 2), 1, Rational(0)}}) {
    auto b = s.enumerate(spec);
    for (std::size_t i = 0; i < b.dim(); i += 3) samples.push_back(b.states[i]);
  }
  const State& b = e.reg.get("b");
  const State& c = e.reg.get("c");
  for (const State& v : samples) {
    for (int n = -2; n <= 3; ++n) {
      CHECK(s.adjoint(b, Half::of(n), v) == e.va.mode(b, 2 - n, v));
      CHECK(s.adjoint(c, Half::of(n), v) == Scalar(-1) * e.va.mode(c, -4 - n, v));
    }
    CHECK(s.adjoint(e.reg.get("j_BRST"), Half::of(0), v) == Scalar(-1) * e.brst.apply_q(v));
    CHECK(s.adjoint(e.reg.get("X"), Half::of(-1), v) == e.brst.apply_x(v));
  }
}

TEST_CASE("invariance and supersymmetry of the form") {
  auto& e = env();
  auto& s = e.small;
  // u in C(alpha)_{-1,1}, v in C(-alpha)_{-1,1} through c_{-2}; plus fields a
  auto U = s.enumerate({kAlpha, Rational(-1), 1, Rational(0)});
  auto V = s.enumerate({-kAlpha, Rational(-1), 1, Rational(0)});
  // the adjoint needs integral weight, which holds on the GSO part
  std::vector<State> fields = {e.reg.get("b"),     e.reg.get("c"),      e.reg.get("omega"),
                               e.reg.get("j_BRST"), e.reg.P_tilde(2),    e.reg.S_dot(3),
                               e.va.mode(e.reg.get("gamma"), -1, e.reg.get("gamma"))};
  int nonzero = 0;
  for (std::size_t i = 0; i < U.dim(); i += 3)
    for (std::size_t j = 0; j < V.dim(); j += 2) {
      State u = e.va.mode(e.reg.get("c"), -2, U.states[i]);
      const State& w = V.states[j];
      Scalar uw = s.pairing(u, w), wu = s.pairing(w, u);
      int sign = (parity(u) * parity(w)) % 2 ? -1 : 1;
      CHECK(uw == Scalar(sign) * wu);
      nonzero += !uw.is_zero();
      for (const State& a : fields)
        for (int n = -1; n <= 1; ++n) {
          State an_u = e.va.mode(a, n, u);
          if (an_u.is_zero() && s.adjoint(a, Half::of(n), w).is_zero()) continue;
          int sg = (parity(a) * parity(u)) % 2 ? -1 : 1;
          Scalar lhs = an_u.is_zero() ? Scalar() : s.pairing(an_u, w);
          Scalar rhs = Scalar(sg) * s.pairing(u, s.adjoint(a, Half::of(n), w));
          CHECK(lhs == rhs);
        }
    }
  CHECK(nonzero > 0);
}

TEST_CASE("the C form pairs dual sectors nondegenerately") {
  auto& e = env();
  auto& s = e.small;
  struct Pair {
    Rational p;
    int m;
  };
  for (Pair pr : {Pair{Rational(-1), 1}, Pair{Rational(-1, 2), 1}, Pair{Rational(-1), 0}, Pair{Rational(-1), 2}}) {
    auto A = s.enumerate({kAlpha, pr.p, pr.m, Rational(0)});
    auto B = s.enumerate({-kAlpha, Rational(-2) - pr.p, 2 - pr.m, Rational(0)});
    REQUIRE(A.dim() == B.dim());
    Matrix g(A.dim(), std::vector<Scalar>(B.dim()));
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < B.dim(); ++j) g[i][j] = s.pairing_c(A.states[i], B.states[j]);
    CHECK_MESSAGE(mat_rank(g) == A.dim(), "p=", pr.p.get_str(), " m=", pr.m);
    // grades that do not match give zero
    auto W = s.enumerate({-kAlpha, Rational(-2) - pr.p, 1 - pr.m, Rational(0)});
    for (std::size_t i = 0; i < A.dim(); i += 4)
      for (std::size_t j = 0; j < W.dim(); j += 4) CHECK(s.pairing_c(A.states[i], W.states[j]).is_zero());
  }
  // (Qu, v)_C = +-(u, Qv)_C
  auto A = s.enumerate({kAlpha, Rational(-1), 0, Rational(0)});
  auto B = s.enumerate({-kAlpha, Rational(-1), 1, Rational(0)});
  int sign = 0;
  for (const auto& u : A.states)
    for (const auto& v : B.states) {
      Scalar l = s.pairing_c(e.brst.apply_q(u), v), r = s.pairing_c(u, e.brst.apply_q(v));
      if (l.is_zero() && r.is_zero()) continue;
      int sg = l == r ? 1 : (l == Scalar(-1) * r ? -1 : 0);
      CHECK(sg != 0);
      if (sign == 0) sign = sg;
      CHECK(sg == sign);
    }
}
