#include <random>

#include "doctest.h"
#include "svoa/vertexop.hpp"

using namespace svoa;

namespace {

const SuperLattice& lat() {
  static const SuperLattice L = SuperLattice::preset("II9,1");
  return L;
}

// Small lattice vector inside the GSO projection.
Vec random_gso_vec(std::mt19937_64& rng) {
  const auto& basis = lat().basis();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1), sgn(0, 1), cnt(0, 2);
  for (;;) {
    Vec v;
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) v += (sgn(rng) ? 1 : -1) * basis[pick(rng)];
    bool small = true;
    for (auto x : v.d) small = small && x >= -3 && x <= 3;
    if (small && lat().coset_class(v).is_gso() && std::abs(ip4(v, v)) <= 12) return v;
  }
}

Monomial random_mono(std::mt19937_64& rng, int max_osc = 2) {
  std::uniform_int_distribution<int> dir(0, kDim - 1), mode(1, 2), len(0, max_osc);
  Monomial m(random_gso_vec(rng));
  int l = len(rng);
  for (int i = 0; i < l; ++i) m.add(make_osc(dir(rng), mode(rng)));
  return m;
}

State osc_state(int dir, int mode) {
  Monomial m;
  m.add(make_osc(dir, mode));
  return State(m);
}

}  // namespace

TEST_CASE("Heisenberg fields act by oscillator modes") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    State b(random_mono(rng));
    int i = std::uniform_int_distribution<int>(0, kDim - 1)(rng);
    for (int n = -2; n <= 3; ++n) CHECK(va.mode(osc_state(i, 1), n, b) == heis_apply(Direction::unit(i), n, b));
  }
}

TEST_CASE("vacuum and creation axioms") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(5);
  State one = State::vacuum();
  for (int t = 0; t < 60; ++t) {
    State a(random_mono(rng));
    CHECK(va.mode(one, -1, a) == a);
    CHECK(va.mode(a, -1, one) == a);
    for (int n = 0; n <= 3; ++n) CHECK(va.mode(a, n, one).is_zero());
    CHECK(va.mode(a, -2, one) == va.derivation(a));
    for (int n = 0; n <= 3; ++n) CHECK(va.mode(one, n, a).is_zero());
  }
}

TEST_CASE("translation covariance") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    State a(random_mono(rng)), b(random_mono(rng));
    CosetClass ca = class_of(lat(), a), cb = class_of(lat(), b);
    int par = delta2(ca, cb);
    Half cut = *VertexAlgebra::cutoff(a, b);
    for (Half n = cut + Half::of(1); n >= cut - Half::of(3); n = n - Half::of(1)) {
      if (((n.t % 2) + 2) % 2 != par) continue;
      State lhs = va.mode(va.derivation(a), n, b);
      State rhs = va.mode(a, n - Half::of(1), b);
      rhs *= Scalar::from_rational(-n.value());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cutoff is sharp on monomials") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    Monomial a = random_mono(rng), b = random_mono(rng);
    Half cut = VertexAlgebra::cutoff(a, b);
    for (int s = 1; s <= 3; ++s) CHECK(va.mode_mono_uncached(a, cut + Half::of(s), b).is_zero());
  }
}

TEST_CASE("exponentials of opposite momenta") {
  VertexAlgebra va(lat());
  Vec s = Vec::unit(kSigma);
  State r = va.mode(State::exp(s), 0, State::exp(-s));
  CHECK(r == State::vacuum());
  Vec phi = Vec::unit(kPhi);
  CHECK(lat().epsilon(phi, phi) == Scalar(-1));
  CHECK(lat().epsilon(s, s) == Scalar(1));
}

TEST_CASE("Schur polynomials") {
  VertexAlgebra va(lat());
  Vec a = Vec::unit(0, 4);  // 2 e_0
  const auto& s1 = va.schur(a, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].second == Scalar(2));
  const auto& s2 = va.schur(a, 2);
  // S_2 = a(-2)/2 + a(-1)^2/2 with a = 2 e_0
  REQUIRE(s2.size() == 2);
  Scalar total;
  for (const auto& [o, c] : s2) total += c;
  CHECK(total == Scalar(3));
  CHECK(va.schur(Vec{}, 3).empty());
  CHECK(va.schur(Vec{}, 0).size() == 1);
}

TEST_CASE("skew symmetry") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    State a(random_mono(rng)), b(random_mono(rng));
    int par = delta2(class_of(lat(), a), class_of(lat(), b));
    Half cut = *VertexAlgebra::cutoff(a, b);
    for (Half n = cut; n >= cut - Half::of(3); n = n - Half::of(1)) {
      if (((n.t % 2) + 2) % 2 != par) continue;
      CHECK(va.mode(a, n, b) == skew_symmetry_rhs(va, a, n, b));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Borcherds identity on random triples") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> back(0, 2);
  int nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    State a(random_mono(rng, 1)), b(random_mono(rng, 1)), c(random_mono(rng, 1));
    CosetClass g1 = class_of(lat(), a), g2 = class_of(lat(), b), g3 = class_of(lat(), c);
    auto fix = [](Half h, int par) { return ((h.t % 2) + 2) % 2 == par ? h : h - Half::twice(1); };
    Half n = fix(*VertexAlgebra::cutoff(a, b) - Half::of(back(rng)), delta2(g1, g2));
    Half k = fix(*VertexAlgebra::cutoff(a, c) - Half::of(back(rng)), delta2(g1, g3));
    Half m = fix(*VertexAlgebra::cutoff(b, c) - Half::of(back(rng)), delta2(g2, g3));
    auto rep = check_borcherds(va, a, b, c, n, k, m);
    CHECK_MESSAGE(rep.equal, "a=", a.str(), " b=", b.str(), " c=", c.str(), " n=", n.str(), " k=", k.str(),
                  " m=", m.str());
    nonzero += !rep.lhs.is_zero();
  }
  CHECK(nonzero > 30);
}

TEST_CASE("cache persistence round trip") {
  VertexAlgebra va(lat());
  std::mt19937_64 rng(29);
  std::vector<std::tuple<Monomial, Half, Monomial, State>> seen;
  for (int t = 0; t < 20; ++t) {
    Monomial a = random_mono(rng), b = random_mono(rng);
    Half n = VertexAlgebra::cutoff(a, b) - Half::of(1);
    seen.emplace_back(a, n, b, va.mode_mono(a, n, b));
  }
  std::string path = "vertexop_cache_test.jsonl";
  va.save_cache(path);
  VertexAlgebra fresh(lat());
  CHECK(fresh.load_cache(path) == va.cache_size());
  for (auto& [a, n, b, r] : seen) CHECK(fresh.mode_mono(a, n, b) == r);
  CHECK(fresh.stats().misses == 0);
  std::remove(path.c_str());
}
