#include <random>

#include "doctest.h"
#include "svoa/lattice.hpp"

using namespace svoa;

namespace {

Vec random_vec(const SuperLattice& L, std::mt19937_64& rng, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  Vec v;
  for (const auto& b : L.basis()) v += d(rng) * b;
  return v;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational r = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      r = -r;
    }
    r *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return r;
}

}  // namespace

TEST_CASE("eta is bimultiplicative and satisfies (nc) for both choices of y") {
  for (int y : {1, -1}) {
    auto L = SuperLattice::preset("II9,1", y);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) {
          auto A = CosetClass::from_index(a), B = CosetClass::from_index(b), C = CosetClass::from_index(c);
          CHECK((L.eta_exp(A + B, C) - L.eta_exp(A, C) - L.eta_exp(B, C)) % 8 == 0);
          CHECK((L.eta_exp(C, A + B) - L.eta_exp(C, A) - L.eta_exp(C, B)) % 8 == 0);
        }
    for (int a = 0; a < 8; ++a) {
      auto A = CosetClass::from_index(a);
      Vec d = coset_representative(A);
      CHECK(L.eta(A, A) == Scalar::zeta(ip4(d, d)));
    }
  }
}

TEST_CASE("eta examples") {
  auto L = SuperLattice::preset("II9,1", 1);
  CosetClass S0{2, 0}, V0{1, 0};
  CHECK(L.eta(S0, V0) == Scalar(1));
  CHECK(L.eta(V0, S0) == Scalar(-1));
  auto Lm = SuperLattice::preset("II9,1", -1);
  CHECK(Lm.eta(S0, V0) == Scalar(-1));
}

TEST_CASE("Delta is symmetric and bilinear") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto A = CosetClass::from_index(a), B = CosetClass::from_index(b);
      CHECK(delta2(A, B) == delta2(B, A));
      if (a == 0) CHECK(delta2(A, B) == 0);
      for (int c = 0; c < 8; ++c) {
        auto C = CosetClass::from_index(c);
        CHECK((delta2(A + B, C) - delta2(A, C) - delta2(B, C)) % 2 == 0);
      }
    }
  CHECK(delta2(CosetClass{2, 0}, CosetClass{1, 0}) == 1);
}

TEST_CASE("locality compatibility of eta and Delta") {
  auto L = SuperLattice::preset("II9,1", 1);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto A = CosetClass::from_index(a), B = CosetClass::from_index(b);
      Scalar lhs = L.eta(A, B) * Scalar::zeta(2 * delta2(A, B));
      Scalar rhs = L.eta(B, A).inverse() * Scalar::zeta(-2 * delta2(B, A));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("coset classes") {
  auto L = SuperLattice::preset("II9,1", 1);
  CHECK(L.coset_class(Vec()) == CosetClass{0, 0});
  Vec s;
  for (int i = kPsi0; i <= kPhi; ++i) s.d[i] = 1;
  CHECK(L.coset_class(s) == CosetClass{2, 0});
  CHECK(L.coset_class(Vec::unit(kSigma)) == CosetClass{0, 1});
  CHECK(L.coset_class(Vec::unit(kPhi)) == CosetClass{1, 0});
  CHECK(L.coset_class(Vec::unit(kChi) + Vec::unit(kSigma)) == CosetClass{0, 0});
  Vec c = s;
  c.d[kPhi] = -1;
  CHECK(L.coset_class(c) == CosetClass{3, 0});
  CHECK_THROWS(L.coset_class(Vec::unit(kSigma, 1)));
  Vec bad;
  bad.d[kPsi0] = 1;
  CHECK_THROWS(L.coset_class(bad));
  CHECK_FALSE(L.contains(Vec::unit(0)));
  CHECK(L.contains(Vec::unit(0) + Vec::unit(1)));
}

TEST_CASE("cocycle identities on random vectors") {
  auto L = SuperLattice::preset("II9,1", 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Vec a = random_vec(L, rng), b = random_vec(L, rng), c = random_vec(L, rng);
    CHECK(L.epsilon(a, b) == L.B(a, b) * L.epsilon(b, a));
    CHECK(L.epsilon(a, b) * L.epsilon(a + b, c) == L.epsilon(b, c) * L.epsilon(a, b + c));
  }
  for (int t = 0; t < 100; ++t) {
    Vec a = random_vec(L, rng);
    CHECK(L.B(a, a) == Scalar(1));
    CHECK(L.epsilon(Vec(), a) == Scalar(1));
    CHECK(L.epsilon(a, Vec()) == Scalar(1));
  }
}

TEST_CASE("cocycle examples") {
  auto L = SuperLattice::preset("II9,1", 1);
  CHECK(L.epsilon(Vec::unit(kPhi), Vec::unit(kPhi)) == Scalar(-1));
  CHECK(L.epsilon(Vec::unit(kSigma), Vec::unit(kSigma)) == Scalar(1));
}

TEST_CASE("preset II9,1 is even unimodular and the Gram determinant splits") {
  auto L = SuperLattice::preset("II9,1", 1);
  auto g = L.lx_gram();
  for (int i = 0; i < 10; ++i) CHECK(g[i][i].get_num() % 2 == 0);
  CHECK(det(g) == Rational(-1));
  std::vector<std::vector<Rational>> pp(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) pp[i][j] = ip(L.basis()[10 + i], L.basis()[10 + j]);
  Rational full = det(L.gram());
  CHECK(full == det(g) * det(pp) * Rational(1));
  CHECK(det(pp) == Rational(-1, 4));
}

TEST_CASE("construction rejects bad L^X") {
  std::vector<Vec> b;
  for (int i = 0; i < 10; ++i) b.push_back(Vec::unit(i));
  CHECK_THROWS(SuperLattice::build(b, 1));  // odd
  b.pop_back();
  CHECK_THROWS(SuperLattice::build(b, 1));  // rank 9
}
