#include <map>
#include <random>

#include "doctest.h"
#include "svoa/fock.hpp"

using namespace svoa;

namespace {

// Number of multipartitions of n with `colors` colors.
long colored_partitions(int colors, int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int c = 0; c < colors; ++c)
    for (int part = 1; part <= n; ++part)
      for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return p[n];
}

State random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dir(0, kDim - 1), mode(1, 3), len(0, 3), coef(-3, 3);
  State s;
  for (int t = 0; t < 4; ++t) {
    Monomial m(Vec::unit(kChi, 2 * (t % 2)));
    int l = len(rng);
    for (int i = 0; i < l; ++i) m.add(make_osc(dir(rng), mode(rng)));
    s.add(m, Scalar(coef(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("Heisenberg commutator on the Fock space") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    State v = random_state(rng);
    for (int i : {0, 9, 12, 15, 16, 17}) {
      for (int j : {0, 9, 15, 17}) {
        for (int m = -2; m <= 2; ++m) {
          for (int n = -2; n <= 2; ++n) {
            State lhs = heis_apply(Direction::unit(i), m, heis_apply(Direction::unit(j), n, v)) -
                        heis_apply(Direction::unit(j), n, heis_apply(Direction::unit(i), m, v));
            State rhs;
            if (i == j && m + n == 0) rhs = Scalar(long(m) * kMetric[i]) * v;
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("oscillator lists match colored partition counts") {
  std::vector<int> dirs{0, 3, 15, 17};
  for (int n = 0; n <= 8; ++n) {
    auto lists = oscillator_lists(dirs, n);
    CHECK(static_cast<long>(lists.size()) == colored_partitions(4, n));
    for (const auto& l : lists) CHECK(Monomial(Vec{}, l).degree() == n);
  }
  CHECK(static_cast<long>(oscillator_lists({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 4).size()) == colored_partitions(10, 4));
}

TEST_CASE("zero mode reads off the momentum") {
  Vec mu = Vec::unit(kPhi, -2) + Vec::unit(kSigma, 2);
  State v = State::exp(mu);
  CHECK(heis_apply(Direction::unit(kPhi), 0, v) == Scalar(1) * v);  // (e_phi, -e_phi) = +1
  CHECK(heis_apply(Direction::unit(kSigma), 0, v) == v);
  CHECK(heis_apply(Direction::unit(kChi), 0, v).is_zero());
}

TEST_CASE("gradings of the ghost exponentials") {
  auto L = SuperLattice::preset("II9,1");
  Grading g = grade(L, Monomial(Vec::unit(kPhi, -2)));
  CHECK(g.l0 == make_rational(1, 2));
  CHECK(g.picture == -1);
  CHECK(g.ghost == 0);
  g = grade(L, Monomial(Vec::unit(kSigma)));
  CHECK(g.l0 == -1);
  CHECK(g.ghost == 1);
  g = grade(L, Monomial(Vec::unit(kChi)));
  CHECK(g.l0 == 0);
  CHECK(g.ghost == -1);
  CHECK(g.picture == 1);
  g = grade(L, Monomial(Vec::unit(kChi, -2)));
  CHECK(g.l0 == 1);
  g = grade(L, Monomial(Vec::unit(kSigma, -2)));
  CHECK(g.l0 == 2);
  // oscillators add their degree
  Monomial m(Vec{});
  m.add(make_osc(3, 2));
  m.add(make_osc(kChi, 1));
  CHECK(grade(L, m).l0 == 3);
  CHECK(grade(L, m).cls == CosetClass{});
}

TEST_CASE("inhomogeneous states are rejected") {
  auto L = SuperLattice::preset("II9,1");
  State v = State::exp(Vec::unit(kSigma)) + State::exp(Vec::unit(kChi));
  CHECK_THROWS_AS(grade(L, v), std::invalid_argument);
  CHECK_THROWS_AS(grade(L, State()), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    State v = random_state(rng);
    v *= Scalar::zeta(3) + Scalar::from_fraction(1, 3);
    CHECK(state_from_json(to_json(v)) == v);
  }
  auto bad = nlohmann::json::parse(R"([{"momentum":["1/3","0"],"oscillators":[],"coeff":"1"}])");
  CHECK_THROWS(state_from_json(bad));
}

TEST_CASE("state arithmetic prunes cancellations") {
  State v = State::exp(Vec::unit(kChi));
  State w = v - v;
  CHECK(w.is_zero());
  CHECK((v + v).coeff(Monomial(Vec::unit(kChi))) == Scalar(2));
  CHECK(v.str() == "(1)*e^" + Vec::unit(kChi).str());
}
