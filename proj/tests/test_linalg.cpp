#include <random>

#include "doctest.h"
#include "svoa/linalg.hpp"

using namespace svoa;

namespace {

Scalar rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  return Scalar(d(rng)) + Scalar(d(rng)) * Scalar::zeta(1) + Scalar(d(rng)) * Scalar::zeta(2);
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Matrix a(n, std::vector<Scalar>(m));
  for (auto& r : a)
    for (auto& x : r) x = rnd(rng);
  return a;
}

SparseVec to_sparse(const std::vector<Scalar>& r) {
  SparseVec v;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) v.emplace_back(static_cast<int>(j), r[j]);
  return v;
}

}  // namespace

TEST_CASE("rank of products with a known inner dimension") {
  std::mt19937_64 rng(1);
  for (std::size_t r = 0; r <= 6; ++r) {
    Matrix a = mat_mul(random_matrix(rng, 9, r == 0 ? 1 : r), random_matrix(rng, r == 0 ? 1 : r, 8));
    if (r == 0) a = Matrix(9, std::vector<Scalar>(8));
    CHECK(mat_rank(a) == r);
  }
}

TEST_CASE("kernels annihilate and rank-nullity holds") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    Matrix a = mat_mul(random_matrix(rng, 12, 5), random_matrix(rng, 5, 7));
    std::vector<SparseVec> rows;
    for (const auto& r : a) rows.push_back(to_sparse(r));
    auto ker = kernel_of(rows);
    CHECK(ker.size() + rank_of(rows) == rows.size());
    for (const auto& k : ker) {
      SparseVec sum;
      for (const auto& [i, c] : k) sum = sparse_axpy(sum, c, rows[i]);
      CHECK(sum.empty());
    }
  }
}

TEST_CASE("solve and span membership") {
  std::mt19937_64 rng(3);
  Matrix a = random_matrix(rng, 4, 9);
  Echelon e;
  for (const auto& r : a) e.insert(to_sparse(r));
  SparseVec target = sparse_axpy(to_sparse(a[0]), Scalar::sqrt2(), to_sparse(a[3]));
  auto sol = e.solve(target);
  REQUIRE(sol);
  SparseVec back;
  for (const auto& [i, c] : *sol) back = sparse_axpy(back, c, to_sparse(a[i]));
  CHECK(sparse_equal(back, target));
  SparseVec outside{{0, Scalar(1)}};
  // generically outside the 4-dimensional row space of a 9-column matrix
  for (int j = 1; j < 9; ++j) outside.emplace_back(j, Scalar(j * j));
  CHECK(e.in_span(outside) == false);
  CHECK_FALSE(e.solve(outside));
  Echelon untracked(false);
  untracked.insert(target);
  CHECK_THROWS_AS(untracked.solve(target), std::logic_error);
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(4);
  Matrix a = random_matrix(rng, 6, 6);
  CHECK(mat_mul(a, mat_inverse(a)) == mat_identity(6));
  Matrix s = mat_mul(random_matrix(rng, 6, 5), random_matrix(rng, 5, 6));
  CHECK_THROWS_AS(mat_inverse(s), std::domain_error);
  CHECK(mat_transpose(mat_transpose(a)) == a);
}
