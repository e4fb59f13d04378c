#pragma once
// Sparse exact linear algebra over Q(zeta8): incremental row echelon form
// with optional tracking of combinations, giving rank, span membership,
// coordinates and kernels without any numerical tolerance.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "svoa/exactfield.hpp"

namespace svoa {

// Sorted by column, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_from_map(const std::map<int, Scalar>& m);
SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y);  // x + a y
SparseVec sparse_scale(const SparseVec& x, const Scalar& a);
bool sparse_equal(const SparseVec& x, const SparseVec& y);

// Rows are kept with distinct leading columns and leading coefficient 1.
// Every stored row remembers which combination of inserted vectors it is,
// so a vector that reduces to zero yields a kernel relation.
class Echelon {
 public:
  // Without tracking, insert() cannot report relations and solve() throws.
  explicit Echelon(bool track = true) : track_(track) {}

  // Returns true when v was independent of what is already stored. When
  // `relation` is non-null and v is dependent, it receives a kernel vector
  // over insertion indices whose entry at v's own index is 1.
  bool insert(const SparseVec& v, SparseVec* relation = nullptr);

  // v minus its projection on the row space, always reducing leading terms
  // (fully reduced against every pivot).
  SparseVec reduce(const SparseVec& v) const;
  bool in_span(const SparseVec& v) const { return reduce(v).empty(); }
  // Coefficients c with v = sum c_i (inserted vector i); nullopt if v is not in the span.
  std::optional<SparseVec> solve(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  // Pivot columns in increasing order.
  std::vector<int> pivots() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec comb;  // over insertion indices
  };
  std::pair<SparseVec, SparseVec> reduce_tracked(const SparseVec& v, SparseVec comb) const;
  std::map<int, Row> rows_;  // keyed by leading column
  std::size_t inserted_ = 0;
  bool track_ = true;
};

// Rank of a list of vectors.
std::size_t rank_of(const std::vector<SparseVec>& vs);

// Basis of {c : sum c_i vs[i] = 0}, in the order kernel relations are found.
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& vs);

// Dense helpers for small matrices (rows of columns).
using Matrix = std::vector<std::vector<Scalar>>;
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_transpose(const Matrix& a);
Matrix mat_identity(std::size_t n);
std::size_t mat_rank(const Matrix& a);
// Throws std::domain_error for singular input.
Matrix mat_inverse(const Matrix& a);

}  // namespace svoa
