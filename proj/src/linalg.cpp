#include "svoa/linalg.hpp"

#include <stdexcept>

namespace svoa {

SparseVec sparse_from_map(const std::map<int, Scalar>& m) {
  SparseVec out;
  out.reserve(m.size());
  for (const auto& [k, c] : m)
    if (!c.is_zero()) out.emplace_back(k, c);
  return out;
}

SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar c = a * y[j].second;
      if (!c.is_zero()) out.emplace_back(y[j].first, std::move(c));
      ++j;
    } else {
      Scalar c = x[i].second + a * y[j].second;
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& x, const Scalar& a) {
  if (a.is_zero()) return {};
  SparseVec out = x;
  for (auto& [k, c] : out) c *= a;
  return out;
}

bool sparse_equal(const SparseVec& x, const SparseVec& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].first != y[i].first || !(x[i].second == y[i].second)) return false;
  return true;
}

std::pair<SparseVec, SparseVec> Echelon::reduce_tracked(const SparseVec& v, SparseVec comb) const {
  std::map<int, Scalar> w(v.begin(), v.end());
  bool track = !comb.empty();
  std::map<int, Scalar> cm(comb.begin(), comb.end());
  // Rows have their leading entry at the pivot, so one increasing sweep suffices.
  for (auto it = w.begin(); it != w.end();) {
    auto r = rows_.find(it->first);
    if (r == rows_.end() || it->second.is_zero()) {
      ++it;
      continue;
    }
    Scalar a = it->second;
    for (const auto& [k, c] : r->second.v) {
      Scalar& t = w[k];
      t -= a * c;
    }
    if (track)
      for (const auto& [k, c] : r->second.comb) cm[k] -= a * c;
    it = w.erase(it);
  }
  return {sparse_from_map(w), track ? sparse_from_map(cm) : SparseVec{}};
}

SparseVec Echelon::reduce(const SparseVec& v) const { return reduce_tracked(v, {}).first; }

bool Echelon::insert(const SparseVec& v, SparseVec* relation) {
  std::size_t idx = inserted_++;
  SparseVec start;
  if (track_) start.emplace_back(static_cast<int>(idx), Scalar(1));
  auto [rem, comb] = reduce_tracked(v, std::move(start));
  if (rem.empty()) {
    if (relation && !track_) throw std::logic_error("Echelon: relation requested without tracking");
    if (relation) *relation = std::move(comb);
    return false;
  }
  Scalar inv = rem.front().second.inverse();
  int lead = rem.front().first;
  rows_.emplace(lead, Row{sparse_scale(rem, inv), sparse_scale(comb, inv)});
  return true;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
  if (!track_) throw std::logic_error("Echelon: solve needs tracking");
  // Track with a sentinel index that no insertion uses, then drop it.
  const int sentinel = -1;
  auto [rem, comb] = reduce_tracked(v, SparseVec{{sentinel, Scalar(1)}});
  if (!rem.empty()) return std::nullopt;
  SparseVec out;
  for (auto& [k, c] : comb)
    if (k != sentinel) out.emplace_back(k, -c);
  return out;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [k, r] : rows_) p.push_back(k);
  return p;
}

std::size_t rank_of(const std::vector<SparseVec>& vs) {
  Echelon e(false);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& vs) {
  Echelon e;
  std::vector<SparseVec> ker;
  for (const auto& v : vs) {
    SparseVec rel;
    if (!e.insert(v, &rel)) ker.push_back(std::move(rel));
  }
  return ker;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  if (a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix c(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix mat_transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<Scalar>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix mat_identity(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

namespace {
SparseVec row_sparse(const std::vector<Scalar>& r) {
  SparseVec v;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) v.emplace_back(static_cast<int>(j), r[j]);
  return v;
}
}  // namespace

std::size_t mat_rank(const Matrix& a) {
  Echelon e(false);
  for (const auto& r : a) e.insert(row_sparse(r));
  return e.rank();
}

Matrix mat_inverse(const Matrix& a) {
  std::size_t n = a.size();
  // Gauss-Jordan on [A | I].
  Matrix m(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("mat_inverse: not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    Scalar inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
    }
  }
  Matrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace svoa
