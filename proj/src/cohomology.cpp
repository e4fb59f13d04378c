#include "svoa/cohomology.hpp"

#include <stdexcept>

#include "svoa/qseries.hpp"

namespace svoa {

namespace {

const Vec kPhiV = Vec::unit(kPhi);

Scalar frac(long n, long d) { return Scalar::from_fraction(n, d); }

bool is_zero_matrix(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool is_identity_multiple(const Matrix& m, Scalar& s) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  s = m[0][0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(m[i][j] == (i == j ? s : Scalar()))) return false;
  return true;
}

Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, std::vector<Scalar>(c)); }

Matrix neg_transpose(const Matrix& a) {
  Matrix t = mat_transpose(a);
  for (auto& row : t)
    for (auto& x : row) x = -x;
  return t;
}

std::vector<SparseVec> dense_rows(const Matrix& m) {
  std::vector<SparseVec> out;
  for (const auto& row : m) {
    SparseVec v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) v.emplace_back(static_cast<int>(j), row[j]);
    out.push_back(std::move(v));
  }
  return out;
}

// Subspaces given by spanning rows: equal iff the ranks of each and the union agree.
bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  std::vector<SparseVec> u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::size_t ra = rank_of(a), rb = rank_of(b);
  return ra == rb && rank_of(u) == ra;
}

// Coefficient c with v = c * w for a single-monomial state w; checks the whole of v.
Scalar coefficient_on(const State& v, const State& w) {
  const auto& [m, c] = *w.terms().begin();
  return v.coeff(m) / c;
}

}  // namespace

// ---- ComplexSlice ----

ComplexSlice::ComplexSlice(Brst& brst, const Vec& alpha, const Rational& picture, int lo, int hi, const Rational& l0)
    : brst_(&brst), alpha_(alpha), picture_(picture), l0_(l0), lo_(lo), hi_(hi) {
  if (lo > hi) throw std::invalid_argument("ComplexSlice: empty ghost window");
}

ComplexSlice::Level& ComplexSlice::level(int n) {
  if (n < lo_ - 1 || n > hi_ + 1) throw std::out_of_range("ComplexSlice: ghost number outside the window");
  auto it = levels_.find(n);
  if (it != levels_.end()) return it->second;
  Level lv;
  SmallSpace& small = brst_->small();
  lv.basis = small.enumerate(SectorSpec{alpha_, picture_, n, l0_, true, true});
  for (const State& s : lv.basis.states) lv.coords.push_back(index_.coords(s));
  return levels_.emplace(n, std::move(lv)).first->second;
}

const SectorBasis& ComplexSlice::sector(int n) const {
  return const_cast<ComplexSlice*>(this)->level(n).basis;
}

void ComplexSlice::compute_images(int n) {
  Level& lv = level(n);
  if (lv.images) return;
  std::vector<SparseVec> images;
  images.reserve(lv.basis.dim());
  for (const State& s : lv.basis.states) images.push_back(index_.coords(brst_->apply_q(s)));
  Echelon e;
  for (const auto& v : images) {
    SparseVec rel;
    if (!e.insert(v, &rel)) lv.kernel.push_back(std::move(rel));
  }
  lv.rank = e.rank();
  lv.images = std::move(images);
}

std::size_t ComplexSlice::rank(int n) {
  if (n < lo_ - 1 || n > hi_) throw std::out_of_range("ComplexSlice::rank: ghost number outside the window");
  compute_images(n);
  return *level(n).rank;
}

std::size_t ComplexSlice::dim_h(int n) {
  if (n < lo_ || n > hi_) throw std::out_of_range("ComplexSlice::dim_h: ghost number outside the window");
  return dim_c(n) - rank(n) - rank(n - 1);
}

std::map<int, std::size_t> ComplexSlice::dims() {
  std::map<int, std::size_t> out;
  for (int n = lo_; n <= hi_; ++n) out[n] = dim_h(n);
  return out;
}

const Matrix& ComplexSlice::q_matrix(int n) {
  compute_images(n);
  Level& lv = level(n);
  if (lv.matrix) return *lv.matrix;
  Level& next = level(n + 1);
  Echelon e;
  for (const auto& v : next.coords)
    if (!e.insert(v)) throw std::logic_error("ComplexSlice: sector basis is dependent");
  Matrix m = zeros(next.basis.dim(), lv.basis.dim());
  for (std::size_t j = 0; j < lv.images->size(); ++j) {
    auto sol = e.solve((*lv.images)[j]);
    if (!sol) throw std::logic_error("ComplexSlice: Q leaves the sector C(alpha)_{p,n+1}");
    for (const auto& [i, c] : *sol) m[static_cast<std::size_t>(i)][j] = c;
  }
  lv.matrix = std::move(m);
  return *lv.matrix;
}

bool ComplexSlice::q_squared_zero() {
  for (int n = lo_ - 1; n <= hi_ - 1; ++n) {
    const Matrix& a = q_matrix(n);
    const Matrix& b = q_matrix(n + 1);
    if (a.empty() || a.front().empty() || b.empty() || b.front().empty()) continue;
    if (!is_zero_matrix(mat_mul(b, a))) return false;
  }
  return true;
}

void ComplexSlice::compute_reps(int n) {
  if (n < lo_ || n > hi_) throw std::out_of_range("ComplexSlice::representatives: ghost number outside the window");
  Level& lv = level(n);
  if (lv.have_reps) return;
  compute_images(n);
  compute_images(n - 1);
  lv.closed = std::make_unique<Echelon>(true);
  for (const auto& v : *level(n - 1).images) {
    lv.closed->insert(v);
    lv.role.push_back(-1);
  }
  for (const auto& k : lv.kernel) {
    State s;
    for (const auto& [i, c] : k) s += c * lv.basis.states[static_cast<std::size_t>(i)];
    if (lv.closed->insert(index_.coords(s))) {
      lv.role.push_back(static_cast<int>(lv.reps.size()));
      lv.reps.push_back(std::move(s));
    } else {
      lv.role.push_back(-1);
    }
  }
  lv.have_reps = true;
}

const std::vector<State>& ComplexSlice::representatives(int n) {
  compute_reps(n);
  return level(n).reps;
}

bool ComplexSlice::is_exact(int n, const State& v) {
  if (!brst_->apply_q(v).is_zero()) return false;
  Level& prev = level(n - 1);
  compute_images(n - 1);
  Echelon e(false);
  for (const auto& x : *prev.images) e.insert(x);
  return e.in_span(index_.coords(v));
}

std::optional<std::vector<Scalar>> ComplexSlice::class_coords(int n, const State& v) {
  compute_reps(n);
  Level& lv = level(n);
  if (!brst_->apply_q(v).is_zero()) return std::nullopt;
  auto sol = lv.closed->solve(index_.coords(v));
  if (!sol) return std::nullopt;  // not in C_n
  std::vector<Scalar> out(lv.reps.size());
  for (const auto& [k, c] : *sol) {
    int r = lv.role[static_cast<std::size_t>(k)];
    if (r >= 0) out[static_cast<std::size_t>(r)] = c;
  }
  return out;
}

// ---- Euler-Poincare ----

EulerPoincareReport euler_poincare_dim(SmallSpace& small, const Vec& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("euler_poincare_dim: alpha must be nonzero");
  EulerPoincareReport rep;
  rep.alpha = alpha;
  auto all = small.enumerate_all_ghosts(alpha, Rational(-1), Rational(0));
  long s = 0;
  for (const auto& [n, b] : all) {
    rep.dims[n] = b.dim();
    s += (n % 2 == 0 ? 1 : -1) * static_cast<long>(b.dim());
  }
  rep.alternating = -s;
  Rational half_norm = -ip(alpha, alpha) / 2;
  if (half_norm.get_den() != 1) throw std::invalid_argument("euler_poincare_dim: alpha^2 must be even");
  rep.c_value = c_coefficient(static_cast<int>(half_norm.get_num().get_si()));
  rep.equal = Rational(rep.alternating) == rep.c_value;
  return rep;
}

// ---- Gamma matrices ----

GammaData gamma_matrices(const FieldRegistry& reg) {
  VertexAlgebra& va = reg.algebra();
  GammaData g;
  g.dotted_weights = spinor_weights(true);
  g.undotted_weights = spinor_weights(false);
  const Scalar s2 = Scalar::sqrt2();
  const State e_phi = State::exp(kPhiV);
  for (int mu = 1; mu <= 10; ++mu) {
    Matrix m = zeros(32, 32);
    const State& pt = reg.P_tilde(mu);
    const State pplus = va.mode(reg.psi(mu), -1, e_phi);
    for (int a = 0; a < 16; ++a) {
      State x = va.mode(pt, 0, reg.S_dot(a));
      State rebuilt;
      for (int b = 0; b < 16; ++b) {
        Scalar c = coefficient_on(x, reg.S(b));
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(16 + b)] = s2 * c;
        rebuilt += c * reg.S(b);
      }
      if (!(rebuilt == x)) throw std::logic_error("Ptilde_0 S_dot leaves the spinor span");
      State y = va.mode(pplus, -2, reg.S(a));
      rebuilt = State();
      for (int b = 0; b < 16; ++b) {
        Scalar c = coefficient_on(y, reg.S_dot(b));
        m[static_cast<std::size_t>(16 + a)][static_cast<std::size_t>(b)] = s2 * c;
        rebuilt += c * reg.S_dot(b);
      }
      if (!(rebuilt == y)) throw std::logic_error("(psi e^phi)_{-2} S leaves the conjugate spinor span");
    }
    g.gamma.push_back(std::move(m));
  }

  const State e_m2phi = State::exp(-2 * kPhiV);
  g.c = zeros(32, 32);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      State x = va.mode(reg.S(a), 1, reg.S_dot(b));
      Scalar cx = coefficient_on(x, e_m2phi);
      if (!(cx * e_m2phi == x)) throw std::logic_error("S_1 S_dot is not a multiple of e^{-2 phi}");
      g.c[static_cast<std::size_t>(16 + a)][static_cast<std::size_t>(b)] = cx;
      State y = va.mode(reg.S_dot(a), 1, reg.S(b));
      Scalar cy = coefficient_on(y, e_m2phi);
      if (!(cy * e_m2phi == y)) throw std::logic_error("S_dot_1 S is not a multiple of e^{-2 phi}");
      g.c[static_cast<std::size_t>(a)][static_cast<std::size_t>(16 + b)] = cy;
    }

  const Matrix id = mat_identity(32);
  g.clifford = true;
  for (int mu = 1; mu <= 10; ++mu)
    for (int nu = mu; nu <= 10; ++nu) {
      Matrix a = mat_mul(g.gamma[mu - 1], g.gamma[nu - 1]);
      Matrix b = mat_mul(g.gamma[nu - 1], g.gamma[mu - 1]);
      Scalar expect = mu == nu ? Scalar(2 * metric_g(mu)) : Scalar();
      for (std::size_t i = 0; i < 32; ++i)
        for (std::size_t j = 0; j < 32; ++j)
          if (!(a[i][j] + b[i][j] == expect * id[i][j])) g.clifford = false;
    }

  g.gamma11 = mat_identity(32);
  for (const auto& m : g.gamma) g.gamma11 = mat_mul(g.gamma11, m);
  g.gamma11_diagonal = true;
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j) {
      const Scalar& x = g.gamma11[i][j];
      bool okx = i == j ? (x == Scalar(1) || x == Scalar(-1)) : x.is_zero();
      if (!okx) g.gamma11_diagonal = false;
    }
  for (const auto& m : g.gamma) {
    Matrix a = mat_mul(g.gamma11, m), b = mat_mul(m, g.gamma11);
    for (std::size_t i = 0; i < 32; ++i)
      for (std::size_t j = 0; j < 32; ++j)
        if (!(a[i][j] + b[i][j]).is_zero()) g.gamma11_diagonal = false;
  }

  g.c_antisymmetric = true;
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j)
      if (!(g.c[i][j] + g.c[j][i]).is_zero()) g.c_antisymmetric = false;
  g.c_invertible = mat_rank(g.c) == 32;
  g.c_conjugation = g.gamma_c_symmetric = g.c_invertible;
  if (g.c_invertible) {
    Matrix ci = mat_inverse(g.c);
    for (const auto& m : g.gamma) {
      if (!(mat_mul(ci, mat_mul(m, g.c)) == neg_transpose(m))) g.c_conjugation = false;
      Matrix gc = mat_mul(m, g.c);
      if (!(gc == mat_transpose(gc))) g.gamma_c_symmetric = false;
    }
  }

  g.susy = true;
  for (int a = 0; a < 16 && g.susy; ++a)
    for (int b = 0; b < 16; ++b) {
      State lhs = va.mode(reg.S_dot(a), 0, reg.S_dot(b));
      State rhs;
      for (int mu = 1; mu <= 10; ++mu) {
        Matrix gc = mat_mul(g.gamma[mu - 1], g.c);
        rhs += (Scalar::inv_sqrt2() * Scalar(metric_g(mu)) * gc[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) *
               reg.P_tilde(mu);
      }
      if (!(lhs == rhs)) {
        g.susy = false;
        break;
      }
    }
  return g;
}

Matrix dirac_block(const GammaData& g, const Vec& alpha) {
  Matrix d = zeros(16, 16);
  for (int mu = 1; mu <= 10; ++mu) {
    Scalar a = Scalar::from_rational(alpha.at(mu - 1));
    if (a.is_zero()) continue;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) d[i][j] += a * g.gamma[static_cast<std::size_t>(mu - 1)][i][16 + j];
  }
  return d;
}

Matrix dirac_block_undotted(const GammaData& g, const Vec& alpha) {
  Matrix d = zeros(16, 16);
  for (int mu = 1; mu <= 10; ++mu) {
    Scalar a = Scalar::from_rational(alpha.at(mu - 1));
    if (a.is_zero()) continue;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) d[i][j] += a * g.gamma[static_cast<std::size_t>(mu - 1)][16 + i][j];
  }
  return d;
}

// ---- massless states ----

MasslessReport massless_checks(Brst& brst, const GammaData& g, const Vec& alpha) {
  if (alpha.is_zero() || ip4(alpha, alpha) != 0) throw std::invalid_argument("massless_checks: alpha must be null and nonzero");
  const FieldRegistry& reg = brst.registry();
  VertexAlgebra& va = brst.algebra();
  auto M = [&](const State& a, int n, const State& b) { return va.mode(a, n, b); };
  MasslessReport rep;
  const State ea = State::exp(alpha);
  const State& c = reg.get("c");
  const State c_ea = M(c, -1, ea);

  rep.phi_identity = true;
  for (int a = 0; a < 16; ++a) {
    State x = va.mode(State::exp(kPhiV), Half::twice(-5), va.mode(State::exp(-kPhiV), Half::twice(-1), reg.S_dot(a)));
    if (!(x == Scalar(-1) * reg.S_dot(a))) rep.phi_identity = false;
  }

  // |xi, alpha> with xi given by lower components xi_mu
  std::vector<State> vecs;
  MonomialIndex idx;
  std::vector<SparseVec> images;
  for (int mu = 1; mu <= 10; ++mu) {
    vecs.push_back(M(reg.psi(mu), -1, M(State::exp(-kPhiV), -1, c_ea)));
    images.push_back(idx.coords(brst.apply_q(vecs.back())));
  }
  auto ker = kernel_of(images);
  rep.vector_kernel_dim = ker.size();
  rep.vector_kernel_is_transverse = true;
  for (const auto& k : ker) {
    Scalar s;
    for (const auto& [i, x] : k) s += x * Scalar(metric_g(i + 1)) * Scalar::from_rational(alpha.at(i));
    if (!s.is_zero()) rep.vector_kernel_is_transverse = false;
  }
  State longitudinal;
  for (int mu = 1; mu <= 10; ++mu) longitudinal += Scalar::from_rational(alpha.at(mu - 1)) * vecs[static_cast<std::size_t>(mu - 1)];

  ComplexSlice vec_slice(brst, alpha, Rational(-1), 1, 1);
  rep.longitudinal_exact = vec_slice.is_exact(1, longitudinal);
  State dxi = va.derivation(reg.get("xi"));
  State w = M(State::exp(-2 * kPhiV), -1, M(dxi, -1, c_ea));
  State qw = brst.apply_q(w);
  if (!longitudinal.is_zero()) {
    const auto& [m0, c0] = *longitudinal.terms().begin();
    Scalar s = qw.coeff(m0) / c0;
    if (qw == s * longitudinal && !s.is_zero()) rep.exactness_scalar = s;
  }

  // picture -1/2: u_b S_dot^b_{-1} c_{-1} e^alpha closed iff u^T D = 0
  Matrix d = dirac_block(g, alpha);
  rep.dirac_rank = mat_rank(d);
  rep.dirac_kernel_dim = 16 - rep.dirac_rank;
  std::vector<SparseVec> dimg;
  MonomialIndex idx2;
  for (int b = 0; b < 16; ++b) dimg.push_back(idx2.coords(brst.apply_q(M(reg.S_dot(b), -1, c_ea))));
  auto dker = kernel_of(dimg);
  auto dirac_ker = kernel_of(dense_rows(d));  // u with sum_b u_b d[b][.] = 0
  rep.dotted_closed_iff_dirac = dker.size() == dirac_ker.size() && same_span(dker, dirac_ker);

  // picture -3/2: u_b S^b_{-1} c_{-1} e^alpha exact iff u^T D' = 0
  ComplexSlice sl(brst, alpha, Rational(-3, 2), 1, 1);
  std::vector<SparseVec> classes;
  bool all_closed = true;
  for (int b = 0; b < 16; ++b) {
    auto cc = sl.class_coords(1, M(reg.S(b), -1, c_ea));
    if (!cc) {
      all_closed = false;
      break;
    }
    SparseVec v;
    for (std::size_t k = 0; k < cc->size(); ++k)
      if (!(*cc)[k].is_zero()) v.emplace_back(static_cast<int>(k), (*cc)[k]);
    classes.push_back(std::move(v));
  }
  Matrix du = dirac_block_undotted(g, alpha);
  if (all_closed) {
    auto exact = kernel_of(classes);
    auto dirac_u = kernel_of(dense_rows(du));
    rep.undotted_exact_iff_dirac = same_span(exact, dirac_u) && exact.size() == dirac_u.size();
  }

  // X_{-1} u_b S^b_{-1} e^alpha_{-1} c = (1/sqrt2) alpha_mu G^{mu b}_g S_dot^g_{-1} c_{-1} e^alpha
  rep.x_gamma_formula = true;
  for (int b = 0; b < 16; ++b) {
    State lhs = brst.picture_change(M(reg.S(b), -1, M(ea, -1, c)));
    State rhs;
    for (int gi = 0; gi < 16; ++gi) {
      const Scalar& x = du[static_cast<std::size_t>(b)][static_cast<std::size_t>(gi)];
      if (!x.is_zero()) rhs += (Scalar::inv_sqrt2() * x) * M(reg.S_dot(gi), -1, c_ea);
    }
    if (!(lhs == rhs)) rep.x_gamma_formula = false;
  }
  return rep;
}

// ---- picture changing on cohomology ----

PictureIsoReport picture_iso_check(Brst& brst, const Vec& alpha, const Rational& picture, int ghost, bool with_ptilde) {
  PictureIsoReport rep;
  rep.alpha = alpha;
  rep.picture = picture;
  rep.ghost = ghost;
  ComplexSlice src(brst, alpha, picture, ghost, ghost);
  ComplexSlice dst(brst, alpha, picture + 1, ghost, ghost);
  const auto& reps = src.representatives(ghost);
  rep.dim_source = reps.size();
  rep.dim_target = dst.dim_h(ghost);
  std::vector<SparseVec> rows;
  std::vector<State> images;
  for (const State& r : reps) {
    State x = brst.picture_change(r);
    auto cc = dst.class_coords(ghost, x);
    if (!cc) throw std::logic_error("picture_iso_check: X_{-1} image is not a closed element of the target sector");
    SparseVec v;
    for (std::size_t k = 0; k < cc->size(); ++k)
      if (!(*cc)[k].is_zero()) v.emplace_back(static_cast<int>(k), (*cc)[k]);
    rows.push_back(std::move(v));
    images.push_back(std::move(x));
  }
  rep.rank = rank_of(rows);
  rep.bijective = rep.rank == rep.dim_source && rep.rank == rep.dim_target;
  rep.image_zero = rep.rank == 0;

  rep.ptilde_x_scalar.assign(10, std::nullopt);
  if (with_ptilde && rep.dim_source > 0) {
    rep.ptilde_x_is_scalar = true;
    VertexAlgebra& va = brst.algebra();
    for (int mu = 1; mu <= 10; ++mu) {
      Matrix m = zeros(rep.dim_source, rep.dim_source);
      bool closed = true;
      for (std::size_t i = 0; i < images.size() && closed; ++i) {
        auto cc = src.class_coords(ghost, va.mode(brst.registry().P_tilde(mu), 0, images[i]));
        if (!cc) {
          closed = false;
          break;
        }
        for (std::size_t k = 0; k < cc->size(); ++k) m[k][i] = (*cc)[k];
      }
      Scalar s;
      if (closed && is_identity_multiple(m, s)) rep.ptilde_x_scalar[static_cast<std::size_t>(mu - 1)] = s;
      else rep.ptilde_x_is_scalar = false;
    }
  }
  return rep;
}

Matrix induced_form(SmallSpace& small, const std::vector<State>& left, const std::vector<State>& right) {
  Matrix m = zeros(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) m[i][j] = small.pairing_c(left[i], right[j]);
  return m;
}

}  // namespace svoa
