#include "svoa/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svoa {

namespace {

int mod8(long v) { return static_cast<int>(((v % 8) + 8) % 8); }

std::int8_t checked8(int v) {
  if (v < -128 || v > 127) throw std::overflow_error("lattice coordinate out of range");
  return static_cast<std::int8_t>(v);
}

// Rows are the second argument, columns the first; 'y' and 'Y' stand for y and -y.
constexpr const char* kEtaRows[8] = {
    "+ + + + + + + +",  // (0,0)
    "+ - y Y - + Y y",  // (V,0)
    "+ Y - y - y + Y",  // (S,0)
    "+ y Y - + y Y -",  // (C,0)
    "+ - - + - + + -",  // (0,1)
    "+ + Y Y + + Y Y",  // (V,1)
    "+ y + y + y + y",  // (S,1)
    "+ Y y - - y Y +",  // (C,1)
};

const char* kPsiPhiNames[4] = {"0", "V", "S", "C"};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular lattice basis");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

Vec Vec::unit(int i, int twice) {
  Vec v;
  v.d[i] = checked8(twice);
  return v;
}

Vec Vec::from_twice(const std::array<int, kDim>& t) {
  Vec v;
  for (int i = 0; i < kDim; ++i) v.d[i] = checked8(t[i]);
  return v;
}

bool Vec::is_zero() const {
  for (auto x : d)
    if (x != 0) return false;
  return true;
}

Vec Vec::operator-() const {
  Vec r;
  for (int i = 0; i < kDim; ++i) r.d[i] = checked8(-d[i]);
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  for (int i = 0; i < kDim; ++i) d[i] = checked8(d[i] + o.d[i]);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (int i = 0; i < kDim; ++i) d[i] = checked8(d[i] - o.d[i]);
  return *this;
}

Vec operator*(int k, const Vec& v) {
  Vec r;
  for (int i = 0; i < kDim; ++i) r.d[i] = checked8(k * v.d[i]);
  return r;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < kDim; ++i) {
    if (i) os << ',';
    if (d[i] % 2 == 0)
      os << d[i] / 2;
    else
      os << int(d[i]) << "/2";
  }
  os << ']';
  return os.str();
}

int ip4(const Vec& a, const Vec& b) {
  int s = 0;
  for (int i = 0; i < kDim; ++i) s += kMetric[i] * a.d[i] * b.d[i];
  return s;
}

Rational ip(const Vec& a, const Vec& b) {
  return make_rational(ip4(a, b), 4);
}

int ip2(const Vec& a, const Vec& b) {
  int s = ip4(a, b);
  if (s % 2 != 0) throw std::logic_error("inner product not in (1/2)Z");
  return s / 2;
}

std::string CosetClass::str() const {
  return std::string("(") + kPsiPhiNames[psi_phi] + "," + std::to_string(chi_sigma) + ")";
}

int CosetClass::gso_parity() const {
  if (psi_phi == 0) return chi_sigma;
  if (psi_phi == 2) return 1 - chi_sigma;
  return -1;
}

Vec coset_representative(CosetClass c) {
  Vec v;
  switch (c.psi_phi) {
    case 1:
      v.d[kPhi] = 2;
      break;
    case 2:
      for (int i = kPsi0; i <= kPhi; ++i) v.d[i] = 1;
      break;
    case 3:
      for (int i = kPsi0; i < kPhi; ++i) v.d[i] = 1;
      v.d[kPhi] = -1;
      break;
    default:
      break;
  }
  if (c.chi_sigma) v.d[kSigma] = 2;
  return v;
}

int delta2(CosetClass a, CosetClass b) {
  int p = ip4(coset_representative(a), coset_representative(b));
  // twice Delta = -2(da, db) = -p/2 mod 2
  return (((-p / 2) % 2) + 2) % 2;
}

SuperLattice SuperLattice::build(const std::vector<Vec>& lx_basis, int y) {
  if (y != 1 && y != -1) throw std::invalid_argument("y must be +1 or -1");
  if (lx_basis.size() != 10) throw std::invalid_argument("L^X must have rank 10");
  SuperLattice L;
  L.y_ = y;
  for (const auto& b : lx_basis) {
    for (int i = 10; i < kDim; ++i)
      if (b.d[i] != 0) throw std::invalid_argument("L^X basis vector leaves the L^X directions");
    L.basis_.push_back(b);
  }
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      int p = ip4(lx_basis[i], lx_basis[j]);
      if (p % 4 != 0) throw std::invalid_argument("L^X is not integral");
      if (i == j && p % 8 != 0) throw std::invalid_argument("L^X is not even");
    }
  }
  std::vector<std::vector<Rational>> m(10, std::vector<Rational>(10));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) m[i][j] = make_rational(lx_basis[i].d[j], 2);
  auto inv = invert(m);  // throws when singular
  mpz_class den = 1;
  for (const auto& row : inv)
    for (const auto& x : row) {
      Rational h = x / 2;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), h.get_den_mpz_t());
    }
  if (!den.fits_slong_p()) throw std::invalid_argument("L^X basis too large");
  L.lx_den_ = den.get_si();
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      Rational h = inv[i][j] / 2 * den;
      // coefficient of basis vector j picks column j of the inverse
      L.lx_inv_[j][i] = mpz_class(h.get_num()).get_si();
    }
  }
  for (int i = kPsi0; i < kPhi; ++i) L.basis_.push_back(Vec::unit(i));
  {
    Vec s6;
    for (int i = kPsi0; i <= kPhi; ++i) s6.d[i] = 1;
    L.basis_.push_back(s6);
  }
  L.basis_.push_back(Vec::unit(kChi));
  L.basis_.push_back(Vec::unit(kSigma));

  for (int r = 0; r < 8; ++r) {
    std::istringstream is(kEtaRows[r]);
    for (int c = 0; c < 8; ++c) {
      char ch;
      is >> ch;
      int e = 0;
      if (ch == '-') e = 4;
      if (ch == 'y') e = y > 0 ? 0 : 4;
      if (ch == 'Y') e = y > 0 ? 4 : 0;
      L.eta_[c][r] = e;  // column is the first argument
    }
  }

  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (i < j) {
        L.seed_[i][j] = 0;
      } else if (i == j) {
        int half_norm = ip4(L.basis_[i], L.basis_[i]) / 8;
        L.seed_[i][i] = (i < 10 && (half_norm % 2 != 0)) ? 4 : 0;
      }
    }
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < i; ++j) L.seed_[i][j] = mod8(L.b_exp(L.basis_[i], L.basis_[j]) + L.seed_[j][i]);
  return L;
}

SuperLattice SuperLattice::preset(std::string_view name, int y) {
  if (name != "II9,1") throw std::invalid_argument("unknown lattice preset: " + std::string(name));
  std::vector<Vec> b;
  for (int i = 0; i < 8; ++i) {
    Vec v;
    v.d[i] = 2;
    v.d[i + 1] = -2;
    b.push_back(v);
  }
  Vec v;
  v.d[7] = 2;
  v.d[8] = 2;
  b.push_back(v);
  Vec w;
  for (int i = 0; i < 10; ++i) w.d[i] = 1;
  b.push_back(w);
  return build(b, y);
}

std::vector<std::vector<Rational>> SuperLattice::gram() const {
  std::vector<std::vector<Rational>> g(kDim, std::vector<Rational>(kDim));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) g[i][j] = ip(basis_[i], basis_[j]);
  return g;
}

std::vector<std::vector<Rational>> SuperLattice::lx_gram() const {
  std::vector<std::vector<Rational>> g(10, std::vector<Rational>(10));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) g[i][j] = ip(basis_[i], basis_[j]);
  return g;
}

bool SuperLattice::lx_contains(const Vec& v) const {
  for (int j = 0; j < 10; ++j) {
    long s = 0;
    for (int i = 0; i < 10; ++i) s += lx_inv_[j][i] * v.d[i];
    if (s % lx_den_ != 0) return false;
  }
  return true;
}

bool SuperLattice::contains(const Vec& v) const {
  if (!lx_contains(v)) return false;
  int par = v.d[kPsi0] & 1;
  for (int i = kPsi0; i <= kPhi; ++i)
    if ((v.d[i] & 1) != par) return false;
  return (v.d[kChi] & 1) == 0 && (v.d[kSigma] & 1) == 0;
}

CosetClass SuperLattice::coset_class(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector not in L: " + v.str());
  CosetClass c;
  if ((v.d[kPsi0] & 1) == 0) {
    int s = 0;
    for (int i = kPsi0; i <= kPhi; ++i) s += v.d[i] / 2;
    c.psi_phi = (s & 1) ? 1 : 0;
  } else {
    int s = 0;
    for (int i = kPsi0; i <= kPhi; ++i) s += (v.d[i] - 1) / 2;
    c.psi_phi = (s & 1) ? 3 : 2;
  }
  c.chi_sigma = ((v.d[kChi] / 2 + v.d[kSigma] / 2) & 1) ? 1 : 0;
  return c;
}

std::array<long, kDim> SuperLattice::basis_coords(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector not in L: " + v.str());
  std::array<long, kDim> c{};
  for (int j = 0; j < 10; ++j) {
    long s = 0;
    for (int i = 0; i < 10; ++i) s += lx_inv_[j][i] * v.d[i];
    c[j] = s / lx_den_;
  }
  for (int i = 0; i < 5; ++i) c[10 + i] = (v.d[kPsi0 + i] - v.d[kPhi]) / 2;
  c[15] = v.d[kPhi];
  c[16] = v.d[kChi] / 2;
  c[17] = v.d[kSigma] / 2;
  return c;
}

int SuperLattice::b_exp(const Vec& a, const Vec& b) const {
  return mod8(-ip4(a, b) + eta_exp(coset_class(a), coset_class(b)));
}

int SuperLattice::eps_exp(const Vec& a, const Vec& b) const {
  auto ca = basis_coords(a);
  auto cb = basis_coords(b);
  long s = 0;
  for (int i = 0; i < kDim; ++i) {
    if (ca[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < kDim; ++j) row += seed_[i][j] * cb[j];
    s += ca[i] * row;
  }
  return mod8(s);
}

std::string SuperLattice::eta_grid() const {
  std::ostringstream os;
  os << "      ";
  for (int c = 0; c < 8; ++c) os << ' ' << CosetClass::from_index(c).str();
  os << '\n';
  for (int r = 0; r < 8; ++r) {
    os << CosetClass::from_index(r).str() << ' ';
    for (int c = 0; c < 8; ++c) {
      int e = eta_[c][r];
      os << "    " << (e == 0 ? " 1" : "-1") << ' ';
    }
    os << '\n';
  }
  return os.str();
}

Vec background_charge() {
  Vec r;
  r.d[kPhi] = -2;
  r.d[kChi] = 1;
  r.d[kSigma] = 3;
  return r;
}

}  // namespace svoa
