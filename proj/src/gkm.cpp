#include "svoa/gkm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace svoa {

// ---- q-series identities ----

TraceIdentityReport trace_identity_check(int order) {
  if (order < 1) throw std::invalid_argument("trace_identity_check: order must be >= 1");
  TraceIdentityReport rep;
  rep.order = order;

  // Number of lambda in Z^5 by (lambda^2, parity of the coordinate sum).
  const int nmax = 2 * order;
  const int k = static_cast<int>(std::sqrt(static_cast<double>(nmax))) + 1;
  std::vector<std::array<long, 2>> count(static_cast<std::size_t>(nmax + 1), {0, 0});
  std::array<int, 5> lam{};
  lam.fill(-k);
  while (true) {
    int n2 = 0, s = 0;
    for (int x : lam) {
      n2 += x * x;
      s += x;
    }
    if (n2 <= nmax) ++count[static_cast<std::size_t>(n2)][static_cast<std::size_t>(s & 1)];
    int i = 0;
    while (i < 5 && lam[static_cast<std::size_t>(i)] == k) lam[static_cast<std::size_t>(i++)] = -k;
    if (i == 5) break;
    ++lam[static_cast<std::size_t>(i)];
  }

  // exponent 2E = lambda^2 - p^2 + m(m+1) + 1 with m(m+1) - p^2 >= |p|
  QSeries lat(order);
  for (int p = -nmax; p <= nmax; ++p) {
    int parity = ((p + 1) % 2 + 2) % 2;  // sum lambda + (-p-1) even
    for (int m = std::abs(p);; ++m) {
      int base = -p * p + m * (m + 1) + 1;
      if (base > 2 * order) break;
      for (int n2 = 0; n2 + base <= 2 * order; ++n2) {
        long c = count[static_cast<std::size_t>(n2)][static_cast<std::size_t>(parity)];
        if (c == 0) continue;
        int twice_e = n2 + base;
        if (twice_e % 2 != 0) throw std::logic_error("trace identity: odd exponent");
        lat[twice_e / 2] += (m % 2 == 0 ? c : -c);
        rep.lattice_terms += static_cast<std::size_t>(c);
      }
    }
  }
  rep.lattice_side = lat;
  QSeries phi = euler_phi(order);
  rep.closed_form = Rational(8) * QSeries::monomial(order, 1) * phi.dilate(2).pow(8) * phi.inverse();
  rep.equal = rep.lattice_side == rep.closed_form;
  return rep;
}

AsymptoticReport asymptotic_ratio(int n) {
  if (n < 1) throw std::invalid_argument("asymptotic_ratio: n must be >= 1");
  AsymptoticReport rep;
  rep.n = n;
  rep.c = c_coefficient(n);
  const long double pi = std::numbers::pi_v<long double>;
  const long double nn = n;
  const long double log_c = std::log(static_cast<long double>(rep.c.get_d()));
  const long double log_shape = -2.75L * std::log(nn) + 2 * pi * std::sqrt(2 * nn);
  rep.ratio_quoted = static_cast<double>(std::exp(log_c - log_shape - std::log(0.5L)));
  rep.ratio_modular = static_cast<double>(std::exp(log_c - log_shape + 3.75L * std::log(2.0L)));
  // F(e^{-s}) ~ A s^4 e^{C/s} with A = (1/2)(2 pi)^{-4}, C = 2 pi^2
  const long double big_c = 2 * pi * pi;
  const long double a = 0.5L / std::pow(2 * pi, 4.0L);
  const long double bessel = std::cyl_bessel_i(5.0L, 2 * std::sqrt(big_c * nn));
  rep.ratio_bessel = static_cast<double>(std::exp(log_c - std::log(a * std::pow(big_c / nn, 2.5L) * bessel)));
  return rep;
}

// ---- lattice helpers ----

namespace {

const SuperLattice& ii91() {
  static const SuperLattice L = SuperLattice::preset("II9,1");
  return L;
}

using Coords = std::array<long, 10>;  // doubled coordinates

Vec to_vec(const Coords& c) {
  Vec v;
  for (int i = 0; i < 10; ++i) {
    if (c[static_cast<std::size_t>(i)] < -127 || c[static_cast<std::size_t>(i)] > 127)
      throw std::overflow_error("lattice vector out of the stored coordinate range");
    v.d[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(c[static_cast<std::size_t>(i)]);
  }
  return v;
}

Coords to_coords(const Vec& v) {
  Coords c{};
  for (int i = 0; i < 10; ++i) c[static_cast<std::size_t>(i)] = v.d[static_cast<std::size_t>(i)];
  return c;
}

// 4 (a, b) for doubled coordinates
long dot4(const Coords& a, const Coords& b) {
  long s = 0;
  for (int i = 0; i < 10; ++i) s += kMetric[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  return s;
}

void check_reference(const Vec& r) {
  for (int i = 10; i < kDim; ++i)
    if (r.d[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("reference vector must lie in L^X");
  if (!ii91().lx_contains(r)) throw std::invalid_argument("reference vector is not in II9,1: " + lx_str(r));
  if (lx_norm(r) >= 0) throw std::invalid_argument("reference vector must be timelike: " + lx_str(r));
}

bool is_primitive(const Vec& a, int h) {
  for (int k = 2; k <= h; ++k) {
    if (h % k != 0) continue;
    bool divisible = true;
    Vec b;
    for (int i = 0; i < 10 && divisible; ++i) {
      int x = a.d[static_cast<std::size_t>(i)];
      if (x % k != 0) divisible = false;
      else b.d[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x / k);
    }
    if (divisible && ii91().lx_contains(b)) return false;
  }
  return true;
}

bool height_less(const Root& x, const Root& y) {
  return std::tie(x.height, x.alpha) < std::tie(y.height, y.alpha);
}

}  // namespace

Vec default_reference_vector() {
  Vec r;
  r.d[0] = 2;
  r.d[1] = 2;
  r.d[9] = 4;
  return r;
}

Vec parse_lx_vector(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 10) throw std::invalid_argument("expected 10 comma separated coordinates: " + text);
  Vec v;
  for (int i = 0; i < 10; ++i) {
    Rational q;
    try {
      q = Rational(parts[static_cast<std::size_t>(i)]);
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad coordinate: " + parts[static_cast<std::size_t>(i)]);
    }
    Rational t = 2 * q;
    if (t.get_den() != 1 || abs(t) > 127) throw std::invalid_argument("coordinate must be in (1/2)Z: " + parts[static_cast<std::size_t>(i)]);
    v.d[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(t.get_num().get_si());
  }
  return v;
}

std::string lx_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 10; ++i) {
    if (i) os << ",";
    int t = v.d[static_cast<std::size_t>(i)];
    if (t % 2 == 0) os << t / 2;
    else os << t << "/2";
  }
  os << ")";
  return os.str();
}

int lx_norm(const Vec& v) {
  int f = ip4(v, v);
  if (f % 4 != 0) throw std::logic_error("non-integral norm");
  return f / 4;
}

int height(const Vec& r, const Vec& a) {
  int f = ip4(r, a);
  if (f % 4 != 0) throw std::logic_error("non-integral height");
  return -f / 4;
}

// ---- GradedSeries ----

GradedSeries::GradedSeries(const Vec& r, int max_height)
    : r_(r), n_(max_height), by_height_(static_cast<std::size_t>(max_height + 1)) {
  if (max_height < 0) throw std::invalid_argument("GradedSeries: negative height bound");
}

GradedSeries GradedSeries::one(const Vec& r, int max_height) {
  GradedSeries s(r, max_height);
  s.add(Vec{}, 1);
  return s;
}

void GradedSeries::add(const Vec& a, const Rational& c) {
  int h = height_of(a);
  if (h < 0 || h > n_ || c == 0) return;
  auto& m = by_height_[static_cast<std::size_t>(h)];
  auto [it, inserted] = m.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Rational GradedSeries::coefficient(const Vec& a) const {
  int h = height_of(a);
  if (h < 0 || h > n_) return 0;
  const auto& m = by_height_[static_cast<std::size_t>(h)];
  auto it = m.find(a);
  return it == m.end() ? Rational(0) : it->second;
}

void GradedSeries::multiply_by_factor(const Vec& alpha, const std::vector<Rational>& b) {
  const int ha = height_of(alpha);
  if (ha <= 0) throw std::invalid_argument("multiply_by_factor: alpha must have positive height");
  // Sources by decreasing height, so every source still holds its old value.
  for (int h = n_ - ha; h >= 0; --h) {
    const auto& src = by_height_[static_cast<std::size_t>(h)];
    if (src.empty()) continue;
    std::vector<std::pair<Vec, Rational>> items(src.begin(), src.end());
    for (const auto& [lam, c] : items) {
      Vec t = lam;
      for (int k = 1; k < static_cast<int>(b.size()) && h + k * ha <= n_; ++k) {
        t += alpha;
        if (b[static_cast<std::size_t>(k)] != 0) add(t, b[static_cast<std::size_t>(k)] * c);
      }
    }
  }
}

GradedSeries operator*(const GradedSeries& x, const GradedSeries& y) {
  if (x.r_ != y.r_) throw std::invalid_argument("GradedSeries: reference vectors differ");
  GradedSeries out(x.r_, std::min(x.n_, y.n_));
  for (int hx = 0; hx <= out.n_; ++hx)
    for (const auto& [a, ca] : x.by_height_[static_cast<std::size_t>(hx)])
      for (int hy = 0; hx + hy <= out.n_; ++hy)
        for (const auto& [b, cb] : y.by_height_[static_cast<std::size_t>(hy)]) out.add(a + b, ca * cb);
  return out;
}

GradedSeries operator+(const GradedSeries& x, const GradedSeries& y) {
  if (x.r_ != y.r_) throw std::invalid_argument("GradedSeries: reference vectors differ");
  GradedSeries out(x.r_, std::min(x.n_, y.n_));
  for (const auto* s : {&x, &y})
    for (int h = 0; h <= out.n_; ++h)
      for (const auto& [a, c] : s->by_height_[static_cast<std::size_t>(h)]) out.add(a, c);
  return out;
}

bool operator==(const GradedSeries& x, const GradedSeries& y) {
  return x.r_ == y.r_ && x.n_ == y.n_ && x.terms() == y.terms();
}

std::vector<std::pair<Vec, Rational>> GradedSeries::terms() const {
  std::vector<std::pair<Vec, Rational>> out;
  for (const auto& m : by_height_) {
    std::vector<std::pair<Vec, Rational>> level(m.begin(), m.end());
    std::sort(level.begin(), level.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    for (auto& t : level) out.push_back(std::move(t));
  }
  return out;
}

std::size_t GradedSeries::size() const {
  std::size_t n = 0;
  for (const auto& m : by_height_) n += m.size();
  return n;
}

// ---- roots ----

std::size_t RootTable::count_null_primitive(int h) const {
  return static_cast<std::size_t>(std::count_if(simple.begin(), simple.end(),
                                                [h](const Root& x) { return x.height == h && x.primitive; }));
}

namespace {

// A lattice vector v of height g (the gcd of all heights) and a basis of
// the orthogonal complement K = r^perp in II_{9,1}, LLL reduced.
struct AdaptedBasis {
  Coords v{};
  int g = 1;
  std::vector<Coords> w;
};

void lll_reduce(std::vector<Coords>& b) {
  const std::size_t n = b.size();
  auto gram = [&](std::size_t i, std::size_t j) { return static_cast<double>(dot4(b[i], b[j])) / 4.0; };
  std::vector<std::vector<double>> mu(n, std::vector<double>(n));
  std::vector<double> bb(n);
  auto gso = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        double s = gram(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bb[k];
        mu[i][j] = s / bb[j];
      }
      double s = gram(i, i);
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bb[k];
      bb[i] = s;
    }
  };
  gso();
  std::size_t k = 1;
  int guard = 0;
  while (k < n && ++guard < 100000) {
    for (std::size_t j = k; j-- > 0;) {
      long q = std::lround(mu[k][j]);
      if (q != 0) {
        for (int c = 0; c < 10; ++c) b[k][static_cast<std::size_t>(c)] -= q * b[j][static_cast<std::size_t>(c)];
        gso();
      }
    }
    if (bb[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bb[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

AdaptedBasis adapted_basis(const Vec& r) {
  const auto& basis = ii91().basis();
  std::vector<Coords> cols;
  std::vector<long> f;
  Coords rc = to_coords(r);
  for (int j = 0; j < 10; ++j) {
    cols.push_back(to_coords(basis[static_cast<std::size_t>(j)]));
    f.push_back(-dot4(rc, cols.back()) / 4);  // heights of the basis vectors
  }
  // Unimodular column operations until one nonzero height remains.
  while (true) {
    std::size_t piv = 10;
    for (std::size_t j = 0; j < 10; ++j)
      if (f[j] != 0 && (piv == 10 || std::abs(f[j]) < std::abs(f[piv]))) piv = j;
    bool done = true;
    for (std::size_t j = 0; j < 10; ++j) {
      if (j == piv || f[j] == 0) continue;
      long q = f[j] / f[piv];
      for (int c = 0; c < 10; ++c) cols[j][static_cast<std::size_t>(c)] -= q * cols[piv][static_cast<std::size_t>(c)];
      f[j] -= q * f[piv];
      if (f[j] != 0) done = false;
    }
    if (done) {
      std::swap(cols[0], cols[piv]);
      std::swap(f[0], f[piv]);
      break;
    }
  }
  AdaptedBasis ab;
  ab.v = cols[0];
  ab.g = static_cast<int>(f[0]);
  if (ab.g < 0) {
    for (auto& x : ab.v) x = -x;
    ab.g = -ab.g;
  }
  ab.w.assign(cols.begin() + 1, cols.end());
  lll_reduce(ab.w);
  return ab;
}

}  // namespace

RootTable enumerate_positive_roots(const Vec& r, int max_height) {
  check_reference(r);
  if (max_height < 1) throw std::invalid_argument("enumerate_positive_roots: height bound must be >= 1");
  RootTable t;
  t.r = r;
  t.max_height = max_height;
  const AdaptedBasis ab = adapted_basis(r);
  const std::size_t n = ab.w.size();
  const long r2 = -lx_norm(r);  // |r^2|

  // Gram of K, and y with v_perp = sum y_k w_k.
  std::vector<std::vector<double>> G(n, std::vector<double>(n));
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) G[i][j] = static_cast<double>(dot4(ab.w[i], ab.w[j])) / 4.0;
    rhs[i] = static_cast<double>(dot4(ab.w[i], ab.v)) / 4.0;
  }
  // Fincke-Pohst coefficients: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double s = G[i][i];
    for (std::size_t k = 0; k < i; ++k) s -= q[k][k] * q[k][i] * q[k][i];
    q[i][i] = s;
    for (std::size_t j = i + 1; j < n; ++j) {
      double u = G[i][j];
      for (std::size_t k = 0; k < i; ++k) u -= q[k][k] * q[k][i] * q[k][j];
      q[i][j] = u / q[i][i];
    }
  }
  // y = G^{-1} rhs via the same factorization: G = U^T D U with U unit upper
  std::vector<double> y(rhs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) y[i] -= q[k][i] * y[k];
  for (std::size_t i = 0; i < n; ++i) y[i] /= q[i][i];
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) y[i] -= q[i][j] * y[j];

  std::vector<long> z(n);
  std::vector<double> x(n);
  for (int j = 1; j * ab.g <= max_height; ++j) {
    const int h = j * ab.g;
    const double bound = static_cast<double>(h) * h / static_cast<double>(r2) * (1 + 1e-9) + 1e-9;
    std::vector<double> center(n);
    for (std::size_t i = 0; i < n; ++i) center[i] = -j * y[i];
    // recursive enumeration, level i from n-1 down to 0
    auto rec = [&](auto&& self, std::size_t level_plus_one, double used) -> void {
      if (level_plus_one == 0) {
        Coords a{};
        for (int c = 0; c < 10; ++c) {
          long s = j * ab.v[static_cast<std::size_t>(c)];
          for (std::size_t k = 0; k < n; ++k) s += z[k] * ab.w[k][static_cast<std::size_t>(c)];
          a[static_cast<std::size_t>(c)] = s;
        }
        Vec av = to_vec(a);
        int nm = lx_norm(av);
        if (nm > 0 || height(r, av) != h) return;
        Root root;
        root.alpha = av;
        root.height = h;
        root.norm = nm;
        root.mult = c_coefficient(-nm / 2);
        t.roots.push_back(std::move(root));
        return;
      }
      const std::size_t i = level_plus_one - 1;
      double tsum = 0;
      for (std::size_t jj = i + 1; jj < n; ++jj) tsum += q[i][jj] * x[jj];
      const double room = bound - used;
      if (room < 0) return;
      const double rad = std::sqrt(room / q[i][i]);
      const double mid = center[i] - tsum;
      const long lo = static_cast<long>(std::ceil(mid - rad - 1e-9));
      const long hi = static_cast<long>(std::floor(mid + rad + 1e-9));
      for (long zi = lo; zi <= hi; ++zi) {
        z[i] = zi;
        x[i] = static_cast<double>(zi) - center[i];
        double d = x[i] + tsum;
        self(self, i, used + q[i][i] * d * d);
      }
    };
    rec(rec, n, 0.0);
  }
  std::sort(t.roots.begin(), t.roots.end(), height_less);
  t.roots.erase(std::unique(t.roots.begin(), t.roots.end(), [](const Root& a, const Root& b) { return a.alpha == b.alpha; }),
                t.roots.end());
  for (auto& root : t.roots) {
    root.primitive = is_primitive(root.alpha, root.height);
    if (root.norm == 0) t.simple.push_back(root);
  }
  return t;
}

std::vector<Vec> box_scan_positive_roots(const Vec& r, int max_height, int margin) {
  check_reference(r);
  const double r2 = -lx_norm(r);
  const double pmax = 2.0 * max_height * max_height / r2;
  std::array<int, 10> bound{};
  for (int i = 0; i < 10; ++i) {
    Vec e = Vec::unit(i);
    double re = -height(r, e);
    double pstar = kMetric[static_cast<std::size_t>(i)] + 2 * re * re / r2;
    bound[static_cast<std::size_t>(i)] = static_cast<int>(std::floor(2 * std::sqrt(pmax * pstar))) + margin;
  }
  std::vector<Vec> out;
  for (int parity = 0; parity < 2; ++parity) {
    std::array<int, 10> lo{}, hi{};
    for (std::size_t i = 0; i < 10; ++i) {
      lo[i] = -bound[i];
      if ((lo[i] & 1) != parity) ++lo[i];
      hi[i] = bound[i];
      if ((hi[i] & 1) != parity) --hi[i];
    }
    Vec v;
    for (std::size_t i = 0; i < 10; ++i) v.d[i] = static_cast<std::int8_t>(lo[i]);
    while (true) {
      if (ii91().lx_contains(v)) {
        int h = height(r, v);
        if (h > 0 && h <= max_height && lx_norm(v) <= 0) out.push_back(v);
      }
      std::size_t i = 0;
      while (i < 10 && v.d[i] + 2 > hi[i]) {
        v.d[i] = static_cast<std::int8_t>(lo[i]);
        ++i;
      }
      if (i == 10) break;
      v.d[i] = static_cast<std::int8_t>(v.d[i] + 2);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return std::make_pair(height(r, a), a) < std::make_pair(height(r, b), b);
  });
  return out;
}

std::vector<Rational> factor_coefficients(const Rational& c, int k_max) {
  // g = ((1-x)/(1+x))^c satisfies (1 - x^2) g' = -2c g
  std::vector<Rational> b(static_cast<std::size_t>(std::max(k_max, 0) + 1));
  b[0] = 1;
  if (k_max >= 1) b[1] = -2 * c;
  for (int k = 1; k + 1 <= k_max; ++k) {
    b[static_cast<std::size_t>(k + 1)] =
        (Rational(k - 1) * b[static_cast<std::size_t>(k - 1)] - 2 * c * b[static_cast<std::size_t>(k)]) / (k + 1);
  }
  return b;
}

DenominatorReport denominator_check(const Vec& r, int max_height) {
  return denominator_check(enumerate_positive_roots(r, max_height));
}

DenominatorReport denominator_check(const RootTable& table) {
  DenominatorReport rep;
  const int N = table.max_height;
  rep.max_height = N;
  rep.roots = table.roots.size();
  GradedSeries lhs = GradedSeries::one(table.r, N);
  for (const Root& root : table.roots) lhs.multiply_by_factor(root.alpha, factor_coefficients(root.mult, N / root.height));

  GradedSeries rhs = GradedSeries::one(table.r, N);
  const QSeries a = a_series(N);
  absl::flat_hash_map<Vec, int> ray_multiple;  // n for n lambda_0
  for (const Root& s : table.simple) {
    if (!s.primitive) continue;
    Vec t;
    for (int n = 1; n * s.height <= N; ++n) {
      t += s.alpha;
      rhs.add(t, a[n]);
      ray_multiple[t] = n;
    }
  }
  rep.lhs_terms = lhs.size();
  rep.rhs_terms = rhs.size();
  rep.ray_values.resize(static_cast<std::size_t>(N));

  std::vector<Vec> keys;
  for (const auto& [v, c] : lhs.terms()) keys.push_back(v);
  for (const auto& [v, c] : rhs.terms()) keys.push_back(v);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Vec& v : keys) {
    Rational l = lhs.coefficient(v), rv = rhs.coefficient(v);
    ++rep.compared;
    if (l != rv) {
      ++rep.mismatches;
      if (rep.first_mismatches.size() < 10) rep.first_mismatches.push_back({v, {l, rv}});
    }
    auto it = ray_multiple.find(v);
    if (it != ray_multiple.end()) {
      auto& vals = rep.ray_values[static_cast<std::size_t>(it->second - 1)];
      if (std::find(vals.begin(), vals.end(), l) == vals.end()) vals.push_back(l);
    } else if (!v.is_zero() && l != 0) {
      ++rep.off_ray_nonzero;
    }
  }
  for (auto& vals : rep.ray_values) std::sort(vals.begin(), vals.end());
  return rep;
}

CartanReport cartan_matrix(const RootTable& table) {
  CartanReport rep;
  for (const Root& s : table.simple) rep.simple_roots.push_back(s.alpha);
  const std::size_t n = rep.simple_roots.size();
  rep.matrix.assign(n, std::vector<int>(n));
  rep.diagonal_zero = rep.off_diagonal_nonpositive = rep.zero_iff_proportional = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& a = rep.simple_roots[i];
      const Vec& b = rep.simple_roots[j];
      int f = ip4(a, b);
      if (f % 4 != 0) throw std::logic_error("non-integral inner product");
      int v = f / 4;
      rep.matrix[i][j] = v;
      if (i == j) {
        rep.diagonal_zero = rep.diagonal_zero && v == 0;
        continue;
      }
      rep.off_diagonal_nonpositive = rep.off_diagonal_nonpositive && v <= 0;
      Coords ca = to_coords(a), cb = to_coords(b);
      const long ha = height(table.r, a), hb = height(table.r, b);
      bool proportional = true;
      for (std::size_t c = 0; c < 10; ++c) proportional = proportional && hb * ca[c] == ha * cb[c];
      rep.zero_iff_proportional = rep.zero_iff_proportional && ((v == 0) == proportional);
    }
  return rep;
}

}  // namespace svoa
