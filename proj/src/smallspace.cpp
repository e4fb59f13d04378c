#include "svoa/smallspace.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace svoa {

namespace {

const Vec kChiV = Vec::unit(kChi), kSigmaV = Vec::unit(kSigma), kPhiV = Vec::unit(kPhi);

// Subsets of {lo, lo+1, ...} with `count` distinct parts summing to `total`,
// parts in increasing order.
void distinct_parts(int lo, int count, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  // the smallest possible sum of `count` parts starting at lo
  for (int p = lo;; ++p) {
    long least = static_cast<long>(count) * p + static_cast<long>(count) * (count - 1) / 2;
    if (least > total) break;
    cur.push_back(p);
    distinct_parts(p + 1, count - 1, total - p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> distinct_parts(int lo, int count, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (total >= 0) distinct_parts(lo, count, total, cur, out);
  return out;
}

// Basis of the kernel of `op` on the given monomials.
std::vector<State> kernel_basis(const std::vector<Monomial>& source, const std::function<State(const State&)>& op) {
  MonomialIndex idx;
  std::vector<SparseVec> images;
  images.reserve(source.size());
  for (const auto& m : source) images.push_back(idx.coords(op(State(m))));
  std::vector<State> out;
  for (const auto& rel : kernel_of(images)) {
    State s;
    for (const auto& [i, c] : rel) s.add(source[static_cast<std::size_t>(i)], c);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Monomial> fock_monomials(int dir, const Vec& mom, int level) {
  std::vector<Monomial> out;
  if (level < 0) return out;
  for (auto& o : oscillator_lists({dir}, level)) out.emplace_back(mom, o);
  return out;
}

}  // namespace

std::string SectorSpec::str() const {
  std::ostringstream os;
  os << "alpha=" << alpha.str() << " p=" << picture.get_str() << " n=" << ghost << " k=" << l0.get_str()
     << (gso ? " gso" : "") << (ker_b1 ? " ker_b1" : "");
  return os.str();
}

int MonomialIndex::index(const Monomial& m) {
  auto [it, fresh] = ids_.try_emplace(m, static_cast<int>(order_.size()));
  if (fresh) order_.push_back(m);
  return it->second;
}

std::optional<int> MonomialIndex::find(const Monomial& m) const {
  auto it = ids_.find(m);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SparseVec MonomialIndex::coords(const State& v) {
  std::map<int, Scalar> m;
  for (const auto& [mono, c] : v.terms()) m[index(mono)] += c;
  return sparse_from_map(m);
}

SparseVec MonomialIndex::coords_existing(const State& v) const {
  std::map<int, Scalar> m;
  for (const auto& [mono, c] : v.terms()) {
    auto i = find(mono);
    if (!i) throw std::out_of_range("state leaves the indexed monomials: " + mono.str());
    m[*i] += c;
  }
  return sparse_from_map(m);
}

State MonomialIndex::state(const SparseVec& v) const {
  State s;
  for (const auto& [i, c] : v) s.add(at(i), c);
  return s;
}

SmallSpace::SmallSpace(const FieldRegistry& reg) : reg_(&reg) {}

bool SmallSpace::contains(const State& v) const {
  return algebra().mode(reg_->get("eta"), 0, v).is_zero();
}

bool SmallSpace::contains_gso(const State& v) const {
  for (const auto& [m, c] : v.terms())
    if (!algebra().lattice().coset_class(m.mom).is_gso()) return false;
  return contains(v);
}

const std::vector<State>& SmallSpace::chi_kernel(int m, int level) {
  auto key = std::make_pair(m, level);
  if (auto it = chi_ker_.find(key); it != chi_ker_.end()) return it->second;
  VertexAlgebra& va = algebra();
  const State& eta = reg_->get("eta");
  auto basis = kernel_basis(fock_monomials(kChi, m * kChiV, level),
                            [&](const State& s) { return va.mode(eta, 0, s); });
  return chi_ker_.emplace(key, std::move(basis)).first->second;
}

const std::vector<State>& SmallSpace::sigma_kernel(int s, int level) {
  auto key = std::make_pair(s, level);
  if (auto it = sigma_ker_.find(key); it != sigma_ker_.end()) return it->second;
  VertexAlgebra& va = algebra();
  const State& b = reg_->get("b");
  auto basis = kernel_basis(fock_monomials(kSigma, s * kSigmaV, level),
                            [&](const State& st) { return va.mode(b, 1, st); });
  return sigma_ker_.emplace(key, std::move(basis)).first->second;
}

std::vector<State> SmallSpace::sigma_fock(int s, int level) const {
  std::vector<State> out;
  for (auto& m : fock_monomials(kSigma, s * kSigmaV, level)) out.emplace_back(m);
  return out;
}

std::vector<State> SmallSpace::chi_generated(int m, int level) {
  VertexAlgebra& va = algebra();
  const State& eta = reg_->get("eta");
  const State& xi = reg_->get("xi");
  // weight of the target: level + (m^2 - m)/2, an integer
  int w = level + (m * m - m) / 2;
  std::vector<State> out;
  for (int ne = 0; ne <= w; ++ne) {
    int nx = ne + m;
    if (nx < 0) continue;
    for (int wx = 0; wx <= w; ++wx) {
      for (const auto& xs : distinct_parts(1, nx, wx))
        for (const auto& es : distinct_parts(1, ne, w - wx)) {
          State st = State::vacuum();
          // xi_(-j) is the raw mode xi_{-j-1}; eta_(-n) is eta_{-n}
          for (auto it = xs.rbegin(); it != xs.rend(); ++it) st = va.mode(xi, -*it - 1, st);
          for (auto it = es.rbegin(); it != es.rend(); ++it) st = va.mode(eta, -*it, st);
          out.push_back(std::move(st));
        }
    }
  }
  return out;
}

std::vector<State> SmallSpace::sigma_generated(int s, int level) {
  VertexAlgebra& va = algebra();
  const State& b = reg_->get("b");
  const State& c = reg_->get("c");
  // c_(1) = c_{-1} has weight -1, c_(-k) = c_{-k-2} weight k, b_(-k) = b_{1-k} weight k
  int w = level + (s * s - 3 * s) / 2;
  std::vector<State> out;
  for (int low = 0; low <= 1; ++low)
    for (int nb = 0; nb <= w + 2; ++nb) {
      int nc = s + nb - low;
      if (nc < 0) continue;
      int rest = w + low;
      for (int wc = 0; wc <= rest; ++wc)
        for (const auto& cs : distinct_parts(1, nc, wc))
          for (const auto& bs : distinct_parts(2, nb, rest - wc)) {
            State st = State::vacuum();
            if (low) st = va.mode(c, -1, st);
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) st = va.mode(c, -*it - 2, st);
            for (auto it = bs.rbegin(); it != bs.rend(); ++it) st = va.mode(b, 1 - *it, st);
            out.push_back(std::move(st));
          }
    }
  return out;
}

Rational SmallSpace::chi_min_weight(int m) {
  return m <= 0 ? make_rational(m * m - m, 2) : make_rational(m * m + m, 2);
}

Rational SmallSpace::sigma_min_weight(int s, bool ker_b1) {
  if (!ker_b1) return Rational(-1);
  if (s >= 1) return make_rational(s * (s - 1), 2) - 1;
  if (s == 0) return Rational(0);
  long a = -s;
  return make_rational((a + 1) * (a + 2), 2) - 1;
}

SectorBasis SmallSpace::enumerate(const SectorSpec& spec) {
  const SuperLattice& L = algebra().lattice();
  for (int i = kPsi0; i < kDim; ++i)
    if (spec.alpha.twice(i) != 0) throw std::invalid_argument("sector momentum must lie in L^X");
  Rational tp = 2 * spec.picture;
  if (tp.get_den() != 1) throw std::invalid_argument("picture must be in (1/2)Z");
  const bool ramond = tp.get_num().get_si() % 2 != 0;
  const Rational alpha_half = ip(spec.alpha, spec.alpha) / 2;
  const Rational psi_min = ramond ? Rational(5, 8) : Rational(0);

  SectorBasis out{spec, {}};
  std::vector<int> rest_dirs;
  for (int i = 0; i <= kPhi; ++i) rest_dirs.push_back(i);

  for (int m = -64; m <= 64; ++m) {
    int s = spec.ghost + m;
    Rational lphi = spec.picture - m;  // phi coefficient of the momentum
    Rational phi_w = -lphi * lphi / 2 - lphi;
    Rational chi_w = make_rational(static_cast<long>(m) * m - m, 2);
    Rational sig_w = make_rational(static_cast<long>(s) * s - 3L * s, 2);
    Rational lower = alpha_half + psi_min + phi_w + chi_min_weight(m) + sigma_min_weight(s, spec.ker_b1);
    if (lower > spec.l0) continue;
    Rational base0 = alpha_half + phi_w + chi_w + sig_w;
    Rational budget = spec.l0 - base0;  // left for psi momenta and all oscillators
    // psi momenta with sum lambda_i^2 / 2 <= budget, coordinates doubled
    Rational b8 = 8 * budget;
    long max_sq = static_cast<long>(mpz_class(b8.get_num() / b8.get_den()).get_si());
    if (max_sq < 0) continue;
    std::vector<std::array<int, 5>> lambdas;
    std::array<int, 5> cur{};
    std::function<void(int, long)> rec = [&](int i, long left) {
      if (i == 5) {
        lambdas.push_back(cur);
        return;
      }
      for (int t = -9; t <= 9; ++t) {
        if ((t % 2 != 0) != ramond) continue;
        long sq = static_cast<long>(t) * t;
        if (sq > left) continue;
        cur[static_cast<std::size_t>(i)] = t;
        rec(i + 1, left - sq);
      }
    };
    // sum t_i^2 / 8 <= budget
    rec(0, max_sq);
    Vec mom0 = spec.alpha + m * kChiV + s * kSigmaV;
    Rational lphi2 = 2 * lphi;
    int phi_t = static_cast<int>(lphi2.get_num().get_si());
    for (const auto& lam : lambdas) {
      Vec mom = mom0 + Vec::unit(kPhi, phi_t);
      long sq = 0;
      for (int i = 0; i < 5; ++i) {
        mom += Vec::unit(kPsi0 + i, lam[static_cast<std::size_t>(i)]);
        sq += static_cast<long>(lam[static_cast<std::size_t>(i)]) * lam[static_cast<std::size_t>(i)];
      }
      if (!L.contains(mom)) continue;
      if (spec.gso && !L.coset_class(mom).is_gso()) continue;
      Rational rem = spec.l0 - base0 - Rational(sq, 8);
      rem.canonicalize();
      if (rem < 0 || rem.get_den() != 1) continue;
      int R = static_cast<int>(rem.get_num().get_si());
      for (int nchi = 0; nchi <= R; ++nchi) {
        const auto& chis = chi_kernel(m, nchi);
        if (chis.empty()) continue;
        for (int nsig = 0; nsig + nchi <= R; ++nsig) {
          std::vector<State> sigs = spec.ker_b1 ? sigma_kernel(s, nsig) : sigma_fock(s, nsig);
          if (sigs.empty()) continue;
          for (const auto& rest : oscillator_lists(rest_dirs, R - nchi - nsig))
            for (const auto& cx : chis)
              for (const auto& sg : sigs) {
                State st;
                for (const auto& [mx, kx] : cx.terms())
                  for (const auto& [ms, ks] : sg.terms()) {
                    Monomial mono(mom, rest);
                    for (Osc o : mx.osc) mono.add(o);
                    for (Osc o : ms.osc) mono.add(o);
                    st.add(std::move(mono), kx * ks);
                  }
                out.states.push_back(std::move(st));
              }
        }
      }
    }
  }
  return out;
}

std::map<int, SectorBasis> SmallSpace::enumerate_all_ghosts(const Vec& alpha, const Rational& picture,
                                                            const Rational& l0, bool ker_b1) {
  // Along m the weight grows like (p + 3/2) m for m -> +inf and -(p + 1/2) m
  // for m -> -inf, so the sum over ghost numbers is finite only for p = -1.
  if (!(picture + Rational(3, 2) > 0 && picture + Rational(1, 2) < 0))
    throw std::domain_error("sum over ghost numbers is infinite at picture " + picture.get_str());
  std::map<int, SectorBasis> out;
  for (int n = -64; n <= 64; ++n) {
    SectorSpec spec{alpha, picture, n, l0, true, ker_b1};
    SectorBasis b = enumerate(spec);
    if (b.dim() > 0) out.emplace(n, std::move(b));
  }
  return out;
}

std::map<int, SectorBasis> SmallSpace::enumerate_window(const Vec& alpha, const Rational& picture, const Rational& l0,
                                                        int lo, int hi, bool ker_b1) {
  std::map<int, SectorBasis> out;
  for (int n = lo; n <= hi; ++n) out.emplace(n, enumerate(SectorSpec{alpha, picture, n, l0, true, ker_b1}));
  return out;
}

State SmallSpace::adjoint(const State& a, Half n, const State& v) {
  return adjoint_mode(algebra(), a, n, v, reg_->get("omega"));
}

Scalar SmallSpace::pairing(const State& u, const State& v) {
  if (u.is_zero() || v.is_zero()) return Scalar();
  static const Monomial dual(3 * kSigmaV - 2 * kPhiV);
  return adjoint(u, Half::of(-1), v).coeff(dual);
}

Scalar SmallSpace::pairing_c(const State& u, const State& v) {
  return pairing(algebra().mode(reg_->get("c"), -2, u), v);
}

}  // namespace svoa
