#include "svoa/vertexop.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace svoa {

int Half::integer() const {
  if (t % 2 != 0) throw std::logic_error("mode index " + str() + " is not integral");
  return t / 2;
}

std::string Half::str() const {
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

VertexAlgebra::VertexAlgebra(SuperLattice L) : L_(std::move(L)) {}

namespace {

long binom_small(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// binom(-m-1, n) = (-1)^n binom(m+n, n)
long binom_neg(long m, long n) { return (n % 2 ? -1 : 1) * binom_small(m + n, n); }

struct Field {
  int dir;
  int nl;  // derivative order, mode is nl + 1
};

}  // namespace

const SchurTerms& VertexAlgebra::schur(const Vec& alpha, int k) {
  SchurKey key{alpha, k};
  auto it = schur_.find(key);
  if (it != schur_.end()) return it->second;
  SchurTerms terms;
  if (k == 0) {
    terms.emplace_back(OscList{}, Scalar(1));
  } else if (!alpha.is_zero()) {
    absl::flat_hash_map<OscList, Scalar> acc;
    for (int j = 1; j <= k; ++j) {
      SchurTerms prev = schur(alpha, k - j);  // copy: the map may rehash below
      for (int i = 0; i < kDim; ++i) {
        if (alpha.d[i] == 0) continue;
        Scalar ai = Scalar::from_fraction(alpha.d[i], 2 * k);
        for (const auto& [osc, c] : prev) {
          OscList o = osc;
          o.insert(std::upper_bound(o.begin(), o.end(), make_osc(i, j)), make_osc(i, j));
          auto [pos, ins] = acc.try_emplace(o, c * ai);
          if (!ins) pos->second += c * ai;
        }
      }
    }
    for (auto& [o, c] : acc)
      if (!c.is_zero()) terms.emplace_back(o, c);
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.first.begin(), x.first.end(), y.first.begin(), y.first.end());
    });
  }
  return schur_.emplace(key, std::move(terms)).first->second;
}

State VertexAlgebra::mode_mono_uncached(const Monomial& a, Half n, const Monomial& b) {
  const Vec& al = a.mom;
  const Vec& be = b.mom;
  const int ab2 = ip2(al, be);  // 2(alpha, beta)
  if (((n.t + ab2) % 2 + 2) % 2 != 0) {
    ++stats_.mismatches;
    return {};
  }
  std::vector<Field> A;
  for (Osc o : a.osc) A.push_back({osc_dir(o), osc_mode(o) - 1});
  const int na = static_cast<int>(A.size());
  const int nb = static_cast<int>(b.osc.size());
  if (nb > 62 || na > 30) throw std::length_error("too many oscillators in mode product");

  // (created mask, P) -> kept-mask -> weight
  std::map<std::pair<std::uint32_t, int>, absl::flat_hash_map<std::uint64_t, Scalar>> groups;

  auto leaf = [&](std::uint64_t used, std::uint32_t created, int D, const Scalar& w) {
    int twoP = -n.t - 2 - ab2 + 2 * D;
    if (twoP < 0) return;
    std::uint64_t kept = (nb == 64 ? ~0ULL : ((1ULL << nb) - 1)) & ~used;
    auto& g = groups[{created, twoP / 2}];
    auto [it, ins] = g.try_emplace(kept, w);
    if (!ins) it->second += w;
  };

  // Stage two: b oscillators not contracted with a-fields either stay or
  // contract with the exponential.
  auto stage_b = [&](auto&& self, int j, std::uint64_t used, std::uint32_t created, int D,
                     const Scalar& w) -> void {
    if (j == nb) {
      leaf(used, created, D, w);
      return;
    }
    if (used >> j & 1ULL) {
      self(self, j + 1, used, created, D, w);
      return;
    }
    self(self, j + 1, used, created, D, w);
    int f = osc_dir(b.osc[j]);
    if (al.d[f] != 0) {
      int m = osc_mode(b.osc[j]);
      Scalar fac = Scalar::from_fraction(-kMetric[f] * al.d[f], 2);
      self(self, j + 1, used | (1ULL << j), created, D + m, w * fac);
    }
  };

  auto stage_a = [&](auto&& self, int l, std::uint64_t used, std::uint32_t created, int D,
                     const Scalar& w) -> void {
    if (l == na) {
      stage_b(stage_b, 0, used, created, D, w);
      return;
    }
    const Field& F = A[l];
    const int g = kMetric[F.dir];
    // creation part
    self(self, l + 1, used, created | (1U << l), D, w);
    // zero mode
    if (be.d[F.dir] != 0) {
      int sgn = F.nl % 2 ? -1 : 1;
      self(self, l + 1, used, created, D + 1 + F.nl, w * Scalar::from_fraction(sgn * g * be.d[F.dir], 2));
    }
    // contraction with an oscillator of b
    for (int j = 0; j < nb; ++j) {
      if (used >> j & 1ULL) continue;
      if (osc_dir(b.osc[j]) != F.dir) continue;
      int m = osc_mode(b.osc[j]);
      long c = binom_neg(m, F.nl) * m * g;
      self(self, l + 1, used | (1ULL << j), created, D + m + 1 + F.nl, w * Scalar(c));
    }
  };

  stage_a(stage_a, 0, 0, 0, 0, Scalar(1));

  State result;
  if (groups.empty()) return result;
  const Scalar eps = L_.epsilon(al, be);
  const Vec mom = al + be;

  for (const auto& [key, kept_map] : groups) {
    const auto [created, P] = key;
    std::vector<Field> C;
    for (int l = 0; l < na; ++l)
      if (created >> l & 1U) C.push_back(A[l]);
    // creation terms of total z-degree P
    SchurTerms ct;
    const int nc = static_cast<int>(C.size());
    for (int k = (nc == 0 ? P : 0); k <= P; ++k) {
      const SchurTerms& S = schur(al, k);
      if (S.empty()) continue;
      int rest = P - k;
      // compositions of rest into nc parts
      std::vector<int> q(nc, 0);
      auto emit = [&]() {
        long coef = 1;
        OscList osc;
        for (int i = 0; i < nc; ++i) {
          coef *= binom_small(q[i] + C[i].nl, C[i].nl);
          osc.push_back(make_osc(C[i].dir, q[i] + 1 + C[i].nl));
        }
        for (const auto& [so, sc] : S) {
          OscList o = osc;
          o.insert(o.end(), so.begin(), so.end());
          ct.emplace_back(std::move(o), sc * Scalar(coef));
        }
      };
      if (nc == 0) {
        if (rest == 0) emit();
        continue;
      }
      auto comp = [&](auto&& cself, int i, int left) -> void {
        if (i == nc - 1) {
          q[i] = left;
          emit();
          return;
        }
        for (int v = 0; v <= left; ++v) {
          q[i] = v;
          cself(cself, i + 1, left - v);
        }
      };
      comp(comp, 0, rest);
    }
    if (ct.empty()) continue;
    for (const auto& [kept, w] : kept_map) {
      if (w.is_zero()) continue;
      OscList base;
      for (int j = 0; j < nb; ++j)
        if (kept >> j & 1ULL) base.push_back(b.osc[j]);
      Scalar ew = eps * w;
      for (const auto& [o, c] : ct) {
        Monomial mono(mom);
        mono.osc = base;
        mono.osc.insert(mono.osc.end(), o.begin(), o.end());
        mono.sort();
        result.add(std::move(mono), ew * c);
      }
    }
  }
  return result;
}

const State& VertexAlgebra::mode_mono(const Monomial& a, Half n, const Monomial& b) {
  Key key{a, n.t, b};
  if (cache_enabled_) {
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++stats_.hits;
      return it->second;
    }
  }
  ++stats_.misses;
  State r = mode_mono_uncached(a, n, b);
  if (cache_.size() >= cache_limit_) cache_.clear();
  if (!cache_enabled_) {
    // keep a single slot so the returned reference stays valid until the next call
    cache_.clear();
  }
  return cache_.insert_or_assign(std::move(key), std::move(r)).first->second;
}

State VertexAlgebra::mode(const State& a, Half n, const State& b) {
  State r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const State& t = mode_mono(ma, n, mb);
      if (t.is_zero()) continue;
      Scalar c = ca * cb;
      for (const auto& [m, x] : t.terms()) r.add(m, c * x);
    }
  }
  return r;
}

void VertexAlgebra::clear_cache() { cache_.clear(); }

State VertexAlgebra::derivation(const State& a) const {
  State r;
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t k = 0; k < m.osc.size(); ++k) {
      int dir = osc_dir(m.osc[k]), mode = osc_mode(m.osc[k]);
      Monomial t = m;
      t.osc[k] = make_osc(dir, mode + 1);
      t.sort();
      r.add(std::move(t), c * Scalar(mode));
    }
    for (int i = 0; i < kDim; ++i) {
      if (m.mom.d[i] == 0) continue;
      Monomial t = m;
      t.add(make_osc(i, 1));
      r.add(std::move(t), c * Scalar::from_fraction(m.mom.d[i], 2));
    }
  }
  return r;
}

State VertexAlgebra::divided_derivation(const State& a, int j) const {
  State r = a;
  for (int i = 1; i <= j; ++i) {
    r = derivation(r);
    r *= Scalar::from_fraction(1, i);
  }
  return r;
}

Half VertexAlgebra::cutoff(const Monomial& a, const Monomial& b) {
  return Half{2 * (a.degree() + b.degree() - 1) - ip2(a.mom, b.mom)};
}

std::optional<Half> VertexAlgebra::cutoff(const State& a, const State& b) {
  std::optional<Half> best;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Half h = cutoff(ma, mb);
      if (!best || h > *best) best = h;
    }
  return best;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json mono_json(const Monomial& m) { return to_json(State(m)); }

Monomial mono_from_json(const nlohmann::json& j) {
  State s = state_from_json(j);
  if (s.size() != 1) throw std::invalid_argument("bad monomial");
  return s.terms().begin()->first;
}

constexpr int kCacheVersion = 1;

}  // namespace

void VertexAlgebra::save_cache(const std::string& path) const {
  std::vector<std::string> lines;
  for (const auto& [k, v] : cache_) {
    nlohmann::json body;
    body["a"] = mono_json(k.a);
    body["n"] = k.n;
    body["b"] = mono_json(k.b);
    body["result"] = to_json(v);
    body["y"] = L_.y();
    std::string text = body.dump();
    nlohmann::json line;
    line["version"] = kCacheVersion;
    line["hash"] = fnv1a(text);
    line["body"] = text;
    lines.push_back(line.dump());
  }
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  for (const auto& l : lines) out << l << '\n';
}

std::size_t VertexAlgebra::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    try {
      auto j = nlohmann::json::parse(line);
      if (j.at("version").get<int>() != kCacheVersion) continue;
      std::string text = j.at("body").get<std::string>();
      if (fnv1a(text) != j.at("hash").get<std::uint64_t>()) continue;
      auto body = nlohmann::json::parse(text);
      if (body.at("y").get<int>() != L_.y()) continue;
      Key key{mono_from_json(body.at("a")), body.at("n").get<int>(), mono_from_json(body.at("b"))};
      cache_.insert_or_assign(std::move(key), state_from_json(body.at("result")));
      ++loaded;
    } catch (const std::exception&) {
      continue;  // corrupt line: recomputed on demand
    }
  }
  return loaded;
}

const State& ModeOperator::apply(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  State r;
  for (const auto& [ma, ca] : a_.terms()) {
    State t = va_->mode_mono_uncached(ma, n_, m);
    if (t.is_zero()) continue;
    t *= ca;
    r += t;
  }
  return cache_.emplace(m, std::move(r)).first->second;
}

State ModeOperator::apply(const State& v) {
  State r;
  for (const auto& [m, c] : v.terms()) {
    const State& t = apply(m);
    for (const auto& [tm, tc] : t.terms()) r.add(tm, c * tc);
  }
  return r;
}

CosetClass class_of(const SuperLattice& L, const State& a) {
  if (a.is_zero()) throw std::invalid_argument("zero state has no class");
  CosetClass c = L.coset_class(a.terms().begin()->first.mom);
  for (const auto& [m, x] : a.terms())
    if (!(L.coset_class(m.mom) == c)) throw std::invalid_argument("state is not homogeneous in class");
  return c;
}

Rational l0_of(const State& a) {
  if (a.is_zero()) throw std::invalid_argument("zero state has no weight");
  Rational h = monomial_l0(a.terms().begin()->first);
  for (const auto& [m, c] : a.terms())
    if (monomial_l0(m) != h) throw std::invalid_argument("state is not an L0 eigenvector");
  return h;
}

BorcherdsReport check_borcherds(VertexAlgebra& va, const State& a, const State& b, const State& c, Half n,
                                Half k, Half m) {
  const SuperLattice& L = va.lattice();
  BorcherdsReport rep;
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    rep.equal = true;
    return rep;
  }
  CosetClass g1 = class_of(L, a), g2 = class_of(L, b), g3 = class_of(L, c);
  auto parity = [](Half h) { return ((h.t % 2) + 2) % 2; };
  if (parity(n) != delta2(g1, g2) || parity(k) != delta2(g1, g3) || parity(m) != delta2(g2, g3))
    throw std::invalid_argument("Borcherds indices incompatible with the classes");
  Scalar phase = L.eta(g1, g2) * Scalar::zeta(2 * n.t);
  Half cbc = *VertexAlgebra::cutoff(b, c), cac = *VertexAlgebra::cutoff(a, c);
  int J = std::max((cbc - m).t, (cac - k).t);
  for (int j = 0; 2 * j <= J; ++j) {
    Scalar bin = Scalar::from_rational(binomial(n.value(), j)) * Scalar(j % 2 ? -1 : 1);
    if (bin.is_zero()) continue;
    State t1 = va.mode(a, n + k - Half::of(j), va.mode(b, m + Half::of(j), c));
    State t2 = va.mode(b, m + n - Half::of(j), va.mode(a, k + Half::of(j), c));
    t2 *= phase;
    State t = t1 - t2;
    t *= bin;
    rep.lhs += t;
  }
  Half cab = *VertexAlgebra::cutoff(a, b);
  for (int j = 0; (n + Half::of(j)) <= cab; ++j) {
    Scalar bin = Scalar::from_rational(binomial(k.value(), j));
    if (bin.is_zero()) continue;
    State inner = va.mode(a, n + Half::of(j), b);
    if (inner.is_zero()) continue;
    State t = va.mode(inner, k + m - Half::of(j), c);
    t *= bin;
    rep.rhs += t;
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

State skew_symmetry_rhs(VertexAlgebra& va, const State& a, Half n, const State& b) {
  const SuperLattice& L = va.lattice();
  State r;
  if (a.is_zero() || b.is_zero()) return r;
  Scalar eta = L.eta(class_of(L, a), class_of(L, b));
  Half cut = *VertexAlgebra::cutoff(b, a);
  for (int j = 0; n + Half::of(j) <= cut; ++j) {
    State t = va.mode(b, n + Half::of(j), a);
    if (t.is_zero()) continue;
    t = va.divided_derivation(t, j);
    Half e = n + Half::of(1 + j);
    t *= eta * Scalar::zeta(2 * e.t);
    r += t;
  }
  return r;
}

State adjoint_mode(VertexAlgebra& va, const State& a, Half n, const State& b, const State& omega) {
  if (a.is_zero()) return {};
  Rational h = l0_of(a);
  if (h.get_den() != 1) throw std::invalid_argument("adjoint needs integral weight, got " + h.get_str());
  long hi = h.get_num().get_si();
  State r;
  State cur = a;
  for (int m = 0; !cur.is_zero(); ++m) {
    if (m > 0) {
      cur = va.mode(omega, 2, cur);
      cur *= Scalar::from_fraction(1, m);
      if (cur.is_zero()) break;
    }
    Half idx = Half::of(2 * hi - m - 2) - n;
    r += va.mode(cur, idx, b);
  }
  if (hi % 2 != 0) r = -r;
  return r;
}

}  // namespace svoa
