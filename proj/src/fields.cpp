#include "svoa/fields.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace svoa {

namespace {

State osc1(int dir, int mode = 1) {
  Monomial m;
  m.add(make_osc(dir, mode));
  return State(m);
}

Vec phi_i(int i) { return Vec::unit(kPsi0 + i - 1); }
const Vec kPhiV = Vec::unit(kPhi);
const Vec kChiV = Vec::unit(kChi);
const Vec kSigmaV = Vec::unit(kSigma);

Scalar frac(long n, long d) { return Scalar::from_fraction(n, d); }

}  // namespace

std::vector<Vec> spinor_weights() {
  std::vector<Vec> out;
  for (unsigned bits = 0; bits < 32; ++bits) {
    Vec v;
    for (int i = 0; i < 5; ++i) v.d[kPsi0 + i] = (bits >> i & 1U) ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> spinor_weights(bool conjugate) {
  std::vector<Vec> out;
  for (unsigned bits = 0; bits < 32; ++bits) {
    if ((std::popcount(bits) % 2 == 1) != conjugate) continue;
    Vec v;
    for (int i = 0; i < 5; ++i) v.d[kPsi0 + i] = (bits >> i & 1U) ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

FieldRegistry::FieldRegistry(VertexAlgebra& va) : va_(&va) {
  auto M = [&](const State& a, int n, const State& b) { return va.mode(a, n, b); };
  auto D = [&](const State& a) { return va.derivation(a); };
  const Scalar r = Scalar::inv_sqrt2();
  const Scalar i_ = Scalar::imag_unit();

  for (int mu = 1; mu <= 10; ++mu) put("x" + std::to_string(mu), osc1(kX0 + mu - 1));
  for (int i = 1; i <= 5; ++i) {
    put("Psi+" + std::to_string(i), State::exp(phi_i(i)));
    put("Psi-" + std::to_string(i), State::exp(-phi_i(i)));
  }
  for (int k = 1; k <= 4; ++k) {
    put("psi" + std::to_string(2 * k - 1), r * (Psi(1, k) + Psi(-1, k)));
    put("psi" + std::to_string(2 * k), (i_ * r) * (Psi(1, k) - Psi(-1, k)));
  }
  put("psi9", r * (Psi(1, 5) + Psi(-1, 5)));
  put("psi10", r * (Psi(1, 5) - Psi(-1, 5)));

  State tauM, omegaM;
  for (int nu = 1; nu <= 10; ++nu) {
    Scalar g(metric_g(nu));
    tauM += g * M(x(nu), -1, psi(nu));
    omegaM += (g * frac(1, 2)) * (M(x(nu), -1, x(nu)) + M(D(psi(nu)), -1, psi(nu)));
  }
  put("tau_M", tauM);
  put("omega_M", omegaM);

  for (int k = 1; k <= 4; ++k) {
    put("h+" + std::to_string(k), r * (x(2 * k - 1) + i_ * x(2 * k)));
    put("h-" + std::to_string(k), r * (x(2 * k - 1) - i_ * x(2 * k)));
  }
  put("h+5", r * (x(9) - x(10)));
  put("h-5", r * (x(9) + x(10)));
  State tp, tm, jM;
  for (int i = 1; i <= 5; ++i) {
    tp += M(get("h+" + std::to_string(i)), -1, Psi(1, i));
    tm += M(get("h-" + std::to_string(i)), -1, Psi(-1, i));
    jM += osc1(kPsi0 + i - 1);
  }
  put("tau_M+", tp);
  put("tau_M-", tm);
  put("j_M", jM);

  const State b = State::exp(-kSigmaV), c = State::exp(kSigmaV);
  const State beta = M(osc1(kChi), -1, State::exp(-kPhiV + kChiV));
  const State gamma = State::exp(kPhiV - kChiV);
  put("b", b);
  put("c", c);
  put("beta", beta);
  put("gamma", gamma);

  const State tghp = M(c, -1, D(beta)) + frac(3, 2) * M(D(c), -1, beta);
  const State tghm = Scalar(-2) * M(b, -1, gamma);
  put("tau_Gh+", tghp);
  put("tau_Gh-", tghm);
  put("tau_Gh", tghp + tghm);
  const State obc = Scalar(2) * M(D(c), -1, b) - M(D(b), -1, c);
  const State obg = frac(-3, 2) * M(D(gamma), -1, beta) - frac(1, 2) * M(D(beta), -1, gamma);
  put("omega_bc", obc);
  put("omega_betagamma", obg);
  put("omega_Gh", obc + obg);

  const State ph = osc1(kPhi), ch = osc1(kChi), si = osc1(kSigma);
  put("omega_phi", frac(-1, 2) * M(ph, -1, ph) - osc1(kPhi, 2));
  put("omega_chi", frac(1, 2) * M(ch, -1, ch) + frac(1, 2) * osc1(kChi, 2));
  put("omega_sigma", frac(1, 2) * M(si, -1, si) + frac(3, 2) * osc1(kSigma, 2));
  put("j_Gh", Scalar(-3) * ph + Scalar(2) * si);
  put("j_N", si - ch);
  put("j_P", ch - ph);
  put("phi", ph);
  put("chi", ch);
  put("sigma", si);

  put("omega", get("omega_M") + get("omega_Gh"));
  put("tau", get("tau_M") + get("tau_Gh"));
  const State half = frac(1, 2) * get("omega_Gh");
  put("j_BRST", M(c, -1, get("omega_M") + half) + M(gamma, -1, get("tau_M") + frac(1, 2) * get("tau_Gh")));

  const State xi = State::exp(kChiV), eta = State::exp(-kChiV);
  put("xi", xi);
  put("eta", eta);
  put("X", M(get("j_BRST"), 0, xi));

  const State& tM = get("tau_M");
  State v = frac(1, 4) * M(c, -1, M(gamma, -1, tM));
  v += frac(1, 4) * M(gamma, -1, M(gamma, -1, M(gamma, -1, beta)));
  v -= frac(1, 2) * M(gamma, -1, M(gamma, -1, M(c, -1, b)));
  v += frac(3, 2) * M(c, -3, c);
  v += frac(3, 2) * M(gamma, -2, gamma);
  put("brst_v", v);

  for (int mu = 1; mu <= 10; ++mu) {
    State pt = M(psi(mu), -1, State::exp(-kPhiV));
    put("Ptilde" + std::to_string(mu), pt);
    put("P" + std::to_string(mu), Scalar(-1) * M(pt, -1, c));
  }

  const Vec half_phi = Vec::unit(kPhi, 1);
  auto dotted = spinor_weights(true), undotted = spinor_weights(false);
  for (int a = 0; a < 16; ++a) {
    put("S_dot" + std::to_string(a), State::exp(dotted[a] - half_phi));
    put("S" + std::to_string(a), State::exp(undotted[a] - 3 * half_phi));
    put("Q_dot" + std::to_string(a), M(S_dot(a), -1, c));
    put("Q_spin" + std::to_string(a), M(S(a), -1, c));
  }
}

const State& FieldRegistry::get(const std::string& name) const {
  auto it = fields_.find(name);
  if (it == fields_.end()) throw std::out_of_range("unknown field '" + name + "'");
  return it->second;
}

std::vector<std::string> FieldRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields_) out.push_back(k);
  return out;
}

std::map<Half, State> singular_part(VertexAlgebra& va, const State& a, const State& b) {
  std::map<Half, State> out;
  if (a.is_zero() || b.is_zero()) return out;
  const SuperLattice& L = va.lattice();
  const int par = delta2(class_of(L, a), class_of(L, b));
  Half cut = *VertexAlgebra::cutoff(a, b);
  for (Half n = Half::twice(par); n <= cut; n = n + Half::of(1)) {
    State r = va.mode(a, n, b);
    if (!r.is_zero()) out.emplace(n, std::move(r));
  }
  if (par == 1) {
    // n = -1/2 is still singular
    State r = va.mode(a, Half::twice(-1), b);
    if (!r.is_zero()) out.emplace(Half::twice(-1), std::move(r));
  }
  return out;
}

std::string OpeReport::str() const {
  std::ostringstream os;
  os << a << "(z) " << b << ": " << (equal ? "ok" : "MISMATCH") << '\n';
  std::map<Half, std::pair<State, State>> all;
  for (const auto& [n, s] : computed) all[n].first = s;
  for (const auto& [n, s] : expected) all[n].second = s;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const auto& [n, pr] = *it;
    os << "  z^-" << (n + Half::of(1)).str() << ": " << pr.first.str();
    if (!(pr.first == pr.second)) os << "   expected " << pr.second.str();
    os << '\n';
  }
  return os.str();
}

namespace {

using Expect = std::function<std::map<Half, State>(const FieldRegistry&, VertexAlgebra&)>;

struct OpeEntry {
  std::string a, b;
  Expect expected;
};

// Keys are pole orders (a_n b sits at z^{-n-1}).
std::map<Half, State> poles(std::initializer_list<std::pair<int, State>> l) {
  std::map<Half, State> m;
  for (const auto& [p, s] : l)
    if (!s.is_zero()) m.emplace(Half::of(p - 1), s);
  return m;
}

const std::vector<OpeEntry>& ope_table() {
  static const std::vector<OpeEntry> table = [] {
    std::vector<OpeEntry> t;
    auto one = [] { return State::vacuum(); };
    auto q = [](long n, long d) { return Scalar::from_fraction(n, d); };
    // x, psi, Psi two point functions
    for (int mu = 1; mu <= 10; ++mu) {
      for (int nu = 1; nu <= 10; ++nu) {
        int g = mu == nu ? metric_g(mu) : 0;
        t.push_back({"x" + std::to_string(mu), "x" + std::to_string(nu),
                     [=](const FieldRegistry&, VertexAlgebra&) { return poles({{2, Scalar(g) * one()}}); }});
        t.push_back({"psi" + std::to_string(mu), "psi" + std::to_string(nu),
                     [=](const FieldRegistry&, VertexAlgebra&) { return poles({{1, Scalar(g) * one()}}); }});
      }
    }
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        t.push_back({"Psi+" + std::to_string(i), "Psi-" + std::to_string(j),
                     [=](const FieldRegistry&, VertexAlgebra&) { return poles({{1, Scalar(i == j) * one()}}); }});
    // matter Virasoro and supercurrent on x and psi
    for (int mu = 1; mu <= 10; ++mu) {
      std::string xs = "x" + std::to_string(mu), ps = "psi" + std::to_string(mu);
      t.push_back({"omega_M", xs, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, r.get(xs)}, {1, va.derivation(r.get(xs))}});
                   }});
      t.push_back({"omega_M", ps, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, q(1, 2) * r.get(ps)}, {1, va.derivation(r.get(ps))}});
                   }});
      t.push_back({"tau_M", xs, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, r.get(ps)}, {1, va.derivation(r.get(ps))}});
                   }});
      t.push_back({"tau_M", ps, [=](const FieldRegistry& r, VertexAlgebra&) { return poles({{1, r.get(xs)}}); }});
    }
    // N=2 matter algebra
    t.push_back({"omega_M", "omega_M", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& w = r.get("omega_M");
                   return poles({{4, q(15, 2) * one()}, {2, Scalar(2) * w}, {1, va.derivation(w)}});
                 }});
    for (std::string s : {"+", "-"}) {
      std::string tn = "tau_M" + s;
      int sg = s == "+" ? 1 : -1;
      t.push_back({"omega_M", tn, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, q(3, 2) * r.get(tn)}, {1, va.derivation(r.get(tn))}});
                   }});
      t.push_back({"j_M", tn, [=](const FieldRegistry& r, VertexAlgebra&) {
                     return poles({{1, Scalar(sg) * r.get(tn)}});
                   }});
      t.push_back({tn, tn, [](const FieldRegistry&, VertexAlgebra&) { return std::map<Half, State>{}; }});
    }
    t.push_back({"omega_M", "j_M", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   return poles({{2, r.get("j_M")}, {1, va.derivation(r.get("j_M"))}});
                 }});
    t.push_back({"j_M", "j_M", [=](const FieldRegistry&, VertexAlgebra&) { return poles({{2, Scalar(5) * one()}}); }});
    t.push_back({"tau_M+", "tau_M-", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& j = r.get("j_M");
                   return poles({{3, Scalar(5) * one()}, {2, j}, {1, r.get("omega_M") + q(1, 2) * va.derivation(j)}});
                 }});
    t.push_back({"tau_M-", "tau_M+", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& j = r.get("j_M");
                   return poles({{3, Scalar(5) * one()}, {2, Scalar(-1) * j},
                                 {1, r.get("omega_M") - q(1, 2) * va.derivation(j)}});
                 }});
    t.push_back({"tau_M", "tau_M", [=](const FieldRegistry& r, VertexAlgebra&) {
                   return poles({{3, Scalar(10) * one()}, {1, Scalar(2) * r.get("omega_M")}});
                 }});
    // ghosts
    t.push_back({"c", "b", [=](const FieldRegistry&, VertexAlgebra&) { return poles({{1, one()}}); }});
    t.push_back({"gamma", "beta", [=](const FieldRegistry&, VertexAlgebra&) { return poles({{1, one()}}); }});
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"b", "b"}, {"c", "c"}, {"beta", "beta"}, {"gamma", "gamma"}, {"b", "beta"}, {"b", "gamma"},
             {"c", "beta"}, {"c", "gamma"}, {"beta", "b"}, {"beta", "c"}, {"gamma", "b"}, {"gamma", "c"}})
      t.push_back({x, y, [](const FieldRegistry&, VertexAlgebra&) { return std::map<Half, State>{}; }});
    t.push_back({"omega_Gh", "omega_Gh", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& w = r.get("omega_Gh");
                   return poles({{4, q(-15, 2) * one()}, {2, Scalar(2) * w}, {1, va.derivation(w)}});
                 }});
    for (std::string s : {"+", "-"}) {
      std::string tn = "tau_Gh" + s;
      int sg = s == "+" ? 1 : -1;
      t.push_back({"omega_Gh", tn, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, q(3, 2) * r.get(tn)}, {1, va.derivation(r.get(tn))}});
                   }});
      // j_Gh as defined gives tau_Gh- charge +1 (a Gram computation), so the
      // N=2 current is -j_Gh; see ghost_n2_current.
      t.push_back({"j_Gh", tn, [=](const FieldRegistry& r, VertexAlgebra&) {
                     return poles({{1, Scalar(-sg) * r.get(tn)}});
                   }});
      t.push_back({tn, tn, [](const FieldRegistry&, VertexAlgebra&) { return std::map<Half, State>{}; }});
    }
    // the second order pole is j_Gh itself
    t.push_back({"omega_Gh", "j_Gh", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   return poles({{2, r.get("j_Gh")}, {1, va.derivation(r.get("j_Gh"))}});
                 }});
    t.push_back({"j_Gh", "j_Gh", [=](const FieldRegistry&, VertexAlgebra&) { return poles({{2, Scalar(-5) * one()}}); }});
    t.push_back({"tau_Gh+", "tau_Gh-", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State j = ghost_n2_current(r);
                   return poles({{3, Scalar(-5) * one()}, {2, j}, {1, r.get("omega_Gh") + q(1, 2) * va.derivation(j)}});
                 }});
    t.push_back({"tau_Gh-", "tau_Gh+", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State j = ghost_n2_current(r);
                   return poles({{3, Scalar(-5) * one()}, {2, Scalar(-1) * j},
                                 {1, r.get("omega_Gh") - q(1, 2) * va.derivation(j)}});
                 }});
    struct W {
      const char* f;
      long n, d;
    };
    for (W w : {W{"b", 2, 1}, W{"c", -1, 1}, W{"beta", 3, 2}, W{"gamma", -1, 2}}) {
      std::string f = w.f;
      long n = w.n, d = w.d;
      t.push_back({"omega_Gh", f, [=](const FieldRegistry& r, VertexAlgebra& va) {
                     return poles({{2, q(n, d) * r.get(f)}, {1, va.derivation(r.get(f))}});
                   }});
    }
    t.push_back({"tau_Gh", "b", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& be = r.get("beta");
                   return poles({{2, q(-3, 2) * be}, {1, q(-1, 2) * va.derivation(be)}});
                 }});
    t.push_back({"tau_Gh", "c", [=](const FieldRegistry& r, VertexAlgebra&) {
                   return poles({{1, Scalar(-2) * r.get("gamma")}});
                 }});
    t.push_back({"tau_Gh", "beta", [=](const FieldRegistry& r, VertexAlgebra&) {
                   return poles({{1, Scalar(-2) * r.get("b")}});
                 }});
    t.push_back({"tau_Gh", "gamma", [=](const FieldRegistry& r, VertexAlgebra& va) {
                   const State& c = r.get("c");
                   return poles({{2, c}, {1, q(-1, 2) * va.derivation(c)}});
                 }});
    // xi eta system
    t.push_back({"xi", "eta", [=](const FieldRegistry&, VertexAlgebra&) { return poles({{1, one()}}); }});
    t.push_back({"eta", "eta", [](const FieldRegistry&, VertexAlgebra&) { return std::map<Half, State>{}; }});
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> ope_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : ope_table()) out.emplace_back(e.a, e.b);
  return out;
}

OpeReport verify_ope(const FieldRegistry& reg, const std::string& a, const std::string& b) {
  for (const auto& e : ope_table()) {
    if (e.a != a || e.b != b) continue;
    OpeReport rep;
    rep.a = a;
    rep.b = b;
    VertexAlgebra& va = reg.algebra();
    rep.computed = singular_part(va, reg.get(a), reg.get(b));
    rep.expected = e.expected(reg, va);
    rep.equal = rep.computed.size() == rep.expected.size();
    for (const auto& [n, s] : rep.computed) {
      auto it = rep.expected.find(n);
      rep.equal = rep.equal && it != rep.expected.end() && it->second == s;
    }
    return rep;
  }
  throw std::out_of_range("no expected OPE for (" + a + ", " + b + ")");
}

State ghost_n2_current(const FieldRegistry& reg) { return Scalar(-1) * reg.get("j_Gh"); }

Scalar central_charge(VertexAlgebra& va, const State& w) {
  State r = va.mode(w, 3, w);
  if (r.is_zero()) return Scalar();
  if (r.size() != 1 || !(r.terms().begin()->first == Monomial()))
    throw std::domain_error("w_3 w is not a multiple of the vacuum: " + r.str());
  return Scalar(2) * r.terms().begin()->second;
}

State mode_operator(VertexAlgebra& va, const State& a, Half m, const State& v) {
  if (a.is_zero() || v.is_zero()) return {};
  Rational h = l0_of(a);
  Rational tw = 2 * h;
  if (tw.get_den() != 1) throw std::invalid_argument("field weight not in (1/2)Z");
  Half raw = m + Half::twice(static_cast<int>(tw.get_num().get_si())) - Half::of(1);
  const SuperLattice& L = va.lattice();
  CosetClass ca = class_of(L, a);
  for (const auto& [mono, c] : v.terms()) {
    if (delta2(ca, L.coset_class(mono.mom)) != ((raw.t % 2) + 2) % 2)
      throw std::invalid_argument("mode index " + m.str() + " incompatible with the sector of the target");
  }
  return va.mode(a, raw, v);
}

}  // namespace svoa
