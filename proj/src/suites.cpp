#include "svoa/suites.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace svoa {

using nlohmann::json;

// ---- Report ----

Check& Report::add(std::string name, bool pass, json payload) {
  checks_.push_back(Check{std::move(name), pass, std::move(payload)});
  return checks_.back();
}

bool Report::pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return !checks_.empty();
}

json Report::to_json() const {
  json j;
  j["schema"] = kSchema;
  j["suite"] = suite_;
  j["pass"] = pass();
  json arr = json::array();
  for (const auto& c : checks_) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.payload.is_null()) cj["payload"] = c.payload;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  if (!data_.empty()) j["data"] = data_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks_) {
    passed += c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.payload.is_null()) os << "  " << c.payload.dump();
    os << '\n';
  }
  if (!data_.empty()) os << "data " << data_.dump() << '\n';
  os << suite_ << ": " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << checks_.size() << ")\n";
  return os.str();
}

// ---- Context ----

SuperLattice make_lattice(const Config& cfg) {
  if (cfg.lattice_basis_file.empty()) return SuperLattice::preset(cfg.lattice, cfg.y_choice);
  std::ifstream in(cfg.lattice_basis_file);
  if (!in) throw ConfigError("cannot read lattice basis file " + cfg.lattice_basis_file);
  std::vector<Vec> basis;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string norm;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) norm += (norm.empty() ? "" : ",") + tok;
    try {
      basis.push_back(parse_lx_vector(norm));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("lattice basis file: " + std::string(e.what()));
    }
  }
  try {
    return SuperLattice::build(basis, cfg.y_choice);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("lattice basis file: " + std::string(e.what()));
  }
}

Context::Context(const Config& cfg) : cfg_(cfg), va(make_lattice(cfg)), reg(va), small(reg), brst(small), phys(brst) {}

// The file name carries a fingerprint of the lattice data so that caches for
// different bases or cocycle choices never mix.
std::string Context::cache_path() const {
  if (cfg_.cache_dir.empty()) return "";
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](long x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  const SuperLattice& L = va.lattice();
  mix(L.y());
  for (const auto& b : L.basis())
    for (auto x : b.d) mix(x);
  for (const auto& row : L.seed())
    for (int x : row) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return (std::filesystem::path(cfg_.cache_dir) / ("modes-" + std::string(buf) + ".jsonl")).string();
}

std::size_t Context::load_cache() {
  auto p = cache_path();
  return p.empty() ? 0 : va.load_cache(p);
}

void Context::save_cache() const {
  auto p = cache_path();
  if (p.empty()) return;
  std::filesystem::create_directories(cfg_.cache_dir);
  va.save_cache(p);
}

// ---- helpers ----

Vec momentum_for_norm(int norm) {
  switch (norm) {
    case 0:
      return Vec::unit(0) + Vec::unit(9);
    case -2:
      return Vec::unit(0) + Vec::unit(1) + 2 * Vec::unit(9);
    case -4:
      return 2 * Vec::unit(9);
    default:
      throw std::invalid_argument("no documented momentum of norm " + std::to_string(norm) + " (use 0, -2 or -4)");
  }
}

std::string scalar_list(const std::vector<Scalar>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

namespace {

const Vec kNull = Vec::unit(0) + Vec::unit(9);
const Vec kPhiV = Vec::unit(kPhi);
const Vec kSigmaV = Vec::unit(kSigma);
const Vec kChiV = Vec::unit(kChi);

json str_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json dims_json(const std::map<int, std::size_t>& d) {
  json j = json::object();
  for (const auto& [n, k] : d) j[std::to_string(n)] = k;
  return j;
}

Vec random_lattice_vec(const SuperLattice& L, std::mt19937_64& rng, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  Vec v;
  for (const auto& b : L.basis()) v += d(rng) * b;
  return v;
}

Vec random_gso_vec(const SuperLattice& L, std::mt19937_64& rng) {
  const auto& basis = L.basis();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1), sgn(0, 1), cnt(0, 2);
  for (;;) {
    Vec v;
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) v += (sgn(rng) ? 1 : -1) * basis[static_cast<std::size_t>(pick(rng))];
    bool small = true;
    for (auto x : v.d) small = small && x >= -3 && x <= 3;
    if (small && L.coset_class(v).is_gso() && std::abs(ip4(v, v)) <= 12) return v;
  }
}

Monomial random_mono(const SuperLattice& L, std::mt19937_64& rng, int max_osc) {
  std::uniform_int_distribution<int> dir(0, kDim - 1), mode(1, 2), len(0, max_osc);
  Monomial m(random_gso_vec(L, rng));
  int l = len(rng);
  for (int i = 0; i < l; ++i) m.add(make_osc(dir(rng), mode(rng)));
  return m;
}

// States of the small algebra drawn from a few sectors at the null momentum and at 0.
std::vector<State> small_samples(Context& ctx, std::size_t budget) {
  std::vector<SectorSpec> specs = {{kNull, Rational(-1), 1, Rational(0)},     {kNull, Rational(-1), 0, Rational(0)},
                                   {kNull, Rational(-1, 2), 1, Rational(0)},  {kNull, Rational(-3, 2), 1, Rational(0)},
                                   {Vec{}, Rational(-1), 1, Rational(1)},     {kNull, Rational(0), 1, Rational(1)},
                                   {Vec{}, Rational(-1, 2), 0, Rational(1)}};
  const std::size_t per = std::max<std::size_t>(1, budget / specs.size());
  std::vector<State> out;
  for (const auto& s : specs) {
    auto b = ctx.small.enumerate(s);
    std::size_t step = std::max<std::size_t>(1, b.dim() / per);
    for (std::size_t i = 0; i < b.dim() && out.size() < budget; i += step) out.push_back(b.states[i]);
  }
  return out;
}

}  // namespace

nlohmann::json element_json(const Element& e) {
  json j;
  j["alpha"] = lx_str(e.alpha);
  j["parity"] = e.parity;
  j["label"] = e.label;
  j["state"] = to_json(e.rep);
  return j;
}

Element parse_element(Context& ctx, const std::string& spec) {
  auto bad = [&](const std::string& why) { return std::invalid_argument("element '" + spec + "': " + why); };
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw bad("cannot read file");
    json j;
    try {
      in >> j;
      Element e{parse_lx_vector(j.at("alpha").get<std::string>()), j.at("parity").get<int>(),
                state_from_json(j.at("state")), j.value("label", spec)};
      if (e.parity != 0 && e.parity != 1) throw bad("parity must be 0 or 1");
      return e;
    } catch (const json::exception& ex) {
      throw bad(ex.what());
    }
  }
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw bad("bad index");
    return v;
  };
  if (!spec.empty() && (spec[0] == 'P' || spec[0] == 'Q') && spec.find('/') == std::string::npos) {
    int k = number(spec.substr(1));
    if (spec[0] == 'P') {
      if (k < 1 || k > 10) throw bad("P index must be 1..10");
      return ctx.phys.P(k);
    }
    if (k < 0 || k > 15) throw bad("Q index must be 0..15");
    return ctx.phys.Q(k);
  }
  auto s1 = spec.find('/'), s2 = spec.rfind('/');
  if (s1 == std::string::npos || s1 == s2) throw bad("expected P<mu>, Q<a>, <alpha>/<even|odd>/<index> or a .json file");
  Vec alpha = parse_lx_vector(spec.substr(0, s1));
  std::string par = spec.substr(s1 + 1, s2 - s1 - 1);
  if (par != "even" && par != "odd") throw bad("parity must be even or odd");
  int idx = number(spec.substr(s2 + 1));
  auto basis = ctx.phys.basis(alpha, par == "odd");
  if (idx < 0 || static_cast<std::size_t>(idx) >= basis.size())
    throw bad("index out of range, the root space has dimension " + std::to_string(basis.size()));
  return basis[static_cast<std::size_t>(idx)];
}

// ---- suites: vertex algebra ----

Report suite_structure_maps(Context& ctx) { return suite_structure_maps(ctx.va.lattice(), ctx.config()); }

Report suite_structure_maps(const SuperLattice& L, const Config& cfg) {
  Report r("structure-maps y=" + std::to_string(L.y()));
  int bimult = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto A = CosetClass::from_index(a), B = CosetClass::from_index(b);
      bool ok = true;
      for (int c = 0; c < 8; ++c) {
        auto C = CosetClass::from_index(c);
        ok = ok && (L.eta_exp(A + B, C) - L.eta_exp(A, C) - L.eta_exp(B, C)) % 8 == 0;
        ok = ok && (L.eta_exp(C, A + B) - L.eta_exp(C, A) - L.eta_exp(C, B)) % 8 == 0;
      }
      bimult += ok;
    }
  r.add("eta bimultiplicative", bimult == 64, json{{"pairs", 64}, {"ok", bimult}});
  int nc = 0;
  for (int a = 0; a < 8; ++a) {
    auto A = CosetClass::from_index(a);
    Vec d = coset_representative(A);
    nc += L.eta(A, A) == Scalar::zeta(ip4(d, d));
  }
  r.add("condition (nc)", nc == 8, json{{"classes", 8}, {"ok", nc}});
  std::mt19937_64 rng(cfg.seed);
  int n = cfg.structure_samples, comm = 0, cocycle = 0;
  for (int t = 0; t < n; ++t) {
    Vec a = random_lattice_vec(L, rng), b = random_lattice_vec(L, rng), c = random_lattice_vec(L, rng);
    comm += L.epsilon(a, b) == L.B(a, b) * L.epsilon(b, a);
    cocycle += L.epsilon(a, b) * L.epsilon(a + b, c) == L.epsilon(b, c) * L.epsilon(a, b + c);
  }
  r.add("cocycle B-commutation", comm == n, json{{"samples", n}, {"ok", comm}});
  r.add("2-cocycle identity", cocycle == n, json{{"samples", n}, {"ok", cocycle}});
  return r;
}

Report suite_borcherds(Context& ctx) {
  Report r("borcherds");
  const SuperLattice& L = ctx.va.lattice();
  std::mt19937_64 rng(ctx.config().seed + 22);
  std::uniform_int_distribution<int> back(0, 2);
  int n_samples = ctx.config().borcherds_samples, ok = 0, nonzero = 0;
  json failures = json::array();
  for (int t = 0; t < n_samples; ++t) {
    State a(random_mono(L, rng, 1)), b(random_mono(L, rng, 1)), c(random_mono(L, rng, 1));
    CosetClass g1 = class_of(L, a), g2 = class_of(L, b), g3 = class_of(L, c);
    auto fix = [](Half h, int par) { return ((h.t % 2) + 2) % 2 == par ? h : h - Half::twice(1); };
    Half n = fix(*VertexAlgebra::cutoff(a, b) - Half::of(back(rng)), delta2(g1, g2));
    Half k = fix(*VertexAlgebra::cutoff(a, c) - Half::of(back(rng)), delta2(g1, g3));
    Half m = fix(*VertexAlgebra::cutoff(b, c) - Half::of(back(rng)), delta2(g2, g3));
    auto rep = check_borcherds(ctx.va, a, b, c, n, k, m);
    ok += rep.equal;
    nonzero += !rep.lhs.is_zero();
    if (!rep.equal && failures.size() < 3)
      failures.push_back(json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"n", n.str()}, {"k", k.str()}, {"m", m.str()}});
  }
  json p{{"samples", n_samples}, {"ok", ok}, {"nonzero", nonzero}};
  if (!failures.empty()) p["failures"] = failures;
  r.add("Borcherds identity on random triples", ok == n_samples, p);
  r.add("samples exercise nonzero products", nonzero * 10 >= n_samples * 3, json{{"nonzero", nonzero}});
  return r;
}

Report suite_ope_table(Context& ctx) {
  Report r("ope-table");
  for (const auto& [a, b] : ope_pairs()) {
    OpeReport o = verify_ope(ctx.reg, a, b);
    json p = json::object();
    for (const auto& [h, s] : o.computed) p["z^-" + (h + Half::of(1)).str()] = s.str();
    r.add(a + " x " + b, o.equal, o.equal ? json(p) : json{{"computed", p}, {"report", o.str()}});
  }
  return r;
}

Report suite_central_charges(Context& ctx) {
  Report r("central-charges");
  const std::vector<std::pair<std::string, long>> expect = {{"omega_M", 15},    {"omega_Gh", -15},    {"omega_phi", 13},
                                                            {"omega_chi", -2},  {"omega_sigma", -26}, {"omega", 0}};
  for (const auto& [name, c] : expect) {
    Scalar got = central_charge(ctx.va, ctx.reg.get(name));
    r.add(name, got == Scalar(c), json{{"c", got.str()}, {"expected", c}});
  }
  return r;
}

Report suite_brst(Context& ctx, bool sweep) {
  Report r("brst-check");
  auto cert = ctx.brst.nilpotency_certificate();
  r.add("Q j_BRST = D v", cert.equal && !cert.q_j.is_zero(), json{{"terms", cert.q_j.size()}});
  if (sweep) {
    std::vector<Vec> momenta = {kNull - kPhiV + kSigmaV, spinor_weights(true)[0] - Vec::unit(kPhi, 1) + kSigmaV + kNull,
                                momentum_for_norm(-2) - 2 * kPhiV + 2 * kSigmaV + kChiV};
    json ms = json::array();
    for (const auto& m : momenta) ms.push_back(m.str());
    int deg = ctx.config().sweep_degree;
    auto rep = ctx.brst.q_squared_sweep(momenta, deg);
    json p{{"degree", deg}, {"momenta", ms}, {"checked", rep.checked}, {"failures", rep.failures}};
    if (!rep.counterexamples.empty()) p["first"] = rep.counterexamples.front().str();
    r.add("Q^2 = 0 on all monomials up to the sweep degree", rep.ok() && rep.checked > 0, p);
  }
  return r;
}

Report suite_ghost_grading(Context& ctx) {
  Report r("ghost-grading");
  auto op = [&](const std::string& f, const State& v) { return mode_operator(ctx.va, ctx.reg.get(f), Half::of(0), v); };
  for (int which : {kPhi, kChi, kSigma}) {
    const char* name = which == kPhi ? "phi" : which == kChi ? "chi" : "sigma";
    bool ok = true;
    json rows = json::array();
    for (int n = -3; n <= 3; ++n) {
      const Monomial m(Vec::unit(which, 2 * n));
      const State v(m);
      long el = which == kPhi ? -n * (n + 2) : which == kChi ? n * (n - 1) : n * (n - 3);
      long en = which == kPhi ? 0 : which == kChi ? -n : n;
      long ep = which == kSigma ? 0 : n;
      State l0 = op("omega", v), jn = op("j_N", v), jp = op("j_P", v);
      ok = ok && l0 == Scalar::from_fraction(el, 2) * v && jn == Scalar(en) * v && jp == Scalar(ep) * v;
      rows.push_back(json{{"n", n}, {"L0", l0.coeff(m).str()}, {"jN", jn.coeff(m).str()}, {"jP", jp.coeff(m).str()}});
    }
    r.add(std::string("e^{n ") + name + "}, n in [-3, 3]", ok, rows);
  }
  return r;
}

Report suite_picture_changing(Context& ctx) {
  Report r("picture-changing");
  auto& B = ctx.brst;
  const State& b = ctx.reg.get("b");
  State dxi = ctx.va.derivation(ctx.reg.get("xi"));
  auto samples = small_samples(ctx, static_cast<std::size_t>(ctx.config().picture_samples));
  int xq = 0, xb = 0, total_b = 0;
  for (const State& v : samples) {
    State xv = B.picture_change(v);
    xq += (B.apply_x(B.apply_q(v)) - B.apply_q(xv)).is_zero();
    for (int n = -1; n <= 3; ++n) {
      ++total_b;
      xb += (B.apply_x(ctx.va.mode(b, n, v)) - ctx.va.mode(b, n, xv)) == Scalar(-1) * ctx.va.mode(dxi, n - 1, v);
    }
  }
  const int ns = static_cast<int>(samples.size());
  r.add("[X_{-1}, Q] = 0", xq == ns && ns > 0, json{{"samples", ns}, {"ok", xq}});
  r.add("[X_{-1}, b_n] = -(D xi)_{n-1}, n in [-1, 3]", xb == total_b, json{{"checks", total_b}, {"ok", xb}});
  auto zero = picture_iso_check(B, Vec{}, Rational(-3, 2), 1, false);
  r.add("X_{-1} H(0)_{-3/2,1} = 0", zero.image_zero && zero.dim_source == 16,
        json{{"dim_source", zero.dim_source}, {"rank", zero.rank}});
  auto iso = picture_iso_check(B, kNull, Rational(-3, 2), 1, true);
  json scal = json::array();
  for (const auto& s : iso.ptilde_x_scalar) scal.push_back(s ? s->str() : "none");
  r.add("X_{-1} bijective H(alpha)_{-3/2,1} -> H(alpha)_{-1/2,1}, alpha null", iso.bijective,
        json{{"alpha", lx_str(kNull)}, {"dim_source", iso.dim_source}, {"dim_target", iso.dim_target}, {"rank", iso.rank}});
  r.add("Ptilde^mu_0 X_{-1} acts as the scalar alpha^mu", iso.ptilde_x_is_scalar, json{{"scalars", scal}});
  return r;
}

// ---- suites: cohomology ----

Report suite_sector(Context& ctx, const SectorSpec& spec, bool with_states) {
  Report r("sector");
  auto b = ctx.small.enumerate(spec);
  r.data()["spec"] = spec.str();
  r.data()["dim"] = b.dim();
  if (with_states) {
    json a = json::array();
    for (const auto& s : b.states) a.push_back(to_json(s));
    r.data()["states"] = a;
  }
  std::vector<SparseVec> rows;
  MonomialIndex idx;
  for (const auto& s : b.states) rows.push_back(idx.coords(s));
  r.add("basis is independent", rank_of(rows) == b.dim(), json{{"dim", b.dim()}});
  return r;
}

Report suite_cohomology(Context& ctx, const Vec& alpha, const Rational& picture, int lo, int hi, bool with_reps) {
  Report r("cohomology");
  ComplexSlice s(ctx.brst, alpha, picture, lo, hi);
  auto d = s.dims();
  r.data()["alpha"] = lx_str(alpha);
  r.data()["picture"] = picture.get_str();
  r.data()["dims"] = dims_json(d);
  json cdims = json::object();
  for (int n = lo - 1; n <= hi + 1; ++n) cdims[std::to_string(n)] = s.dim_c(n);
  r.data()["chain_dims"] = cdims;
  if (with_reps) {
    json reps = json::object();
    for (int n = lo; n <= hi; ++n) {
      json a = json::array();
      for (const auto& v : s.representatives(n)) a.push_back(to_json(v));
      reps[std::to_string(n)] = a;
    }
    r.data()["representatives"] = reps;
  }
  r.add("Q^2 = 0 as matrices", s.q_squared_zero());
  return r;
}

Report suite_massless(Context& ctx) {
  Report r("massless");
  auto& B = ctx.brst;
  const std::vector<std::pair<Rational, std::size_t>> null_expect = {
      {Rational(-1), 8}, {Rational(-1, 2), 8}, {Rational(-3, 2), 8}};
  const std::vector<std::pair<Rational, std::size_t>> zero_expect = {
      {Rational(-1), 10}, {Rational(-1, 2), 16}, {Rational(-3, 2), 16}};
  for (const auto& [p, e] : null_expect) {
    ComplexSlice s(B, kNull, p, 1, 1);
    std::size_t d = s.dim_h(1);
    r.add("dim H(alpha)_{" + p.get_str() + ",1}, alpha null", d == e, json{{"dim", d}, {"expected", e}});
  }
  for (const auto& [p, e] : zero_expect) {
    ComplexSlice s(B, Vec{}, p, 1, 1);
    std::size_t d = s.dim_h(1);
    r.add("dim H(0)_{" + p.get_str() + ",1}", d == e, json{{"dim", d}, {"expected", e}});
  }
  auto m = massless_checks(B, ctx.phys.gammas(), kNull);
  r.add("e^phi_{-5/2} e^{-phi}_{-1/2} S_dot = -S_dot", m.phi_identity);
  r.add("Q|xi,alpha> = 0 iff (xi, alpha) = 0", m.vector_kernel_dim == 9 && m.vector_kernel_is_transverse,
        json{{"kernel_dim", m.vector_kernel_dim}});
  r.add("alpha_mu psi^mu e^{-phi} c e^alpha is exact", m.longitudinal_exact && m.exactness_scalar.has_value(),
        json{{"scalar", m.exactness_scalar ? m.exactness_scalar->str() : "none"}});
  r.add("Dirac kernel at picture -1/2 has dimension 8", m.dirac_kernel_dim == 8 && m.dotted_closed_iff_dirac,
        json{{"rank", m.dirac_rank}});
  r.add("picture -3/2 exactness matches the Dirac condition", m.undotted_exact_iff_dirac);
  r.add("X_{-1} on picture -3/2 is the Gamma contraction", m.x_gamma_formula);
  return r;
}

Report suite_massive(Context& ctx) {
  Report r("first-massive-level");
  const Vec beta = momentum_for_norm(-2);
  ComplexSlice s(ctx.brst, beta, Rational(-1), 1, 1);
  std::size_t d = s.dim_h(1);
  Rational c1 = c_coefficient(1);
  r.add("dim H(alpha)_{-1,1} = c(1), alpha^2 = -2", Rational(static_cast<long>(d)) == c1,
        json{{"alpha", lx_str(beta)}, {"dim", d}, {"c1", c1.get_str()}});
  auto ep = euler_poincare_dim(ctx.small, beta);
  r.add("Euler-Poincare alternating sum = c(1)", ep.equal && ep.alternating == static_cast<long>(d),
        json{{"alternating", ep.alternating}, {"chain_dims", dims_json(ep.dims)}});
  ComplexSlice s2(ctx.brst, beta, Rational(-1, 2), 1, 1);
  std::size_t d2 = s2.dim_h(1);
  r.add("dim H(alpha)_{-1/2,1} = dim H(alpha)_{-1,1}", d2 == d, json{{"dim", d2}});
  return r;
}

Report suite_vanishing(Context& ctx) {
  Report r("vanishing");
  const int lo = ctx.config().window_lo, hi = ctx.config().window_hi;
  for (int norm : {0, -2}) {
    const Vec a = momentum_for_norm(norm);
    ComplexSlice s(ctx.brst, a, Rational(-1), lo, hi);
    auto d = s.dims();
    bool ok = true;
    for (const auto& [n, k] : d)
      if (n != 1 && k != 0) ok = false;
    r.add("H(alpha)_{-1,n} = 0 for n != 1, alpha^2 = " + std::to_string(norm), ok,
          json{{"alpha", lx_str(a)}, {"dims", dims_json(d)}});
  }
  return r;
}

Report suite_euler_poincare(Context& ctx, const std::vector<Vec>& momenta) {
  Report r("euler-poincare");
  for (const auto& a : momenta) {
    auto ep = euler_poincare_dim(ctx.small, a);
    r.add("alpha = " + lx_str(a), ep.equal,
          json{{"alternating", ep.alternating}, {"c", ep.c_value.get_str()}, {"chain_dims", dims_json(ep.dims)}});
  }
  return r;
}

Report suite_gamma(Context& ctx) {
  Report r("gamma-check");
  const GammaData& g = ctx.phys.gammas();
  r.add("{Gamma^mu, Gamma^nu} = 2 g^{mu nu}", g.clifford);
  r.add("Gamma^11 diagonal +-1", g.gamma11_diagonal);
  r.add("C antisymmetric", g.c_antisymmetric);
  r.add("C invertible", g.c_invertible);
  r.add("C^-1 Gamma^mu C = -(Gamma^mu)^T", g.c_conjugation);
  r.add("Gamma^mu C symmetric", g.gamma_c_symmetric);
  r.add("S_dot_0 S_dot = (1/sqrt2)(Gamma_mu C) Ptilde^mu", g.susy);
  json diag = json::array();
  for (std::size_t i = 0; i < 32; ++i) diag.push_back(g.gamma11[i][i].str());
  r.data()["gamma11_diagonal"] = diag;
  return r;
}

// ---- suites: physical state algebra ----

Report suite_susy(Context& ctx) {
  Report r("susy-check");
  std::vector<Element> samples;
  for (int parity : {0, 1}) {
    auto b = ctx.phys.basis(kNull, parity);
    samples.insert(samples.end(), b.begin(), b.begin() + 2);
  }
  samples.push_back(ctx.phys.basis(momentum_for_norm(-2), 0).at(0));
  samples.push_back(ctx.phys.basis(momentum_for_norm(-2), 1).at(0));
  auto s = susy_check(ctx.phys, samples);
  r.add("{Q^a, Q^b} = (1/sqrt2)(Gamma_mu C)^{ab} P^mu", s.qq_failures == 0 && s.qq_checked == 256,
        json{{"checked", s.qq_checked}, {"failures", s.qq_failures}});
  r.add("[P^mu, Q^a] = 0", s.pq_failures == 0, json{{"checked", s.pq_checked}, {"failures", s.pq_failures}});
  r.add("[P^mu, x] = alpha^mu x", s.px_failures == 0, json{{"checked", s.px_checked}, {"failures", s.px_failures}});
  r.add("<P^mu, P^nu> = g^{mu nu}, [P^mu, P^nu] = 0", s.pp_failures == 0,
        json{{"checked", s.pp_checked}, {"failures", s.pp_failures}});
  return r;
}

Report suite_jacobi(Context& ctx) {
  Report r("jacobi-check");
  auto el = default_jacobi_elements(ctx.phys);
  el.resize(std::min<std::size_t>(el.size(), static_cast<std::size_t>(ctx.config().jacobi_elements)));
  json labels = json::array();
  for (const auto& e : el) labels.push_back(e.label);
  r.data()["elements"] = labels;
  auto j = jacobi_check(ctx.phys, el);
  json fails = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(j.failures.size(), 5); ++i) fails.push_back(j.failures[i]);
  r.add("super antisymmetry modulo im Q", j.antisymmetry_failures == 0 && j.pairs > 0,
        json{{"pairs", j.pairs}, {"failures", j.antisymmetry_failures}});
  r.add("super Jacobi identity modulo im Q", j.jacobi_failures == 0 && j.triples > 0,
        json{{"triples", j.triples}, {"failures", j.jacobi_failures}, {"first", fails}});
  return r;
}

Report suite_forms(Context& ctx) {
  Report r("bilinear-forms");
  auto& s = ctx.small;
  auto& va = ctx.va;
  r.add("(e^{3 sigma - 2 phi}, 1) = 1", s.pairing(State::exp(3 * kSigmaV - 2 * kPhiV), State::vacuum()) == Scalar(1));

  // support: nonzero iff gamma + gamma' = -2 phi and n + n' = 3
  std::vector<Vec> gammas = {Vec{},  -kPhiV, kNull - kPhiV + Vec::unit(kPsi0), -2 * kPhiV, kNull,
                             spinor_weights(true)[1] - Vec::unit(kPhi, 1), spinor_weights(false)[6] - Vec::unit(kPhi, 3),
                             Vec::unit(kPsi0 + 3) - kPhiV};
  std::mt19937_64 rng(ctx.config().seed + 40);
  std::uniform_int_distribution<int> pg(0, static_cast<int>(gammas.size()) - 1), pn(-2, 5), coin(0, 1);
  int tried = 0, ok = 0, nonzero = 0;
  const int want = ctx.config().pairing_samples;
  const auto& L = va.lattice();
  while (tried < want) {
    Vec g = gammas[static_cast<std::size_t>(pg(rng))];
    int n = pn(rng);
    bool matched = coin(rng);
    Vec g2 = matched ? -2 * kPhiV - g : gammas[static_cast<std::size_t>(pg(rng))];
    int n2 = matched ? 3 - n : pn(rng);
    Vec a = g + n * kSigmaV, b = g2 + n2 * kSigmaV;
    if (!L.coset_class(a).is_gso() || !L.coset_class(b).is_gso()) continue;
    if (monomial_l0(Monomial(a)) != monomial_l0(Monomial(b))) continue;
    ++tried;
    Scalar v = s.pairing(State::exp(a), State::exp(b));
    bool expect = (g + g2 == -2 * kPhiV) && n + n2 == 3;
    ok += v.is_zero() != expect;
    nonzero += !v.is_zero();
  }
  r.add("pairing nonzero iff gamma + gamma' = -2 phi and n + n' = 3", ok == tried && nonzero > 0,
        json{{"pairs", tried}, {"ok", ok}, {"nonzero", nonzero}});

  // adjoints
  std::vector<State> samples;
  for (SectorSpec spec : {SectorSpec{kNull, Rational(-1), 1, Rational(0)}, SectorSpec{kNull, Rational(0), 1, Rational(1)},
                          SectorSpec{kNull, Rational(-1, 2), 1, Rational(0)}}) {
    auto b = s.enumerate(spec);
    for (std::size_t i = 0; i < b.dim(); i += 3) samples.push_back(b.states[i]);
  }
  const State& b = ctx.reg.get("b");
  const State& c = ctx.reg.get("c");
  int adj_b = 0, adj_c = 0, adj_q = 0, adj_x = 0, nb = 0;
  for (const State& v : samples) {
    for (int n = -2; n <= 3; ++n) {
      ++nb;
      adj_b += s.adjoint(b, Half::of(n), v) == va.mode(b, 2 - n, v);
      adj_c += s.adjoint(c, Half::of(n), v) == Scalar(-1) * va.mode(c, -4 - n, v);
    }
    adj_q += s.adjoint(ctx.reg.get("j_BRST"), Half::of(0), v) == Scalar(-1) * ctx.brst.apply_q(v);
    adj_x += s.adjoint(ctx.reg.get("X"), Half::of(-1), v) == ctx.brst.apply_x(v);
  }
  const int ns = static_cast<int>(samples.size());
  r.add("b_n* = b_{2-n}", adj_b == nb, json{{"checks", nb}});
  r.add("c_n* = -c_{-4-n}", adj_c == nb, json{{"checks", nb}});
  r.add("Q* = -Q", adj_q == ns, json{{"checks", ns}});
  r.add("X_{-1}* = X_{-1}", adj_x == ns, json{{"checks", ns}});

  bool pp = true;
  for (int mu = 1; mu <= 10; ++mu)
    for (int nu = 1; nu <= 10; ++nu)
      pp = pp && ctx.phys.invariant_form(ctx.phys.P(mu), ctx.phys.P(nu)) == (mu == nu ? Scalar(metric_g(mu)) : Scalar());
  r.add("<P^mu, P^nu> = g^{mu nu}", pp);

  std::vector<Element> el;
  for (const Vec& a : {kNull, -kNull})
    for (int parity : {0, 1}) {
      auto basis = ctx.phys.basis(a, parity);
      el.push_back(basis.at(0));
      el.push_back(basis.at(1));
    }
  el.push_back(ctx.phys.P(1));
  el.push_back(ctx.phys.P(10));
  auto inv = invariance_check(ctx.phys, el);
  r.add("<[u,v],w> = <u,[v,w]> on massless triples", inv.failures == 0 && inv.triples > 0,
        json{{"triples", inv.triples}, {"failures", inv.failures}});
  r.add("<u,v> supersymmetric", inv.symmetry_failures == 0 && inv.symmetry_checked > 0,
        json{{"pairs", inv.symmetry_checked}});

  for (const Rational& p : {Rational(-1), Rational(-1, 2)}) {
    auto& left = ctx.phys.slice(kNull, p).representatives(1);
    auto& right = ctx.phys.slice(-kNull, Rational(-2) - p).representatives(1);
    std::size_t rank = mat_rank(induced_form(s, left, right));
    r.add("(,)_H nondegenerate on H(alpha)_{" + p.get_str() + ",1}", rank == left.size() && rank == right.size(),
          json{{"rank", rank}});
  }
  return r;
}

Report suite_bracket(Context& ctx, const Element& u, const Element& v) {
  Report r("bracket");
  auto res = ctx.phys.bracket(u, v);
  r.data()["u"] = u.label;
  r.data()["v"] = v.label;
  r.data()["result"] = element_json(res.value);
  r.data()["class"] = scalar_list(res.coords);
  auto back = ctx.phys.bracket(v, u);
  std::vector<Scalar> sum = res.coords;
  const Scalar sg = (u.parity * v.parity) % 2 ? Scalar(-1) : Scalar(1);
  for (std::size_t i = 0; i < sum.size() && i < back.coords.size(); ++i) sum[i] += sg * back.coords[i];
  r.add("[u,v] = -(-1)^{|u||v|} [v,u] in cohomology", PhysAlg::is_zero_vector(sum));
  return r;
}

// ---- suites: series and roots ----

Report suite_qseries(const std::string& kind, int order) {
  Report r("qseries");
  QSeries f(0);
  if (kind == "c") f = c_series(order);
  else if (kind == "a") f = a_series(order);
  else if (kind == "phi") f = euler_phi(order);
  else throw std::invalid_argument("unknown series kind '" + kind + "' (c, a or phi)");
  r.data()["kind"] = kind;
  r.data()["coefficients"] = str_list(f.coeffs());
  if (kind == "c" || kind == "a") {
    QSeries prod = c_series(order) * a_series(order);
    r.add("c(q) a(q) = 8", prod == QSeries::constant(order, 8));
  } else {
    r.add("phi(q) phi(q)^-1 = 1", f * f.inverse() == QSeries::constant(order, 1));
  }
  return r;
}

Report suite_series_values(int order) {
  Report r("series-values");
  auto head = [](const QSeries& f, int n) {
    return std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + n + 1);
  };
  auto ints = [](std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  auto c = head(c_series(4), 4);
  auto a = head(a_series(3), 3);
  r.add("c = (8, 128, 1152, 7680, 42112)", c == ints({8, 128, 1152, 7680, 42112}), str_list(c));
  r.add("a = (1, -16, 112, -448)", a == ints({1, -16, 112, -448}), str_list(a));
  auto t = trace_identity_check(order);
  r.add("trace identity to order q^" + std::to_string(order), t.equal,
        json{{"lattice_side", str_list(t.lattice_side.coeffs())}, {"closed_form", str_list(t.closed_form.coeffs())}});
  return r;
}

Report suite_asymptotics() {
  Report r("asymptotics");
  auto r10 = asymptotic_ratio(10), r40 = asymptotic_ratio(40), r100 = asymptotic_ratio(100);
  auto p = [](const AsymptoticReport& a) {
    return json{{"n", a.n},
                {"c", a.c.get_str()},
                {"ratio_quoted", a.ratio_quoted},
                {"ratio_modular", a.ratio_modular},
                {"ratio_bessel", a.ratio_bessel}};
  };
  r.add("c(10) within 15% of (1/2) n^{-11/4} e^{2 pi sqrt(2n)}", std::abs(r10.ratio_quoted - 1) <= 0.15, p(r10));
  r.add("c(100) within 5% of (1/2) n^{-11/4} e^{2 pi sqrt(2n)}", std::abs(r100.ratio_quoted - 1) <= 0.05, p(r100));
  r.add("ratio at n = 40 closer to 1 than at n = 10",
        std::abs(r40.ratio_quoted - 1) < std::abs(r10.ratio_quoted - 1), p(r40));
  return r;
}

Report suite_denominator(const Vec& rv, int height) {
  Report r("denominator-check");
  auto rep = denominator_check(rv, height);
  json rays = json::array();
  for (const auto& v : rep.ray_values) rays.push_back(str_list(v));
  json p{{"reference", lx_str(rv)},  {"height", height},          {"roots", rep.roots},
         {"lhs_terms", rep.lhs_terms}, {"rhs_terms", rep.rhs_terms}, {"compared", rep.compared},
         {"mismatches", rep.mismatches}, {"ray_values", rays},     {"off_ray_nonzero", rep.off_ray_nonzero}};
  if (!rep.first_mismatches.empty()) {
    json fm = json::array();
    for (const auto& [v, pr] : rep.first_mismatches)
      fm.push_back(json{{"lambda", lx_str(v)}, {"lhs", pr.first.get_str()}, {"rhs", pr.second.get_str()}});
    p["first_mismatches"] = fm;
  }
  r.add("product side equals 1 + sum a(n) e(n lambda0) coefficientwise", rep.ok(), p);
  auto a = a_series(height);
  bool rays_ok = !rep.ray_values.empty();
  for (std::size_t n = 0; n < rep.ray_values.size(); ++n)
    for (const auto& x : rep.ray_values[n]) rays_ok = rays_ok && x == a[static_cast<int>(n + 1)];
  r.add("coefficient on n * primitive null = a(n)", rays_ok);
  r.add("zero off the null rays", rep.off_ray_nonzero == 0);
  return r;
}

Report suite_cartan(const Vec& rv, int height) {
  Report r("cartan");
  auto t = enumerate_positive_roots(rv, height);
  auto c = cartan_matrix(t);
  json roots = json::array();
  for (const auto& v : c.simple_roots) roots.push_back(lx_str(v));
  r.data()["reference"] = lx_str(rv);
  r.data()["height"] = height;
  r.data()["simple_roots"] = roots;
  r.data()["multiplicity"] = json{{"even", 8}, {"odd", 8}};
  r.data()["matrix"] = c.matrix;
  r.add("diagonal entries are 0", c.diagonal_zero);
  r.add("off-diagonal entries are <= 0", c.off_diagonal_nonpositive);
  r.add("(a_i, a_j) = 0 iff proportional", c.zero_iff_proportional);
  return r;
}

}  // namespace svoa
