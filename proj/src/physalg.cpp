#include "svoa/physalg.hpp"

#include <stdexcept>

namespace svoa {

namespace {

Vec lx_part(const Vec& mom) {
  Vec a;
  for (int i = 0; i < 10; ++i) a.d[i] = mom.d[i];
  return a;
}

int twice(const Rational& q) {
  Rational t = 2 * q;
  if (t.get_den() != 1) throw std::invalid_argument("picture is not a half integer");
  return static_cast<int>(t.get_num().get_si());
}

void axpy(std::vector<Scalar>& acc, const Scalar& a, const std::vector<Scalar>& x) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += a * x[i];
}

std::string momentum_label(const Vec& a) {
  std::string s = "(";
  for (int i = 0; i < 10; ++i) s += (i ? "," : "") + a.at(i).get_str();
  return s + ")";
}

}  // namespace

bool BracketResult::is_zero() const { return PhysAlg::is_zero_vector(coords); }

bool PhysAlg::is_zero_vector(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

PhysAlg::PhysAlg(Brst& brst) : brst_(&brst) {}

const GammaData& PhysAlg::gammas() {
  if (!gammas_) gammas_ = std::make_unique<GammaData>(gamma_matrices(brst_->registry()));
  return *gammas_;
}

ComplexSlice& PhysAlg::slice(const Vec& alpha, const Rational& picture, int ghost) {
  auto key = std::make_tuple(alpha, twice(picture), ghost);
  auto it = slices_.find(key);
  if (it == slices_.end())
    it = slices_.emplace(key, std::make_unique<ComplexSlice>(*brst_, alpha, picture, ghost, ghost)).first;
  return *it->second;
}

Element PhysAlg::P(int mu) const {
  return Element{Vec{}, 0, brst_->registry().P(mu), "P" + std::to_string(mu)};
}

Element PhysAlg::Q(int a) const {
  return Element{Vec{}, 1, brst_->registry().get("Q_dot" + std::to_string(a)), "Q" + std::to_string(a)};
}

std::vector<Element> PhysAlg::basis(const Vec& alpha, int parity) {
  std::vector<Element> out;
  if (alpha.is_zero()) {
    if (parity == 0)
      for (int mu = 1; mu <= 10; ++mu) out.push_back(P(mu));
    else
      for (int a = 0; a < 16; ++a) out.push_back(Q(a));
    return out;
  }
  Element proto{alpha, parity, State(), ""};
  const auto& reps = slice(alpha, proto.picture()).representatives(1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    out.push_back(Element{alpha, parity, reps[i],
                          (parity ? "odd" : "even") + momentum_label(alpha) + "#" + std::to_string(i)});
  return out;
}

void PhysAlg::require_representative(const Element& u) {
  VertexAlgebra& va = brst_->algebra();
  if (u.rep.is_zero()) return;
  Grading gr = grade(va.lattice(), u.rep);
  if (gr.picture != u.picture() || gr.ghost != 1 || gr.l0 != 0)
    throw std::invalid_argument("element " + u.label + " is not in the canonical picture at ghost number 1");
  if (!va.mode(brst_->registry().get("b"), 1, u.rep).is_zero())
    throw std::invalid_argument("element " + u.label + " is not in ker b_1");
  if (!brst_->apply_q(u.rep).is_zero()) throw std::invalid_argument("element " + u.label + " is not Q-closed");
}

State PhysAlg::curly(const Element& u, const Element& v) {
  VertexAlgebra& va = brst_->algebra();
  if (u.rep.is_zero() || v.rep.is_zero()) return State();
  int par = class_of(va.lattice(), u.rep).gso_parity();
  if (par < 0) throw std::invalid_argument("curly: argument outside the GSO projected algebra");
  State b0u = va.mode(brst_->registry().get("b"), 0, u.rep);
  State w = va.mode(b0u, 0, v.rep);
  if (par == 1) w *= Scalar(-1);
  return w;
}

BracketResult PhysAlg::bracket(const Element& u, const Element& v) {
  require_representative(u);
  require_representative(v);
  BracketResult r;
  r.value.alpha = u.alpha + v.alpha;
  r.value.parity = (u.parity + v.parity) % 2;
  r.value.label = "[" + u.label + "," + v.label + "]";
  State w = curly(u, v);
  if (u.parity == 0 || v.parity == 0) w = brst_->picture_change(w);
  r.value.rep = std::move(w);
  r.coords = coords(r.value);
  return r;
}

std::vector<Scalar> PhysAlg::coords(const Element& u) {
  ComplexSlice& s = slice(u.alpha, u.picture());
  auto cc = s.class_coords(1, u.rep);
  if (!cc) throw std::logic_error("element " + u.label + " is not a closed chain of its sector");
  return *cc;
}

State PhysAlg::dot_product(const State& u, const State& v) { return brst_->algebra().mode(u, -1, v); }

bool PhysAlg::is_exact_state(const State& v) {
  if (v.is_zero()) return true;
  Grading gr = grade(brst_->algebra().lattice(), v);
  if (gr.ghost.get_den() != 1) throw std::invalid_argument("is_exact_state: fractional ghost number");
  int n = static_cast<int>(gr.ghost.get_num().get_si());
  const Vec alpha = lx_part(v.terms().begin()->first.mom);
  ComplexSlice& s = slice(alpha, gr.picture, n);
  return s.is_exact(n, v);
}

State PhysAlg::odd_preimage(const Element& u) {
  if (u.parity != 1) throw std::invalid_argument("odd_preimage: element is even");
  if (u.alpha.is_zero()) throw std::domain_error("odd_preimage: X_{-1} vanishes on H(0)_{-3/2,1}");
  ComplexSlice& src = slice(u.alpha, Rational(-3, 2));
  const auto& reps = src.representatives(1);
  Echelon e(true);
  for (const State& r : reps) {
    Element x{u.alpha, 1, brst_->picture_change(r), "X" + u.label};
    auto c = coords(x);
    SparseVec v;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) v.emplace_back(static_cast<int>(k), c[k]);
    e.insert(v);
  }
  auto target = coords(u);
  SparseVec t;
  for (std::size_t k = 0; k < target.size(); ++k)
    if (!target[k].is_zero()) t.emplace_back(static_cast<int>(k), target[k]);
  auto sol = e.solve(t);
  if (!sol) throw std::domain_error("odd_preimage: no preimage under X_{-1}");
  State out;
  for (const auto& [i, c] : *sol) out += c * reps[static_cast<std::size_t>(i)];
  return out;
}

Scalar PhysAlg::invariant_form(const Element& u, const Element& v) {
  if (u.parity != v.parity) return Scalar();
  if (!(u.alpha + v.alpha).is_zero()) return Scalar();
  SmallSpace& small = brst_->small();
  if (u.parity == 0) return small.pairing_c(u.rep, v.rep);
  if (u.rep.is_zero()) return Scalar();
  return -small.pairing_c(odd_preimage(u), v.rep);
}

// ---- suites ----

SusyReport susy_check(PhysAlg& g, const std::vector<Element>& samples) {
  SusyReport rep;
  const GammaData& gd = g.gammas();
  std::vector<std::vector<Scalar>> p_coords;
  for (int mu = 1; mu <= 10; ++mu) p_coords.push_back(g.coords(g.P(mu)));
  std::vector<Matrix> gc;
  for (int mu = 1; mu <= 10; ++mu) gc.push_back(mat_mul(gd.gamma[static_cast<std::size_t>(mu - 1)], gd.c));

  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      auto r = g.bracket(g.Q(a), g.Q(b));
      std::vector<Scalar> expect(p_coords.front().size());
      for (int mu = 1; mu <= 10; ++mu)
        axpy(expect, Scalar::inv_sqrt2() * Scalar(metric_g(mu)) * gc[static_cast<std::size_t>(mu - 1)][a][b],
             p_coords[static_cast<std::size_t>(mu - 1)]);
      ++rep.qq_checked;
      if (!(r.coords == expect)) ++rep.qq_failures;
    }

  for (int mu = 1; mu <= 10; ++mu) {
    for (int a = 0; a < 16; ++a) {
      ++rep.pq_checked;
      if (!g.bracket(g.P(mu), g.Q(a)).is_zero()) ++rep.pq_failures;
    }
    for (int nu = 1; nu <= 10; ++nu) {
      ++rep.pp_checked;
      Scalar form = g.invariant_form(g.P(mu), g.P(nu));
      Scalar expect = mu == nu ? Scalar(metric_g(mu)) : Scalar();
      if (!(form == expect) || !g.bracket(g.P(mu), g.P(nu)).is_zero()) ++rep.pp_failures;
    }
    for (const Element& x : samples) {
      ++rep.px_checked;
      auto r = g.bracket(g.P(mu), x);
      std::vector<Scalar> expect;
      axpy(expect, Scalar(metric_g(mu)) * Scalar::from_rational(x.alpha.at(mu - 1)), g.coords(x));
      if (!(r.coords == expect)) ++rep.px_failures;
    }
  }
  return rep;
}

namespace {

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

JacobiReport jacobi_check(PhysAlg& g, const std::vector<Element>& el) {
  JacobiReport rep;
  rep.elements = el.size();
  const std::size_t n = el.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element &u = el[i], &v = el[j];
      auto uv = g.bracket(u, v), vu = g.bracket(v, u);
      std::vector<Scalar> s = uv.coords;
      axpy(s, sign(u.parity * v.parity), vu.coords);
      ++rep.pairs;
      if (!PhysAlg::is_zero_vector(s)) {
        ++rep.antisymmetry_failures;
        rep.failures.push_back("antisymmetry " + u.label + " " + v.label);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Element &u = el[i], &v = el[j], &w = el[k];
        std::vector<Scalar> s;
        axpy(s, sign(u.parity * w.parity), g.bracket(u, g.bracket(v, w).value).coords);
        axpy(s, sign(v.parity * u.parity), g.bracket(v, g.bracket(w, u).value).coords);
        axpy(s, sign(w.parity * v.parity), g.bracket(w, g.bracket(u, v).value).coords);
        ++rep.triples;
        if (!PhysAlg::is_zero_vector(s)) {
          ++rep.jacobi_failures;
          rep.failures.push_back("jacobi " + u.label + " " + v.label + " " + w.label);
        }
      }
  return rep;
}

std::vector<Element> default_jacobi_elements(PhysAlg& g) {
  const Vec alpha = Vec::unit(0) + Vec::unit(9);
  const Vec beta = -Vec::unit(0) + Vec::unit(1) - 2 * Vec::unit(9);
  const Vec neg_gamma = -(alpha + beta);
  std::vector<Element> out;
  for (const Vec& m : {alpha, neg_gamma})
    for (int parity : {0, 1}) {
      auto b = g.basis(m, parity);
      out.push_back(b.at(0));
      out.push_back(b.at(1));
    }
  out.push_back(g.basis(beta, 0).at(0));
  out.push_back(g.P(1));
  out.push_back(g.P(10));
  out.push_back(g.Q(0));
  return out;
}

InvarianceReport invariance_check(PhysAlg& g, const std::vector<Element>& el) {
  InvarianceReport rep;
  auto in_g = [](const Element& e) { return !(e.parity == 1 && e.alpha.is_zero()); };
  for (const Element& u : el)
    for (const Element& v : el) {
      if (!in_g(u) || !in_g(v) || !(u.alpha + v.alpha).is_zero() || u.parity != v.parity) continue;
      ++rep.symmetry_checked;
      if (!(g.invariant_form(u, v) == sign(u.parity * v.parity) * g.invariant_form(v, u))) ++rep.symmetry_failures;
    }
  for (const Element& u : el)
    for (const Element& v : el)
      for (const Element& w : el) {
        if (!in_g(u) || !in_g(v) || !in_g(w)) continue;
        if (!(u.alpha + v.alpha + w.alpha).is_zero()) continue;
        if (&u == &v || &v == &w || &u == &w) continue;
        ++rep.triples;
        Scalar lhs = g.invariant_form(g.bracket(u, v).value, w);
        Scalar rhs = g.invariant_form(u, g.bracket(v, w).value);
        if (!(lhs == rhs)) ++rep.failures;
      }
  return rep;
}

}  // namespace svoa
