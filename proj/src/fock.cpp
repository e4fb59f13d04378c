#include "svoa/fock.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace svoa {

Monomial::Monomial(const Vec& m, OscList o) : mom(m), osc(std::move(o)) { sort(); }

int Monomial::degree() const {
  int s = 0;
  for (Osc o : osc) s += osc_mode(o);
  return s;
}

int Monomial::count_dir(int dir) const {
  int c = 0;
  for (Osc o : osc) c += osc_dir(o) == dir;
  return c;
}

void Monomial::add(Osc o) { osc.insert(std::upper_bound(osc.begin(), osc.end(), o), o); }

void Monomial::sort() { std::sort(osc.begin(), osc.end()); }

std::string Monomial::str() const {
  std::ostringstream os;
  for (Osc o : osc) os << 'e' << osc_dir(o) << '(' << -osc_mode(o) << ')';
  os << "e^" << mom.str();
  return os.str();
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.osc != b.osc)
    return std::lexicographical_compare(a.osc.begin(), a.osc.end(), b.osc.begin(), b.osc.end());
  return a.mom < b.mom;
}

Scalar State::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void State::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::add(Monomial&& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

State State::operator-() const {
  State r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const State& a, const State& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, Scalar>> State::sorted() const {
  std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return monomial_less(x.first, y.first); });
  return v;
}

std::string State::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << m.str();
  }
  return os.str();
}

Direction Direction::of(const Vec& v) {
  Direction d;
  for (int i = 0; i < kDim; ++i)
    if (v.d[i] != 0) d.comps.emplace_back(i, Scalar::from_fraction(v.d[i], 2));
  return d;
}

State create(int dir, int mode, const State& v) {
  State r;
  for (const auto& [m, c] : v.terms()) {
    Monomial n = m;
    n.add(make_osc(dir, mode));
    r.add(std::move(n), c);
  }
  return r;
}

State heis_apply(const Direction& h, int n, const State& v) {
  State r;
  if (n < 0) {
    for (const auto& [dir, hc] : h.comps) {
      State t = create(dir, -n, v);
      t *= hc;
      r += t;
    }
    return r;
  }
  for (const auto& [m, c] : v.terms()) {
    if (n == 0) {
      Scalar s;
      for (const auto& [dir, hc] : h.comps) s += hc * Scalar::from_fraction(kMetric[dir] * m.mom.d[dir], 2);
      r.add(m, s * c);
      continue;
    }
    for (std::size_t k = 0; k < m.osc.size(); ++k) {
      if (osc_mode(m.osc[k]) != n) continue;
      int dir = osc_dir(m.osc[k]);
      for (const auto& [hd, hc] : h.comps) {
        if (hd != dir) continue;
        Monomial rest = m;
        rest.osc.erase(rest.osc.begin() + static_cast<long>(k));
        r.add(std::move(rest), c * hc * Scalar(long(n) * kMetric[dir]));
      }
    }
  }
  return r;
}

Rational monomial_l0(const Monomial& m) {
  static const Vec rho = background_charge();
  Rational r = make_rational(ip4(m.mom, m.mom), 8) - make_rational(ip4(rho, m.mom), 4);
  return r + m.degree();
}

Rational ghost_number(const Vec& mu) { return make_rational(mu.d[kSigma] - mu.d[kChi], 2); }

Rational picture_number(const Vec& mu) { return make_rational(mu.d[kPhi] + mu.d[kChi], 2); }

std::string Grading::str() const {
  std::ostringstream os;
  os << "{class " << cls.str() << ", degree " << osc_degree << ", L0 " << l0.get_str() << ", ghost "
     << ghost.get_str() << ", picture " << picture.get_str() << ", parity " << gso_parity << '}';
  return os.str();
}

Grading grade(const SuperLattice& L, const Monomial& m) {
  Grading g;
  g.cls = L.coset_class(m.mom);
  g.osc_degree = m.degree();
  g.l0 = monomial_l0(m);
  g.ghost = ghost_number(m.mom);
  g.picture = picture_number(m.mom);
  g.gso_parity = g.cls.gso_parity();
  return g;
}

Grading grade(const SuperLattice& L, const State& v) {
  if (v.is_zero()) throw std::invalid_argument("zero state has no grading");
  std::optional<Grading> common;
  bool homogeneous = true;
  std::set<std::string> seen;
  for (const auto& [m, c] : v.sorted()) {
    Grading g = grade(L, m);
    g.osc_degree = 0;  // degree is not part of homogeneity
    seen.insert(g.str());
    if (!common)
      common = g;
    else if (!(g.cls == common->cls && g.l0 == common->l0 && g.ghost == common->ghost &&
               g.picture == common->picture))
      homogeneous = false;
  }
  if (!homogeneous) {
    std::string msg = "inhomogeneous state; grades:";
    for (const auto& s : seen) msg += " " + s;
    throw std::invalid_argument(msg);
  }
  return *common;
}

namespace {

void lists_rec(const std::vector<Osc>& codes, std::size_t start, int remaining, OscList& cur,
               std::vector<OscList>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < codes.size(); ++i) {
    int m = osc_mode(codes[i]);
    if (m > remaining) continue;
    cur.push_back(codes[i]);
    lists_rec(codes, i, remaining - m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OscList> oscillator_lists(const std::vector<int>& dirs, int level) {
  std::vector<OscList> out;
  if (level < 0) return out;
  std::vector<Osc> codes;
  for (int m = 1; m <= level; ++m)
    for (int d : dirs) codes.push_back(make_osc(d, m));
  std::sort(codes.begin(), codes.end());
  OscList cur;
  lists_rec(codes, 0, level, cur, out);
  return out;
}

nlohmann::json to_json(const State& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : v.sorted()) {
    nlohmann::json t;
    nlohmann::json mom = nlohmann::json::array();
    for (int i = 0; i < kDim; ++i) mom.push_back(m.mom.at(i).get_str());
    t["momentum"] = mom;
    nlohmann::json os = nlohmann::json::array();
    for (Osc o : m.osc) os.push_back({osc_dir(o), osc_mode(o)});
    t["oscillators"] = os;
    t["coeff"] = c.str();
    arr.push_back(t);
  }
  return arr;
}

State state_from_json(const nlohmann::json& j) {
  State v;
  for (const auto& t : j) {
    Monomial m;
    const auto& mom = t.at("momentum");
    if (mom.size() != kDim) throw std::invalid_argument("momentum must have 18 coordinates");
    for (int i = 0; i < kDim; ++i) {
      Rational q;
      if (q.set_str(mom[i].get<std::string>(), 10) != 0) throw std::invalid_argument("bad coordinate");
      q.canonicalize();
      Rational tw = 2 * q;
      if (tw.get_den() != 1) throw std::invalid_argument("coordinate not in (1/2)Z");
      m.mom.d[i] = static_cast<std::int8_t>(tw.get_num().get_si());
    }
    for (const auto& o : t.at("oscillators")) {
      int dir = o.at(0).get<int>(), n = o.at(1).get<int>();
      if (dir < 0 || dir >= kDim || n < 1) throw std::invalid_argument("bad oscillator");
      m.osc.push_back(make_osc(dir, n));
    }
    m.sort();
    v.add(m, Scalar::parse(t.at("coeff").get<std::string>()));
  }
  return v;
}

}  // namespace svoa
