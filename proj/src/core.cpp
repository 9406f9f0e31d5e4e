#include "connsum/core.hpp"

#include <algorithm>
#include <numeric>

#include "connsum/errors.hpp"

namespace connsum {

int weight(const Index& k) { return std::accumulate(k.begin(), k.end(), 0); }

bool is_admissible(const Index& k) { return k.empty() || k.back() >= 2; }

Pair::Pair(Index k_, std::vector<Scalar> z_) : k(std::move(k_)), z(std::move(z_)) {
  if (k.size() != z.size()) throw Error(ErrorKind::DomainError, "index and variables differ in length");
  for (int e : k)
    if (e < 1) throw Error(ErrorKind::DomainError, "exponents must be positive");
  for (const Scalar& v : z)
    if (!in_closed_disk(v)) throw Error(ErrorKind::DomainError, "variable outside the closed unit disk: " + v.str());
}

Pair Pair::ones(Index k) {
  std::vector<Scalar> z(k.size(), Scalar(1));
  return Pair(std::move(k), std::move(z));
}

bool Pair::has_zero_variable() const {
  return std::any_of(z.begin(), z.end(), [](const Scalar& v) { return v.is_zero(); });
}

std::strong_ordering operator<=>(const Pair& a, const Pair& b) {
  if (auto c = a.k <=> b.k; c != 0) return c;
  return std::lexicographical_compare_three_way(a.z.begin(), a.z.end(), b.z.begin(), b.z.end());
}

SignedPair arrow(const Pair& p, const Scalar& v) {
  if (v.is_infinite()) {
    if (p.empty()) throw Error(ErrorKind::EmptyUpArrowOnInfinity, "cannot raise the empty index");
    Pair q = p;
    ++q.k.back();
    return {-1, std::move(q)};
  }
  if (v.is_zero()) {
    Pair q = p;
    if (!q.empty()) ++q.k.back();
    return {1, std::move(q)};
  }
  Index k = p.k;
  std::vector<Scalar> z = p.z;
  k.push_back(1);
  z.push_back(v);
  return {1, Pair(std::move(k), std::move(z))};
}

Peeled peel(const Pair& p, Slot slot) {
  if (p.empty()) throw Error(ErrorKind::NotPeelable, "empty index");
  if (p.k.back() == 1) {
    if (p.z.back().is_zero()) throw Error(ErrorKind::NotPeelable, "last entry is (0, 1)");
    Pair base = p;
    base.k.pop_back();
    base.z.pop_back();
    return {p.z.back(), std::move(base), 1};
  }
  Pair base = p;
  --base.k.back();
  if (slot == Slot::Component) return {Scalar::infinity(), std::move(base), -1};
  return {Scalar(0), std::move(base), 1};
}

bool ZTerm::vanishes() const {
  if (sgn(coef) == 0 || bar.empty()) return true;
  return std::any_of(components.begin(), components.end(), [](const Pair& c) { return c.has_zero_variable(); });
}

int ZTerm::total_weight() const {
  int w = weight(bar.k);
  for (const Pair& c : components) w += weight(c.k);
  return w;
}

ZTerm swap_components(const ZTerm& t, const std::vector<int>& perm) {
  const int n = t.arity();
  std::vector<int> seen(perm);
  std::sort(seen.begin(), seen.end());
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (seen != identity) throw Error(ErrorKind::DomainError, "not a permutation of the components");
  ZTerm out;
  out.coef = t.coef;
  out.bar = t.bar;
  for (int i : perm) out.components.push_back(t.components[i]);
  return out;
}

ZTerm drop_empty_component(const ZTerm& t) {
  if (t.arity() <= 1) throw Error(ErrorKind::NoEmptyComponent, "a single component cannot be dropped");
  ZTerm out;
  out.coef = t.coef;
  out.bar = t.bar;
  for (const Pair& c : t.components)
    if (!c.empty()) out.components.push_back(c);
  if (out.arity() == t.arity()) throw Error(ErrorKind::NoEmptyComponent, "no component is empty");
  if (out.components.empty()) out.components.push_back(Pair());
  return out;
}

Convergence convergence_guard(const ZTerm& t) {
  std::vector<const Pair*> live;
  for (const Pair& c : t.components)
    if (!c.empty()) live.push_back(&c);
  if (live.size() >= 2 || t.bar.empty()) return Convergence::Ok;
  if (live.empty()) return Convergence::Ok;
  const Pair& k = *live.front();
  const Pair& l = t.bar;
  if (!is_admissible(k.k) && !is_admissible(l.k) && abs_eq_one(k.z.back()) && abs_eq_one(l.z.back()))
    return Convergence::Diverges;
  return Convergence::Ok;
}

void ZExpr::add(const ZTerm& t) {
  if (t.vanishes()) return;
  Key key{t.components, t.bar};
  auto [it, inserted] = map_.try_emplace(std::move(key), t.coef);
  if (!inserted) {
    it->second += t.coef;
    if (sgn(it->second) == 0) map_.erase(it);
  }
}

void ZExpr::add(const ZExpr& e, const Rational& scale) {
  for (const auto& [key, c] : e.map_) {
    ZTerm t;
    t.coef = c * scale;
    t.components = key.first;
    t.bar = key.second;
    add(t);
  }
}

std::vector<ZTerm> ZExpr::terms() const {
  std::vector<ZTerm> out;
  out.reserve(map_.size());
  for (const auto& [key, c] : map_) out.push_back(ZTerm{c, key.first, key.second});
  return out;
}

bool mpl_guard_ok(const MplTerm& m) {
  if (m.k.size() != m.z.size()) return false;
  if (std::any_of(m.k.begin(), m.k.end(), [](int e) { return e < 1; })) return false;
  if (m.k.empty()) return true;
  const MplTerm s = (m.kind == MplKind::Shuffle) ? m : to_shuffle(m);
  for (const Scalar& v : s.z)
    if (!in_closed_disk(v)) return false;
  return is_admissible(s.k) || abs_lt_one(s.z.back());
}

MplTerm to_shuffle(const MplTerm& m) {
  if (m.kind == MplKind::Shuffle) return m;
  MplTerm out{m.coef, MplKind::Shuffle, m.k, m.z};
  Scalar acc(1);
  for (std::size_t i = m.z.size(); i-- > 0;) {
    acc *= m.z[i];
    out.z[i] = acc;
  }
  return out;
}

MplTerm to_harmonic(const MplTerm& m) {
  if (m.kind == MplKind::Harmonic) return m;
  MplTerm out{m.coef, MplKind::Harmonic, m.k, m.z};
  for (std::size_t i = 0; i + 1 < m.z.size(); ++i) {
    if (m.z[i + 1].is_zero()) throw Error(ErrorKind::ZeroVariable, "ratio with a zero variable");
    out.z[i] = m.z[i] / m.z[i + 1];
  }
  return out;
}

void MplExpr::add(const MplTerm& t) {
  if (sgn(t.coef) == 0) return;
  Key key{t.kind, t.k, t.z};
  auto [it, inserted] = map_.try_emplace(std::move(key), t.coef);
  if (!inserted) {
    it->second += t.coef;
    if (sgn(it->second) == 0) map_.erase(it);
  }
}

void MplExpr::add(const MplExpr& e, const Rational& scale) {
  for (const auto& [key, c] : e.map_) {
    add(MplTerm{c * scale, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
}

std::vector<MplTerm> MplExpr::terms() const {
  std::vector<MplTerm> out;
  out.reserve(map_.size());
  for (const auto& [key, c] : map_) out.push_back(MplTerm{c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  return out;
}

MplExpr operator-(const MplExpr& a, const MplExpr& b) {
  MplExpr out = a;
  out.add(b, -1);
  return out;
}

}  // namespace connsum
