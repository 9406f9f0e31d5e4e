#include "connsum/ohno.hpp"

#include "connsum/boundary.hpp"
#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/transport.hpp"

namespace connsum {

using hoffman::Map;

std::vector<std::vector<int>> weak_compositions(int h, int r) {
  std::vector<std::vector<int>> out;
  if (r == 0) {
    if (h == 0) out.emplace_back();
    return out;
  }
  std::vector<int> c(r, 0);
  // Enumerate by recursion on the first part.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      c[pos] = left;
      out.push_back(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, h);
  return out;
}

MplExpr ohno_sum(const Pair& p, int h) {
  if (h < 0) throw Error(ErrorKind::DomainError, "negative height");
  MplExpr out;
  for (const auto& c : weak_compositions(h, p.size())) {
    Index k = p.k;
    for (int i = 0; i < p.size(); ++i) k[i] += c[i];
    out.add(MplTerm{1, MplKind::Shuffle, k, p.z});
  }
  return out;
}

Pair insert_repeats(const Pair& p, const std::vector<int>& b) {
  Index k;
  std::vector<Scalar> z;
  std::size_t next = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (!p.z[i].is_one()) {
      if (next >= b.size()) throw Error(ErrorKind::DomainError, "too few repeat counts");
      for (int j = 0; j < b[next]; ++j) {
        k.push_back(1);
        z.push_back(p.z[i]);
      }
      ++next;
    }
    k.push_back(p.k[i]);
    z.push_back(p.z[i]);
  }
  if (next != b.size()) throw Error(ErrorKind::DomainError, "too many repeat counts");
  return Pair(std::move(k), std::move(z));
}

namespace {

void require_ohno_input(const Pair& p, int h) {
  if (h < 0) throw Error(ErrorKind::DomainError, "negative height");
  if (p.empty()) throw Error(ErrorKind::DomainError, "empty pair");
  if (!dual_condition(p)) throw Error(ErrorKind::DualConditionViolated, "pair violates the dual condition");
}

}  // namespace

Relation ohno_relation(const Pair& p, int h) {
  require_ohno_input(p, h);
  const DualPair d = dagger(p);
  Relation r;
  r.source = "ohno";
  r.lhs.mpl = ohno_sum(p, h);
  for (int i = 0; i <= h; ++i) {
    for (const auto& b : weak_compositions(i, d.iota)) r.rhs.mpl.add(ohno_sum(insert_repeats(d.pair, b), h - i), d.sign);
  }
  r.details.emplace_back("h", std::to_string(h));
  r.details.emplace_back("iota", std::to_string(d.iota));
  return r;
}

Relation ohno_relation_algebraic(const Pair& p, int h) {
  require_ohno_input(p, h);
  const hoffman::Word w = hoffman::word_of_pair(p);
  Relation r;
  r.source = "ohno-algebraic";
  r.lhs.mpl = hoffman::L(hoffman::apply(Map::Sigma, w, h)[h]);
  r.rhs.mpl = hoffman::L(hoffman::apply(Map::Sigma, hoffman::apply(Map::Tau, w, h))[h]);
  r.details.emplace_back("h", std::to_string(h));
  return r;
}

bool algebraic_ohno_check(const hoffman::Word& w, int order) {
  if (!hoffman::in_A0(w) || w.empty()) throw Error(ErrorKind::NotA0, "word outside A^0");
  const Pair p = hoffman::pair_of_word(w);
  const hoffman::Series lhs = hoffman::apply(Map::Sigma, w, order);
  const hoffman::Series rhs = hoffman::apply(Map::Sigma, hoffman::apply(Map::Tau, w, order));
  for (int h = 0; h <= order; ++h) {
    const Relation comb = ohno_relation(p, h);
    if (!(hoffman::L(lhs[h]) == comb.lhs.mpl)) return false;
    if (!(hoffman::L(rhs[h]) == comb.rhs.mpl)) return false;
  }
  return true;
}

bool rho_tau_commute(const hoffman::Word& w, int order) {
  const hoffman::Series a = hoffman::apply(Map::Rho, hoffman::apply(Map::TauPrime, w, order));
  const hoffman::Series b = hoffman::apply(Map::Tau, hoffman::apply(Map::Rho, w, order));
  return a == b;
}

MplExpr boundary_series(const hoffman::Word& w, int h) {
  if (!hoffman::in_A0(w)) throw Error(ErrorKind::NotA0, "word outside A^0");
  return hoffman::L(hoffman::apply(Map::Sigma, hoffman::apply(Map::Rho, w, h))[h]);
}

Relation landen_relation(const Scalar& z, int k) {
  if (k < 1) throw Error(ErrorKind::DomainError, "weight must be positive");
  Relation r = ohno_relation(Pair({1}, {z}), k - 1);
  r.source = "landen";
  return r;
}

Scalar g_map(const Scalar& a, const Scalar& b) {
  const Scalar ab = a * b;
  return ab / (ab - a - b);
}

MultiTerm multi_term_relation(const std::vector<Scalar>& zs) {
  const int n = static_cast<int>(zs.size());
  if (n != 3 && n != 4) throw Error(ErrorKind::DomainError, "three or four variables expected");
  Scalar s;
  for (const Scalar& z : zs) {
    if (z.is_zero() || !in_closed_disk(z)) throw Error(ErrorKind::DomainError, "variables must lie in the punctured disk");
    if (!abs_lt_one(z)) throw Error(ErrorKind::PreconditionViolated, "|z| < 1 fails for z = " + z.str());
    if (re_eq_half(z) || !re_leq_half(z))
      throw Error(ErrorKind::PreconditionViolated, "Re z < 1/2 fails for z = " + z.str());
    s += z.inv();
  }
  if (!s.is_one()) throw Error(ErrorKind::PreconditionViolated, "reciprocals must sum to 1");

  // Each fundamental-identity term, with its components ordered cyclically
  // and the receiver last.
  std::vector<std::vector<int>> orders;
  if (n == 3) orders = {{1, 0}, {2, 1}, {0, 2}};
  else orders = {{0, 1, 2}, {1, 2, 3}, {2, 3, 0}, {3, 0, 1}};

  if (n == 4) {
    for (const auto& ord : orders) {
      const Scalar g = g_map(zs[ord[0]], zs[ord[1]]);
      if (g.is_infinite() || !in_closed_disk(g))
        throw Error(ErrorKind::PreconditionViolated, "|g(a, b)| <= 1 fails for a = " + zs[ord[0]].str() +
                                                         ", b = " + zs[ord[1]].str());
    }
  }

  MultiTerm out;
  out.relation.source = n == 3 ? "three-term" : "eight-term";
  MplExpr transported;
  for (const auto& ord : orders) {
    ZTerm t;
    for (int i : ord) t.components.push_back(Pair({1}, {zs[i]}));
    t.bar = Pair::ones({1});
    for (const ZTerm& z1 : reduce_to_Z1(t, t.arity() - 1).terms()) transported.add(boundary_reduce(z1));
  }
  out.relation.lhs.mpl.add(transported, n % 2 ? -1 : 1);

  auto li = [](Index k, std::vector<Scalar> z) { return MplTerm{1, MplKind::Shuffle, std::move(k), std::move(z)}; };
  if (n == 3) {
    for (int i = 0; i < 3; ++i) out.closed_form.add(li({1, 1}, {zs[i], mobius_dual(zs[(i + 1) % 3])}));
  } else {
    for (const auto& ord : orders) {
      const Scalar& a = zs[ord[0]];
      const Scalar& b = zs[ord[1]];
      const Scalar& c = zs[ord[2]];
      const Scalar g = g_map(a, b);
      out.closed_form.add(li({1, 1, 1}, {c, g, mobius_dual(b)}));
      out.closed_form.add(li({1, 1, 1}, {c, g, mobius_dual(a)}));
    }
  }
  return out;
}

}  // namespace connsum
