#include "connsum/duality.hpp"

#include "connsum/errors.hpp"
#include "connsum/transport.hpp"

namespace connsum {

MplExpr mpl_difference(const Relation& r) { return r.lhs.mpl - r.rhs.mpl; }

bool dual_condition(const Pair& p) {
  if (p.empty()) return true;
  for (const Scalar& z : p.z) {
    if (z.is_zero()) return false;
    const Scalar one(1);
    if (!in_B(std::span<const Scalar>(&z, 1), one)) return false;
  }
  if (re_eq_half(p.z.front())) return false;
  if (!is_admissible(p.k) && abs_eq_one(p.z.back())) return false;
  return true;
}

Index mzv_dual(const Index& k) {
  if (!is_admissible(k)) throw Error(ErrorKind::DomainError, "the dual index needs an admissible index");
  std::vector<std::pair<int, int>> blocks;  // (a, b) with k-block ({1}^{a-1}, b+1)
  int ones = 0;
  for (int e : k) {
    if (e == 1) {
      ++ones;
    } else {
      blocks.emplace_back(ones + 1, e - 1);
      ones = 0;
    }
  }
  Index out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.insert(out.end(), it->second - 1, 1);
    out.push_back(it->first + 1);
  }
  return out;
}

namespace {

struct Block {
  Index l;     // admissible index with trivial variables
  int a = 1;   // one more than the number of trivial unit entries before w
  Scalar w;
  int b = 1;   // exponent of w
};

void append_ones(Index& k, std::vector<Scalar>& z, const Index& part) {
  for (int e : part) {
    k.push_back(e);
    z.emplace_back(1);
  }
}

}  // namespace

DualPair dagger(const Pair& p) {
  if (!dual_condition(p)) throw Error(ErrorKind::DualConditionViolated, "pair violates the dual condition");
  std::vector<Block> blocks;
  Index run;
  for (int i = 0; i < p.size(); ++i) {
    if (p.z[i].is_one()) {
      run.push_back(p.k[i]);
      continue;
    }
    Block blk;
    int trailing = 0;
    while (!run.empty() && run.back() == 1) {
      run.pop_back();
      ++trailing;
    }
    blk.l = run;
    blk.a = trailing + 1;
    blk.w = p.z[i];
    blk.b = p.k[i];
    blocks.push_back(std::move(blk));
    run.clear();
  }
  // The tail run is admissible by the dual condition.

  Index k;
  std::vector<Scalar> z;
  append_ones(k, z, mzv_dual(run));
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    append_ones(k, z, Index(it->b - 1, 1));
    k.push_back(it->a);
    z.push_back(mobius_dual(it->w));
    append_ones(k, z, mzv_dual(it->l));
  }
  const int iota = static_cast<int>(blocks.size());
  return {iota % 2 ? -1 : 1, Pair(std::move(k), std::move(z)), iota};
}

DualPair reduce_duality(const Pair& p) {
  if (!dual_condition(p)) throw Error(ErrorKind::DualConditionViolated, "pair violates the dual condition");
  int iota = 0;
  for (const Scalar& z : p.z)
    if (!z.is_one()) ++iota;
  ZTerm cur{1, {p, Pair()}, Pair::ones({1})};
  while (!cur.components[0].empty()) {
    std::vector<ZTerm> next = fundamental_step(cur).terms();
    if (next.size() != 1) throw Error(ErrorKind::Internal, "duality transport produced more than one term");
    cur = std::move(next.front());
  }
  const int sign = cur.coef > 0 ? 1 : -1;
  if (abs(cur.coef) != 1) throw Error(ErrorKind::Internal, "duality transport changed the coefficient magnitude");
  return {sign, cur.components[1], iota};
}

Relation duality_relation(const Pair& p) {
  const DualPair d = dagger(p);
  Relation r;
  r.source = "duality";
  r.lhs.mpl.add(MplTerm{1, MplKind::Shuffle, p.k, p.z});
  r.rhs.mpl.add(MplTerm{d.sign, MplKind::Shuffle, d.pair.k, d.pair.z});
  r.details.emplace_back("iota", std::to_string(d.iota));
  return r;
}

MplExpr normalize_by_duality(const MplExpr& e, const std::function<bool(const MplTerm&)>& keep) {
  MplExpr out;
  for (const MplTerm& raw : e.terms()) {
    const MplTerm t = to_shuffle(raw);
    if (keep(t)) {
      out.add(t);
      continue;
    }
    Pair p;
    try {
      p = Pair(t.k, t.z);
    } catch (const Error&) {
      out.add(t);
      continue;
    }
    if (!dual_condition(p)) {
      out.add(t);
      continue;
    }
    const DualPair d = dagger(p);
    out.add(MplTerm{t.coef * d.sign, MplKind::Shuffle, d.pair.k, d.pair.z});
  }
  return out;
}

}  // namespace connsum
