#include "connsum/transport.hpp"

#include <numeric>

#include "connsum/errors.hpp"

namespace connsum {

namespace {

[[noreturn]] void step_fails(const std::string& why) { throw Error(ErrorKind::NotTransportableStep, why); }

bool has_empty_component(const ZTerm& t) {
  for (const Pair& c : t.components)
    if (c.empty()) return true;
  return false;
}

bool is_all_ones(const Index& k) {
  for (int e : k)
    if (e != 1) return false;
  return true;
}

}  // namespace

ZExpr fundamental_step(const ZTerm& t) {
  const int n = t.arity();
  if (n < 2) step_fails("the transport relation needs at least two components");
  if (t.bar.empty()) step_fails("empty bar");

  std::vector<Peeled> peeled;
  std::vector<Scalar> vs;
  for (int i = 0; i + 1 < n; ++i) {
    if (t.components[i].empty()) step_fails("component " + std::to_string(i + 1) + " is empty");
    peeled.push_back(peel(t.components[i], Slot::Component));
    vs.push_back(peeled.back().v);
  }
  const Peeled bar = peel(t.bar, Slot::Bar);
  const Scalar& tv = bar.v;

  Scalar s;
  for (const Scalar& v : vs) s += v.inv();
  if (!in_B(vs, tv)) step_fails("peeled variables are not in B(" + tv.str() + ")");

  const Pair& receiver = t.components[n - 1];
  if (receiver.empty() && s == tv) step_fails("empty receiver with sum of reciprocals equal to t");
  if (n == 2 && abs_eq_one(tv)) {
    if (peeled[0].base.empty() && (tv - vs[0].inv()).abs_sq() == 1)
      step_fails("|t - 1/v_1| = 1 with an exhausted first component");
    if (receiver.empty() && abs_eq_one(vs[0])) step_fails("|v_1| = 1 with an empty receiver");
  }

  const Scalar vn = (tv - s).inv();
  const SignedPair raised = arrow(receiver, vn);

  ZExpr out;
  for (int i = 0; i + 1 < n; ++i) {
    ZTerm term;
    term.coef = t.coef * (-peeled[i].sign * raised.sign);
    term.components = t.components;
    term.components[i] = peeled[i].base;
    term.components[n - 1] = raised.pair;
    term.bar = t.bar;
    out.add(term);
  }
  if (!bar.base.empty()) {
    ZTerm term;
    term.coef = t.coef * (-bar.sign * raised.sign);
    term.components = t.components;
    term.components[n - 1] = raised.pair;
    term.bar = bar.base;
    out.add(term);
  }
  return out;
}

bool is_transportable(const ZTerm& t, int j) {
  const int n = t.arity();
  if (n < 2) return true;
  if (j < 0 || j >= n) throw Error(ErrorKind::DomainError, "receiver out of range");

  std::vector<Scalar> ts(t.bar.z.begin(), t.bar.z.end());
  if (!is_all_ones(t.bar.k)) ts.push_back(Scalar(0));

  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != j) others.push_back(i);
  for (int i : others)
    if (t.components[i].empty()) return false;

  // Every non-empty subset J of the other components and every choice of one
  // variable per member of J.
  const int m = static_cast<int>(others.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> members;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) members.push_back(others[b]);
    std::vector<int> pos(members.size(), 0);
    while (true) {
      std::vector<Scalar> choice;
      for (std::size_t q = 0; q < members.size(); ++q) choice.push_back(t.components[members[q]].z[pos[q]]);
      for (const Scalar& w : ts) {
        for (const Scalar& v : choice)
          if (v.is_zero()) return false;
        if (!in_B(choice, w)) return false;
      }
      std::size_t q = 0;
      while (q < members.size() && ++pos[q] == t.components[members[q]].size()) pos[q++] = 0;
      if (q == members.size()) break;
    }
  }

  for (const Scalar& w : t.bar.z) {
    if (!abs_eq_one(w)) continue;
    for (int i : others) {
      const Scalar& z1 = t.components[i].z.front();
      if (z1.is_zero()) return false;
      if ((w - z1.inv()).abs_sq() == 1) return false;
    }
  }

  // When every live non-receiver component ends in a raised exponent, all
  // peeled variables are infinite and the receiver gets 1/t.  That value
  // must stay in the disk.
  bool vertical = false;
  for (int i : others)
    for (int e : t.components[i].k)
      if (e >= 2) vertical = true;
  if (vertical) {
    for (const Scalar& w : ts)
      if (!w.is_zero() && !abs_eq_one(w)) return false;
  }
  return true;
}

std::optional<int> find_receiver(const ZTerm& t) {
  for (int j = t.arity() - 1; j >= 0; --j)
    if (is_transportable(t, j)) return j;
  return std::nullopt;
}

namespace {

ZTerm drop_with_trace(const ZTerm& t, Trace* trace) {
  ZTerm d = drop_empty_component(t);
  if (trace) trace->push_back({"drop_empty", t, ZExpr(d), {}, {}});
  return d;
}

ZExpr reduce_with_last_receiver(const ZTerm& start, Trace* trace) {
  ZExpr result;
  ZExpr pending(start);
  while (!pending.empty()) {
    ZExpr next;
    for (const ZTerm& term : pending.terms()) {
      if (term.arity() == 1) {
        result.add(term);
        continue;
      }
      if (has_empty_component(term)) {
        ZTerm d = drop_with_trace(term, trace);
        (d.arity() == 1 ? result : next).add(d);
        continue;
      }
      ZExpr out;
      try {
        out = fundamental_step(term);
      } catch (const Error& e) {
        throw Error(ErrorKind::Internal, std::string("transport step failed on a transportable term: ") + e.what());
      }
      if (trace) trace->push_back({"transport", term, out, {}, {}});
      next.add(out);
    }
    pending = std::move(next);
  }
  return result;
}

void check_convergent(const ZTerm& t) {
  if (convergence_guard(t) == Convergence::Diverges) throw Error(ErrorKind::DivergentInput, "Z_1 value diverges");
}

}  // namespace

ZExpr reduce_to_Z1(const ZTerm& t, int j, Trace* trace) {
  if (t.vanishes()) return {};
  check_convergent(t);
  const int n = t.arity();
  if (n == 1) return ZExpr(t);
  if (j < 0 || j >= n) throw Error(ErrorKind::DomainError, "receiver out of range");
  if (t.components[j].empty()) throw Error(ErrorKind::PreconditionViolated, "the receiver must be non-empty");

  ZTerm cur = t;
  if (j != n - 1) {
    std::vector<int> perm;
    for (int i = 0; i < n; ++i)
      if (i != j) perm.push_back(i);
    perm.push_back(j);
    cur = swap_components(t, perm);
    if (trace) trace->push_back({"swap", t, ZExpr(cur), {}, perm});
  }
  if (has_empty_component(cur)) cur = drop_with_trace(cur, trace);
  if (cur.arity() == 1) return ZExpr(cur);
  if (!is_transportable(cur, cur.arity() - 1))
    throw Error(ErrorKind::NotTransportable, "variables are not transportable with the chosen receiver");
  return reduce_with_last_receiver(cur, trace);
}

ZExpr reduce_to_Z1(const ZTerm& t, Trace* trace) {
  if (t.vanishes()) return {};
  check_convergent(t);
  ZTerm cur = t;
  if (cur.arity() > 1 && has_empty_component(cur)) cur = drop_with_trace(cur, trace);
  if (cur.arity() == 1) return ZExpr(cur);
  const auto j = find_receiver(cur);
  if (!j) throw Error(ErrorKind::NotTransportable, "no component can serve as receiver");
  return reduce_to_Z1(cur, *j, trace);
}

}  // namespace connsum
