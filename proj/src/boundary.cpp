#include "connsum/boundary.hpp"

#include "connsum/errors.hpp"
#include "connsum/transport.hpp"

namespace connsum {

HLetter merge(const HLetter& a, const HLetter& b) { return {a.e + b.e, a.x * b.x}; }

namespace {

HWordH prepend(const HLetter& a, const HWordH& w) {
  HWordH out;
  out.reserve(w.size() + 1);
  out.push_back(a);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

HWordBag quasi_shuffle(const HWordH& u, const HWordH& v) {
  if (u.empty()) return {{v, 1}};
  if (v.empty()) return {{u, 1}};
  const HWordH u1(u.begin() + 1, u.end());
  const HWordH v1(v.begin() + 1, v.end());
  HWordBag out;
  for (const auto& [w, c] : quasi_shuffle(u1, v)) out[prepend(u.front(), w)] += c;
  for (const auto& [w, c] : quasi_shuffle(u, v1)) out[prepend(v.front(), w)] += c;
  for (const auto& [w, c] : quasi_shuffle(u1, v1)) out[prepend(merge(u.front(), v.front()), w)] += c;
  return out;
}

HWordBag weak_expand(const HWordH& v) {
  if (v.empty()) return {{HWordH{}, 1}};
  HWordBag out;
  // Choose the first run v[0..len) and merge it into one letter.
  HLetter head = v.front();
  for (std::size_t len = 1; len <= v.size(); ++len) {
    if (len > 1) head = merge(head, v[len - 1]);
    const HWordH rest(v.begin() + static_cast<long>(len), v.end());
    for (const auto& [w, c] : weak_expand(rest)) out[prepend(head, w)] += c;
  }
  return out;
}

MplExpr boundary_reduce(const ZTerm& t, Trace* trace) {
  if (t.arity() != 1) throw Error(ErrorKind::PreconditionViolated, "the boundary condition applies to Z_1 only");
  MplExpr out;
  if (t.vanishes() || t.components[0].empty()) {
    if (trace) trace->push_back({"boundary", t, {}, out, {}});
    return out;
  }
  if (convergence_guard(t) == Convergence::Diverges) throw Error(ErrorKind::DivergentInput, "Z_1 value diverges");

  const Pair& k = t.components[0];
  const Pair& l = t.bar;
  const int r = k.size();
  const int s = l.size();
  for (const Scalar& w : l.z)
    if (w.is_zero()) throw Error(ErrorKind::ZeroVariable, "zero variable in the bar");

  HWordH strict;
  for (int i = 0; i + 1 < r; ++i) strict.push_back({k.k[i], k.z[i] / k.z[i + 1]});
  HWordH weak;
  for (int i = 0; i + 1 < s; ++i) weak.push_back({l.k[i], l.z[i] / l.z[i + 1]});
  const HLetter top{k.k[r - 1] + l.k[s - 1] - 1, k.z[r - 1] * l.z[s - 1]};

  HWordBag words;
  for (int j = 0; j < s; ++j) {
    // weak[0..j) sit strictly below the top, weak[j..) coincide with it.
    HLetter last = top;
    for (int i = j; i + 1 < s; ++i) last = merge(last, weak[i]);
    const HWordH below(weak.begin(), weak.begin() + j);
    for (const auto& [wb, cb] : weak_expand(below)) {
      for (const auto& [w, c] : quasi_shuffle(strict, wb)) {
        HWordH full = w;
        full.push_back(last);
        words[full] += c * cb;
      }
    }
  }

  for (const auto& [w, c] : words) {
    if (c == 0) continue;
    MplTerm h{t.coef * c, MplKind::Harmonic, {}, {}};
    for (const HLetter& a : w) {
      h.k.push_back(a.e);
      h.z.push_back(a.x);
    }
    out.add(to_shuffle(h));
  }
  if (trace) trace->push_back({"boundary", t, {}, out, {}});
  return out;
}

MplExpr reduce(const ZTerm& t, Trace* trace) {
  MplExpr out;
  for (const ZTerm& z1 : reduce_to_Z1(t, trace).terms()) out.add(boundary_reduce(z1, trace));
  return out;
}

}  // namespace connsum
