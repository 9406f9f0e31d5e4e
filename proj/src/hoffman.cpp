#include "connsum/hoffman.hpp"

#include <algorithm>

#include "connsum/errors.hpp"

namespace connsum::hoffman {

bool in_alphabet(const Scalar& z) {
  if (z.is_one()) return true;
  return !z.is_zero() && in_closed_disk(z) && re_leq_half(z);
}

void LinComb::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = map_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) map_.erase(it);
  }
}

void LinComb::add(const LinComb& o, const Rational& scale) {
  for (const auto& [w, c] : o.map_) add(w, c * scale);
}

LinComb operator*(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [u, cu] : a.map_) {
    for (const auto& [v, cv] : b.map_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

namespace {

int checked_order(int order) {
  if (order < 0) throw Error(ErrorKind::TruncationTooSmall, "truncation order must be non-negative");
  return order;
}

}  // namespace

Series::Series(int order) : coeffs_(checked_order(order) + 1) {}

Series::Series(const Word& w, int order) : coeffs_(checked_order(order) + 1) { coeffs_[0].add(w, 1); }

Series operator*(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].empty()) continue;
      out[i + j].add(a[i] * b[j]);
    }
  }
  return out;
}

namespace {

void check_letter(const Letter& a) {
  if (!a.is_x && !in_alphabet(a.z)) throw Error(ErrorKind::AlphabetViolation, "e_z with z = " + a.z.str());
}

/// lead * sum_i (sign)^i rep^i t^i, optionally negated.
Series geometric(const Letter& lead, const Letter& rep, int sign, int overall, int order) {
  Series s(order);
  Word w{lead};
  Rational c = overall;
  for (int i = 0; i <= order; ++i) {
    s[i].add(w, c);
    w.push_back(rep);
    c *= sign;
  }
  return s;
}

bool is_anti(Map m) { return m == Map::Tau || m == Map::TauPrime; }

}  // namespace

Series image(Map m, const Letter& a, int order) {
  check_letter(a);
  const Letter x = Letter::x();
  const Letter e1 = Letter::e(Scalar(1));
  switch (m) {
    case Map::Sigma:
      if (a.is_x) return Series(Word{a}, order);
      return geometric(a, x, 1, 1, order);
    case Map::Rho:
      if (a.is_x) return Series(Word{a}, order);
      return geometric(a, a, 1, 1, order);
    case Map::SigmaInv: {
      Series s(Word{a}, order);
      if (!a.is_x && order >= 1) s[1].add(Word{a, x}, -1);
      return s;
    }
    case Map::RhoInv:
      if (a.is_x) return Series(Word{a}, order);
      return geometric(a, a, -1, 1, order);
    case Map::Tau: {
      if (a.is_x) return Series(Word{e1}, order);
      if (a.z.is_one()) return Series(Word{x}, order);
      const Letter d = Letter::e(mobius_dual(a.z));
      return geometric(d, d, 1, -1, order);
    }
    case Map::TauPrime: {
      if (a.is_x) return geometric(e1, e1, -1, 1, order);
      if (a.z.is_one()) return geometric(x, x, 1, 1, order);
      const Letter d = Letter::e(mobius_dual(a.z));
      return geometric(d, d, -1, -1, order);
    }
  }
  throw Error(ErrorKind::Internal, "unknown map");
}

Series apply(Map m, const Series& s) {
  const int order = s.order();
  std::map<Letter, Series> cache;
  auto img = [&](const Letter& a) -> const Series& {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, image(m, a, order)).first;
    return it->second;
  };
  Series out(order);
  for (int h = 0; h <= order; ++h) {
    for (const auto& [w, c] : s[h].terms()) {
      Series prod(Word{}, order - h);
      if (is_anti(m)) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * img(*it);
      } else {
        for (const Letter& a : w) prod = prod * img(a);
      }
      for (int i = 0; i + h <= order; ++i) out[i + h].add(prod[i], c);
    }
  }
  return out;
}

Series apply(Map m, const Word& w, int order) { return apply(m, Series(w, order)); }

bool in_A1(const Word& w) { return w.empty() || !w.front().is_x; }

bool in_A0(const Word& w) {
  if (w.empty()) return true;
  const Letter& first = w.front();
  if (first.is_x || re_eq_half(first.z)) return false;
  const Letter& last = w.back();
  if (w.size() == 1) return !abs_eq_one(first.z);
  return last.is_x || !abs_eq_one(last.z);
}

Word word_of_pair(const Pair& p) {
  Word w;
  for (int i = 0; i < p.size(); ++i) {
    Letter a = Letter::e(p.z[i]);
    check_letter(a);
    w.push_back(a);
    w.insert(w.end(), p.k[i] - 1, Letter::x());
  }
  return w;
}

Pair pair_of_word(const Word& w) {
  if (!in_A1(w)) throw Error(ErrorKind::AlphabetViolation, "word does not start with e_z");
  Index k;
  std::vector<Scalar> z;
  for (const Letter& a : w) {
    if (a.is_x) {
      ++k.back();
    } else {
      check_letter(a);
      k.push_back(1);
      z.push_back(a.z);
    }
  }
  return Pair(std::move(k), std::move(z));
}

MplExpr L(const LinComb& c) {
  MplExpr out;
  for (const auto& [w, coef] : c.terms()) {
    if (!in_A0(w)) throw Error(ErrorKind::NotA0, "word outside A^0");
    const Pair p = pair_of_word(w);
    out.add(MplTerm{coef, MplKind::Shuffle, p.k, p.z});
  }
  return out;
}

}  // namespace connsum::hoffman
