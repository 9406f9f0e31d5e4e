#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// Everything here is written directly from the defining sums, without the
// dynamic programming used by the library.

#include <algorithm>
#include <functional>
#include <vector>

#include "connsum/numeric.hpp"
#include "connsum/random.hpp"

namespace connsum::oracle {

inline Rational factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

inline Rational brute_connector(const std::vector<long>& a) {
  Rational num = 1;
  long total = 0;
  for (long x : a) {
    num *= factorial(x);
    total += x;
  }
  return num / factorial(total);
}

// All strictly increasing chains of p with top at most M, keyed by top.
inline std::vector<Scalar> chain_sums(const Pair& p, long M) {
  std::vector<Scalar> by_top(M + 1);
  if (p.empty()) {
    by_top[0] = Scalar(1);
    return by_top;
  }
  std::vector<long> m(p.size());
  std::function<void(int, long, Scalar)> rec = [&](int i, long prev, Scalar acc) {
    if (i == p.size()) {
      by_top[prev] += acc;
      return;
    }
    for (long v = prev + 1; v <= M; ++v) rec(i + 1, v, acc * pow(p.z[i], v - prev) * pow(Scalar(v), -p.k[i]));
  };
  rec(0, 0, Scalar(1));
  return by_top;
}

// Weak chains 0 < q_1 <= ... <= q_s = top, times top.
inline Scalar weak_sum(const Pair& l, long top) {
  Scalar total;
  std::function<void(int, long, Scalar)> rec = [&](int i, long prev, Scalar acc) {
    if (i == l.size()) {
      if (prev == top) total += acc;
      return;
    }
    for (long v = std::max(prev, 1L); v <= top; ++v) rec(i + 1, v, acc * pow(l.z[i], v - prev) * pow(Scalar(v), -l.k[i]));
  };
  rec(0, 0, Scalar(1));
  return total * Scalar(top);
}

inline Scalar brute_zterm(const ZTerm& t, long M) {
  std::vector<std::vector<Scalar>> sums;
  for (const Pair& c : t.components) sums.push_back(chain_sums(c, M));
  Scalar total;
  std::vector<long> tops(t.arity());
  std::function<void(int)> rec = [&](int i) {
    if (i == t.arity()) {
      long s = 0;
      Scalar prod(1);
      for (int j = 0; j < t.arity(); ++j) {
        s += tops[j];
        prod *= sums[j][tops[j]];
      }
      if (s == 0 || prod.is_zero()) return;
      total += prod * Scalar(brute_connector(tops)) * weak_sum(t.bar, s);
      return;
    }
    for (long v = 0; v <= M; ++v) {
      tops[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total * Scalar(t.coef);
}

inline Scalar brute_mpl(const MplTerm& m, long N) {
  MplTerm s = m.kind == MplKind::Shuffle ? m : to_shuffle(m);
  Pair p;
  p.k = s.k;
  p.z = s.z;
  Scalar total;
  auto sums = chain_sums(p, N);
  for (long top = 1; top <= N; ++top) total += sums[top];
  return total * Scalar(m.coef);
}


inline std::pair<Scalar, Scalar> brute_telescoping(const TelescopingInstance& in) {
  const std::size_t d = in.m_minus.size();
  long sigma = 0;
  Rational prod = 1;
  for (long m : in.m_plus) {
    sigma += m;
    prod *= m;
  }
  auto term = [&](const std::vector<long>& a, std::size_t skip) {
    std::vector<long> all = a;
    all.insert(all.end(), in.m_plus.begin(), in.m_plus.end());
    Scalar w(brute_connector(all));
    for (std::size_t k = 0; k < d; ++k)
      if (k != skip) w *= pow(in.v[k], a[k] - in.m_minus[k]) / Scalar(a[k]);
    return w;
  };
  Scalar first, second, at_q, at_n;
  std::vector<long> a(d);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < d) {
      for (long x = in.m_minus[i]; x <= in.N; ++x) {
        a[i] = x;
        rec(i + 1);
      }
      return;
    }
    long e = sigma;
    int at_floor = 0;
    std::size_t floor_index = 0;
    for (std::size_t k = 0; k < d; ++k) {
      e += a[k];
      if (a[k] == in.m_minus[k]) {
        ++at_floor;
        floor_index = k;
      }
    }
    if (e > in.N) return;
    Scalar tp = pow(in.t, e - in.q);
    if (at_floor == 1 && e >= in.q && e < in.N) first += term(a, floor_index) * tp;
    if (at_floor == 0) {
      Scalar base = term(a, d);
      if (e >= in.q && e < in.N) second += base * tp;
      if (e == in.q) at_q += base;
      if (e == in.N) at_n += base * tp;
    }
  };
  rec(0);
  Scalar inv(Rational(1 / prod));
  return {first * inv - Scalar(sigma) * inv * second, Scalar(-in.q) * inv * at_q + Scalar(in.N) * inv * at_n};
}

// Random hypotheses for the telescoping identity with 8 <= N <= max_n.
inline TelescopingInstance random_instance(Rng& rng, bool zero_t, long max_n = 12) {
  TelescopingInstance in;
  const int d = zero_t ? 2 : 1 + static_cast<int>(rng() % 2);
  const int n = d + 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < d; ++i) in.m_minus.push_back(static_cast<long>(rng() % 3));
  for (int i = d; i < n; ++i) in.m_plus.push_back(1 + static_cast<long>(rng() % 3));
  in.N = 8 + static_cast<long>(rng() % (max_n - 7));
  in.q = static_cast<long>(rng() % 6);
  if (zero_t) {
    Scalar v = random_disk_scalar(rng, 4);
    in.v = {v, -v};
    in.t = Scalar(0);
  } else {
    for (;;) {
      in.v.clear();
      Scalar s;
      for (int i = 0; i < d; ++i) {
        in.v.push_back(random_disk_scalar(rng, 4));
        s += in.v.back().inv();
      }
      if (in_closed_disk(s)) {
        in.t = s;
        break;
      }
    }
  }
  return in;
}

}  // namespace connsum::oracle
