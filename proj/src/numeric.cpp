#include "connsum/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "connsum/errors.hpp"

namespace connsum {

// ---------------------------------------------------------------------------
// Arithmetic adaptors so the same recurrences serve floating and exact sums.

namespace {

struct FloatOps {
  using T = Complex;
  static T zero() { return {0.0, 0.0}; }
  static T one() { return {1.0, 0.0}; }
  static T from(const Scalar& s) { return s.to_complex(); }
  static T from(const Rational& q) { return {q.get_d(), 0.0}; }
  static T recip_pow(long m, int k) { return {std::pow(static_cast<double>(m), -k), 0.0}; }
  static T integer(long m) { return {static_cast<double>(m), 0.0}; }
};

struct ExactOps {
  using T = Scalar;
  static T zero() { return Scalar(0); }
  static T one() { return Scalar(1); }
  static T from(const Scalar& s) { return s; }
  static T from(const Rational& q) { return Scalar(q); }
  static T recip_pow(long m, int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return Scalar(Rational(mpz_class(1), p));
  }
  static T integer(long m) { return Scalar(m); }
};

/// Streams f(m) = sum over 0 = m_0 < m_1 < ... < m_r = m of prod z_i^{m_i - m_{i-1}} / m_i^{k_i}.
template <class Ops>
class StrictStream {
 public:
  using T = typename Ops::T;
  explicit StrictStream(const Pair& p) : p_(p), acc_(p.size() + 1, Ops::zero()), prev_(p.size() + 1, Ops::zero()) {
    for (const Scalar& z : p.z) z_.push_back(Ops::from(z));
    prev_[0] = Ops::one();  // P_0(0) = 1
  }

  /// Value at m = 0.
  T initial() const { return p_.empty() ? Ops::one() : Ops::zero(); }

  /// Advances to the next m (starting at 1) and returns f(m).
  T next() {
    ++m_;
    const int r = p_.size();
    std::vector<T> cur(r + 1, Ops::zero());
    for (int d = 1; d <= r; ++d) {
      acc_[d] = z_[d - 1] * (acc_[d] + prev_[d - 1]);
      cur[d] = acc_[d] * Ops::recip_pow(m_, p_.k[d - 1]);
    }
    prev_ = std::move(cur);
    return r == 0 ? Ops::zero() : prev_[r];
  }

 private:
  const Pair& p_;
  std::vector<T> z_;
  std::vector<T> acc_;
  std::vector<T> prev_;
  long m_ = 0;
};

template <class Ops>
std::vector<typename Ops::T> strict_profile(const Pair& p, long M) {
  StrictStream<Ops> s(p);
  std::vector<typename Ops::T> f;
  f.reserve(M + 1);
  f.push_back(s.initial());
  for (long m = 1; m <= M; ++m) f.push_back(s.next());
  return f;
}

/// g(N) = N * sum over 0 < q_1 <= ... <= q_s = N of prod w_i^{q_i - q_{i-1}} / q_i^{l_i}.
template <class Ops>
std::vector<typename Ops::T> bar_profile(const Pair& l, long maxN) {
  using T = typename Ops::T;
  const int s = l.size();
  std::vector<T> g(maxN + 1, Ops::zero());
  if (s == 0) return g;
  std::vector<T> w;
  for (const Scalar& x : l.z) w.push_back(Ops::from(x));
  std::vector<T> v(s + 1, Ops::zero());
  std::vector<T> u(s + 1, Ops::zero());
  v[1] = Ops::one();
  for (long N = 1; N <= maxN; ++N) {
    for (int d = 1; d <= s; ++d) {
      v[d] = (d == 1) ? w[0] * v[1] : w[d - 1] * v[d] + u[d - 1];
      u[d] = v[d] * Ops::recip_pow(N, l.k[d - 1]);
    }
    g[N] = Ops::integer(N) * u[s];
  }
  return g;
}

std::vector<double> log_factorials(long n) {
  std::vector<double> lf(n + 1);
  for (long i = 0; i <= n; ++i) lf[i] = std::lgamma(static_cast<double>(i) + 1.0);
  return lf;
}

constexpr double kLogCutoff = -46.0;

struct FloatProfiles {
  std::vector<std::vector<Complex>> f;
  std::vector<Complex> g;
  std::vector<double> lf;
  Complex coef;
};

FloatProfiles float_profiles(const ZTerm& t, long M) {
  FloatProfiles pr;
  for (const Pair& c : t.components) pr.f.push_back(strict_profile<FloatOps>(c, M));
  const long maxN = M * t.arity();
  pr.g = bar_profile<FloatOps>(t.bar, maxN);
  pr.lf = log_factorials(maxN);
  pr.coef = t.coef.get_d();
  return pr;
}

/// Box sum with all tops at most M <= the profile length, skipping connector
/// values below e^kLogCutoff.
Complex box_sum(const FloatProfiles& pr, long M) {
  const int n = static_cast<int>(pr.f.size());
  std::vector<Complex> G(pr.f[0].begin(), pr.f[0].begin() + M + 1);
  long top = M;
  for (int j = 1; j < n; ++j) {
    const auto& f = pr.f[j];
    std::vector<Complex> next(top + M + 1, Complex{});
    for (long N = 0; N <= top + M; ++N) {
      const long lo = std::max(0L, N - M);
      const long hi = std::min(N, top);
      if (lo > hi) continue;
      auto logc = [&](long a) { return pr.lf[a] + pr.lf[N - a] - pr.lf[N]; };
      Complex acc{};
      long a = lo;
      for (; a <= hi && logc(a) >= kLogCutoff; ++a) acc += std::exp(logc(a)) * G[a] * f[N - a];
      for (long b = hi; b >= a && logc(b) >= kLogCutoff; --b) acc += std::exp(logc(b)) * G[b] * f[N - b];
      next[N] = acc;
    }
    G = std::move(next);
    top += M;
  }
  Complex total{};
  for (long N = 1; N <= top; ++N) total += G[N] * pr.g[N];
  return pr.coef * total;
}

// ---------------------------------------------------------------------------
// Tail model: S(M) ~ S + a/M + b log(M)/M + c/M^2 + d log(M)/M^2.

Complex fit_limit(const std::vector<double>& Ms, const std::vector<Complex>& S, int nb) {
  using LD = long double;
  std::vector<std::vector<LD>> A(nb, std::vector<LD>(nb + 2));
  for (int i = 0; i < nb; ++i) {
    const LD M = Ms[i];
    const LD x = 1.0L / M;
    const LD lg = std::log(M);
    const LD basis[5] = {1.0L, x, x * lg, x * x, x * x * lg};
    for (int c = 0; c < nb; ++c) A[i][c] = basis[c];
    A[i][nb] = S[i].real();
    A[i][nb + 1] = S[i].imag();
  }
  for (int c = 0; c < nb; ++c) {
    int piv = c;
    for (int r = c + 1; r < nb; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    for (int r = 0; r < nb; ++r) {
      if (r == c) continue;
      const LD factor = A[r][c] / A[c][c];
      for (int k = c; k < nb + 2; ++k) A[r][k] -= factor * A[c][k];
    }
  }
  return {static_cast<double>(A[0][nb] / A[0][0]), static_cast<double>(A[0][nb + 1] / A[0][0])};
}

/// Bounds M, M/2, ..., M/16, each rounded down to an even number.
std::vector<long> checkpoints(long M) {
  std::vector<long> out;
  for (int j = 0; j < 5; ++j) {
    const long b = (M >> j) & ~1L;
    if (b < 2) break;
    out.push_back(b);
  }
  return out;
}

EvalReport extrapolate(const std::vector<long>& bounds, const std::vector<Complex>& sums, double tol) {
  EvalReport rep;
  rep.truncation = bounds.front();
  rep.partial_sum = sums.front();
  rep.value = sums.front();
  rep.method = "partial";
  rep.tail_estimate = sums.size() > 1 ? std::abs(sums[0] - sums[1]) : INFINITY;
  if (sums.size() == 5 && bounds.back() >= 8) {
    std::vector<double> Ms(bounds.begin(), bounds.end());
    const Complex f5 = fit_limit(Ms, sums, 5);
    const Complex f4 = fit_limit(Ms, sums, 4);
    const double fit_tail = std::abs(f5 - f4);
    if (std::isfinite(fit_tail) && fit_tail < rep.tail_estimate) {
      rep.value = f5;
      rep.tail_estimate = fit_tail;
      rep.method = "extrapolated";
    }
  }
  rep.converged = rep.tail_estimate <= tol;
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational connector(const std::vector<long>& a) {
  mpz_class num = 1;
  long total = 0;
  for (long x : a) {
    if (x < 0) throw Error(ErrorKind::DomainError, "negative connector argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    num *= f;
    total += x;
  }
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(total));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double log_connector(const std::vector<long>& a) {
  double s = 0;
  long total = 0;
  for (long x : a) {
    if (x < 0) throw Error(ErrorKind::DomainError, "negative connector argument");
    s += std::lgamma(static_cast<double>(x) + 1.0);
    total += x;
  }
  return s - std::lgamma(static_cast<double>(total) + 1.0);
}

double connector_moment(int n, long N) {
  if (n < 1 || N < n) return 0.0;
  const std::vector<double> lf = log_factorials(N);
  double sum = 0;
  std::vector<long> a(n, 1);
  std::function<void(int, long, double, double)> rec = [&](int i, long left, double logc, double prod) {
    if (i == n - 1) {
      sum += std::exp(logc + lf[left]) / (prod * static_cast<double>(left));
      return;
    }
    for (long x = 1; x <= left - (n - 1 - i); ++x) rec(i + 1, left - x, logc + lf[x], prod * static_cast<double>(x));
  };
  rec(0, N, -lf[N], 1.0);
  return static_cast<double>(N) * static_cast<double>(N) * sum;
}

Complex zterm_partial(const ZTerm& t, long M) {
  if (M < 1) throw Error(ErrorKind::TruncationTooSmall, "bound must be positive");
  if (t.vanishes()) return {};
  return box_sum(float_profiles(t, M), M);
}

Scalar zterm_partial_exact(const ZTerm& t, long M) {
  if (M < 1) throw Error(ErrorKind::TruncationTooSmall, "bound must be positive");
  if (t.vanishes()) return Scalar(0);
  const int n = t.arity();
  std::vector<Scalar> G = strict_profile<ExactOps>(t.components[0], M);
  long top = M;
  for (int j = 1; j < n; ++j) {
    const std::vector<Scalar> f = strict_profile<ExactOps>(t.components[j], M);
    std::vector<Scalar> next(top + M + 1, Scalar(0));
    for (long a = 0; a <= top; ++a) {
      if (G[a].is_zero()) continue;
      for (long b = 0; b <= M; ++b) {
        if (f[b].is_zero()) continue;
        next[a + b] += Scalar(connector({a, b})) * G[a] * f[b];
      }
    }
    G = std::move(next);
    top += M;
  }
  const std::vector<Scalar> g = bar_profile<ExactOps>(t.bar, top);
  Scalar total(0);
  for (long N = 1; N <= top; ++N) total += G[N] * g[N];
  return Scalar(t.coef) * total;
}

namespace {

void check_mpl(const MplTerm& m) {
  if (!mpl_guard_ok(m)) throw Error(ErrorKind::GuardViolation, "MPL outside its region of absolute convergence");
}

}  // namespace

Complex mpl_partial(const MplTerm& m, long N) {
  check_mpl(m);
  const MplTerm s = to_shuffle(m);
  if (s.k.empty()) return s.coef.get_d();
  const Pair p(s.k, s.z);
  StrictStream<FloatOps> stream(p);
  Complex total{};
  for (long i = 1; i <= N; ++i) total += stream.next();
  return s.coef.get_d() * total;
}

Scalar mpl_partial_exact(const MplTerm& m, long N) {
  check_mpl(m);
  const MplTerm s = to_shuffle(m);
  if (s.k.empty()) return Scalar(s.coef);
  const Pair p(s.k, s.z);
  StrictStream<ExactOps> stream(p);
  Scalar total(0);
  for (long i = 1; i <= N; ++i) total += stream.next();
  return Scalar(s.coef) * total;
}

EvalReport eval_zterm(const ZTerm& t, long M, double tol) {
  if (M < 2) throw Error(ErrorKind::TruncationTooSmall, "bound must be at least 2");
  if (convergence_guard(t) == Convergence::Diverges) throw Error(ErrorKind::DivergentInput, "Z symbol diverges");
  if (t.vanishes()) {
    EvalReport rep;
    rep.truncation = M;
    rep.converged = true;
    rep.method = "partial";
    return rep;
  }
  const std::vector<long> bounds = checkpoints(M);
  const FloatProfiles pr = float_profiles(t, bounds.front());
  std::vector<Complex> sums;
  for (long b : bounds) sums.push_back(box_sum(pr, b));
  EvalReport rep = extrapolate(bounds, sums, tol);
  rep.truncation = M;
  return rep;
}

EvalReport eval_mpl(const MplTerm& m, long N, double tol) {
  if (N < 2) throw Error(ErrorKind::TruncationTooSmall, "bound must be at least 2");
  check_mpl(m);
  const MplTerm s = to_shuffle(m);
  if (s.k.empty()) {
    EvalReport rep;
    rep.value = rep.partial_sum = s.coef.get_d();
    rep.truncation = N;
    rep.converged = true;
    rep.method = "partial";
    return rep;
  }
  const std::vector<long> bounds = checkpoints(N);
  // An alternating outermost variable is smoothed by averaging neighbours.
  const bool alternating = s.z.back() == Scalar(-1);
  const Pair p(s.k, s.z);
  StrictStream<FloatOps> stream(p);
  std::vector<Complex> sums(bounds.size());
  Complex total{};
  Complex previous{};
  const long top = bounds.front();
  for (long i = 1; i <= top; ++i) {
    previous = total;
    total += stream.next();
    for (std::size_t j = 0; j < bounds.size(); ++j)
      if (bounds[j] == i) sums[j] = alternating ? 0.5 * (total + previous) : total;
  }
  const double c = s.coef.get_d();
  for (Complex& x : sums) x *= c;
  EvalReport rep = extrapolate(bounds, sums, tol);
  rep.partial_sum = c * total;
  rep.truncation = N;
  return rep;
}

VerifyReport verify_relation(const Relation& r, const VerifyOptions& opts) {
  struct Job {
    const ZTerm* z = nullptr;
    const MplTerm* m = nullptr;
    bool lhs = true;
  };
  const std::vector<ZTerm> lz = r.lhs.z.terms(), rz = r.rhs.z.terms();
  const std::vector<MplTerm> lm = r.lhs.mpl.terms(), rm = r.rhs.mpl.terms();
  std::vector<Job> jobs;
  for (const auto& t : lz) jobs.push_back({&t, nullptr, true});
  for (const auto& t : lm) jobs.push_back({nullptr, &t, true});
  for (const auto& t : rz) jobs.push_back({&t, nullptr, false});
  for (const auto& t : rm) jobs.push_back({nullptr, &t, false});

  std::vector<EvalReport> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < jobs.size(); i += step) {
      try {
        results[i] = jobs[i].z ? eval_zterm(*jobs[i].z, opts.z_bound, opts.tol) : eval_mpl(*jobs[i].m, opts.mpl_bound, opts.tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, jobs.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Summation runs in job order so the result does not depend on the thread count.
  VerifyReport rep;
  rep.tol = opts.tol;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    (jobs[i].lhs ? rep.lhs : rep.rhs) += results[i].value;
    rep.tail += results[i].tail_estimate;
    rep.terms.push_back({jobs[i].lhs ? "lhs" : "rhs", results[i].value, results[i].tail_estimate});
  }
  rep.difference = std::abs(rep.lhs - rep.rhs);
  rep.converged = rep.tail <= opts.tol;
  rep.passed = rep.difference + rep.tail <= opts.tol;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

/// Calls visit(a) for every a with a_k >= lo_k (or a_k == fixed_k when fixed_k >= 0)
/// and sum(a) <= cap.
void enumerate_box(const std::vector<long>& lo, const std::vector<long>& fixed, long cap,
                   const std::function<void(const std::vector<long>&)>& visit) {
  const std::size_t d = lo.size();
  std::vector<long> a(d);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
    if (i == d) {
      visit(a);
      return;
    }
    if (fixed[i] >= 0) {
      a[i] = fixed[i];
      if (used + a[i] <= cap) rec(i + 1, used + a[i]);
      return;
    }
    for (long x = lo[i]; used + x <= cap; ++x) {
      a[i] = x;
      rec(i + 1, used + x);
    }
  };
  rec(0, 0);
}

}  // namespace

std::pair<Scalar, Scalar> telescoping_sides(const TelescopingInstance& in) {
  const std::size_t d = in.m_minus.size();
  const std::size_t n = d + in.m_plus.size();
  auto fail = [](const std::string& why) { throw Error(ErrorKind::HypothesisViolated, why); };
  if (d < 1) fail("at least one lower entry is required");
  if (n < 2) fail("at least two entries are required");
  if (in.v.size() != d) fail("one variable per lower entry");
  for (long m : in.m_minus)
    if (m < 0) fail("lower entries must be non-negative");
  for (long m : in.m_plus)
    if (m < 1) fail("upper entries must be positive");
  if (in.q < 0 || in.N <= in.q) fail("need 0 <= q < N");
  Scalar s(0);
  for (const Scalar& v : in.v) {
    if (v.is_zero() || !in_closed_disk(v)) fail("variables must lie in the punctured unit disk");
    s += v.inv();
  }
  if (!in_closed_disk(in.t)) fail("t must lie in the unit disk");
  if (!(s == in.t)) fail("reciprocals of v must sum to t");

  long plus_sum = 0;
  Rational plus_prod = 1;
  for (long m : in.m_plus) {
    plus_sum += m;
    plus_prod *= m;
  }

  auto conn = [&](const std::vector<long>& a) {
    std::vector<long> all = a;
    all.insert(all.end(), in.m_plus.begin(), in.m_plus.end());
    return Scalar(connector(all));
  };
  // prod over k != skip of v_k^{a_k - m_k} / a_k
  auto weight = [&](const std::vector<long>& a, std::size_t skip) {
    Scalar w(1);
    for (std::size_t k = 0; k < d; ++k) {
      if (k == skip) continue;
      w *= pow(in.v[k], a[k] - in.m_minus[k]) * Scalar(make_rational(1, a[k]));
    }
    return w;
  };
  std::vector<long> lo(d), free(d, -1);
  for (std::size_t k = 0; k < d; ++k) lo[k] = in.m_minus[k] + 1;
  const long cap = in.N - plus_sum;

  Scalar lhs(0);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<long> fixed(d, -1);
    fixed[i] = in.m_minus[i];
    enumerate_box(lo, fixed, cap, [&](const std::vector<long>& a) {
      const long e = std::accumulate(a.begin(), a.end(), 0L) + plus_sum;
      if (e < in.q || e >= in.N) return;
      lhs += conn(a) * weight(a, i) * pow(in.t, e - in.q);
    });
  }
  Scalar second(0);
  Scalar boundary_q(0), boundary_n(0);
  enumerate_box(lo, free, cap, [&](const std::vector<long>& a) {
    const long e = std::accumulate(a.begin(), a.end(), 0L) + plus_sum;
    const Scalar base = conn(a) * weight(a, d);
    if (e >= in.q && e < in.N) second += base * pow(in.t, e - in.q);
    if (e == in.q) boundary_q += base;
    if (e == in.N) boundary_n += base * pow(in.t, e - in.q);
  });
  const Scalar inv_prod(Rational(1 / plus_prod));
  lhs = lhs * inv_prod - Scalar(plus_sum) * inv_prod * second;
  const Scalar rhs = Scalar(-in.q) * inv_prod * boundary_q + Scalar(in.N) * inv_prod * boundary_n;
  return {lhs, rhs};
}

bool telescoping_check(const TelescopingInstance& inst) {
  const auto [l, r] = telescoping_sides(inst);
  return l == r;
}

}  // namespace connsum
