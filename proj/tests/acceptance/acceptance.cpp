// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "connsum/boundary.hpp"
#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/examples.hpp"
#include "connsum/hoffman.hpp"
#include "connsum/numeric.hpp"
#include "connsum/ohno.hpp"
#include "connsum/random.hpp"
#include "connsum/text.hpp"
#include "connsum/transport.hpp"
#include "oracles.hpp"

using namespace connsum;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;
const double kZeta4 = std::pow(kPi, 4) / 90;

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

// Collects the reasons a criterion failed; an empty list means it passed.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void close(Complex got, Complex want, double tol, const std::string& what) {
    const double d = std::abs(got - want);
    std::ostringstream s;
    s << what << " (|difference| = " << d << ")";
    if (d > tol) failures_.push_back(s.str());
    else notes_.push_back(s.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Complex eval(const MplExpr& e) {
  Complex total = 0;
  for (const MplTerm& m : e.terms()) total += eval_mpl(m, 1L << 18).value;
  return total;
}

ZTerm ones_term(std::vector<Index> comps, Index bar) {
  ZTerm t;
  for (Index& k : comps) t.components.push_back(Pair::ones(std::move(k)));
  t.bar = Pair::ones(std::move(bar));
  return t;
}

ZTerm z1(long c, Pair comp, Pair bar) { return ZTerm{c, {std::move(comp)}, std::move(bar)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void cloitre(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const EvalReport r = eval_zterm(ones_term({{1}, {1}}, {1}), 400);
  const double secs = seconds_since(t0);
  o.close(r.value, kPi * kPi / 6, 1e-4, "Z_2(1; 1) at M = 400 against pi^2/6");
  o.require(secs < 1.0, "evaluation took " + std::to_string(secs) + " s");
}

void oloa(Outcome& o) {
  const ZTerm t = ones_term({{1}, {1}}, {1, 1});
  o.close(eval_zterm(t, 400).value / 3.0, kZeta3, 1e-4, "Z_2(1; 1 | 1,1) / 3 at M = 400 against zeta(3)");
  ZExpr want;
  want.add(z1(1, Pair::ones({2}), Pair::ones({1, 1})));
  want.add(z1(1, Pair::ones({3}), Pair::ones({1})));
  const ZExpr got = reduce_to_Z1(t);
  o.require(got == want, "reduction gave " + to_text(got));
}

void zeta4(Outcome& o) {
  const ZTerm t = ones_term({{1}, {1}}, {2, 1});
  ZExpr want;
  want.add(z1(1, Pair::ones({2}), Pair::ones({2, 1})));
  want.add(z1(-1, Pair({2, 1}, {q(1), q(-1)}), Pair::ones({2})));
  want.add(z1(-1, Pair({2, 2}, {q(1), q(-1)}), Pair::ones({1})));
  const ZExpr got = reduce_to_Z1(t);
  o.require(got == want, "reduction gave " + to_text(got));
  o.close(eval_zterm(t, 400).value, 17.0 / 8.0 * kZeta4, 1e-4, "Z_2(1; 1 | 2,1) at M = 400 against 17/8 zeta(4)");
}

void amtagpa(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const ZTerm t = ones_term(std::vector<Index>(n + 1, Index{1}), {1});
    Index k(n - 1, 1);
    k.push_back(2);
    std::vector<Scalar> z;
    long fact = 1;
    for (int i = 1; i <= n; ++i) {
      z.push_back(q(1, i));
      fact *= i;
    }
    const Complex target = eval(MplExpr(MplTerm{fact, MplKind::Shuffle, k, z}));
    const Complex value = eval_zterm(t, 200).value;
    o.close(value, target, 1e-3, "n = " + std::to_string(n) + " at M = 200 against n! Li^sh");
    if (n == 2) o.close(value, 13.0 / 4.0 * kZeta3 - kPi * kPi / 2 * std::log(2.0), 1e-3, "n = 2 against 13/4 zeta(3) - pi^2/2 log 2");
  }
}

void boundary_exactness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(2024);
  int checked = 0;
  while (checked < 200) {
    const ZTerm t = random_z1_term(rng, 3, 3, 5);
    const MplExpr out = boundary_reduce(t);
    Scalar rhs;
    for (const MplTerm& m : out.terms()) rhs += mpl_partial_exact(m, 30);
    const Scalar lhs = zterm_partial_exact(t, 30);
    o.require(lhs == rhs, "partial sums differ for " + to_text(t));
    if (checked < 20) o.require(oracle::brute_zterm(t, 12) == zterm_partial_exact(t, 12), "brute-force partial sum differs for " + to_text(t));
    ++checked;
  }
  const double secs = seconds_since(t0);
  o.note(std::to_string(checked) + " terms in " + std::to_string(secs) + " s");
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
}

void transport_exactness(Outcome& o) {
  Rng rng(99);
  int zero_t = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const TelescopingInstance in = oracle::random_instance(rng, trial % 4 == 0, 20);
    if (in.t.is_zero()) ++zero_t;
    o.require(telescoping_check(in), "telescoping_check failed on trial " + std::to_string(trial));
    o.require(oracle::brute_telescoping(in) == telescoping_sides(in), "sides disagree with direct summation on trial " + std::to_string(trial));
  }
  o.require(zero_t > 0, "no t = 0 instance was drawn");
  o.note(std::to_string(zero_t) + " instances with t = 0");
}

void duality(Outcome& o) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Pair p = random_dual_pair(rng, 4, 3, 5);
    const DualPair d = dagger(p);
    const DualPair dd = dagger(d.pair);
    o.require(dd.pair == p && dd.sign == d.sign, "dagger is not an involution on " + to_text(p));
    const DualPair r = reduce_duality(p);
    o.require(r.pair == d.pair && r.sign == d.sign, "transport disagrees with dagger on " + to_text(p));
  }
  int numeric = 0;
  double worst = 0;
  while (numeric < 50) {
    const Pair p = random_dual_pair(rng, 3, 3, 4);
    if (p.empty() || p.z.back().abs_sq() > make_rational(1, 4)) continue;
    const VerifyReport rep = verify_relation(duality_relation(p), VerifyOptions{1L << 18, 400, 1e-6, 1});
    o.require(rep.passed, "duality fails numerically on " + to_text(p) + " (difference " + std::to_string(rep.difference) + ")");
    worst = std::max(worst, rep.difference);
    ++numeric;
  }
  std::ostringstream s;
  s << "largest numeric difference " << worst;
  o.note(s.str());
}

void ohno(Outcome& o) {
  using namespace connsum::hoffman;
  const int H = 3;
  const std::vector<Letter> gens{Letter::x(), Letter::e(q(1)), Letter::e(q(-1)), Letter::e(q(1, 3)),
                                 Letter::e(q(-1, 2)), Letter::e(Scalar::gauss(1, 5, 2, 5))};
  for (const Letter& g : gens) o.require(rho_tau_commute(Word{g}, H), "rho tau' = tau rho fails on a generator");
  Rng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    Word w;
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) w.push_back(gens[rng() % gens.size()]);
    o.require(rho_tau_commute(w, H), "rho tau' = tau rho fails on a random word");
  }

  const VerifyOptions opts{1L << 18, 400, 1e-6, 1};
  for (int h = 0; h <= 3; ++h) {
    const Pair p = Pair::ones({3});
    const VerifyReport rep = verify_relation(ohno_relation(p, h), opts);
    o.require(rep.passed, "Ohno for (3), h = " + std::to_string(h));
  }
  for (const Scalar& z : {q(1, 3), q(-1, 2), Scalar::gauss(1, 5, 2, 5)}) {
    for (int h = 0; h <= 4; ++h) {
      const VerifyReport rep = verify_relation(ohno_relation(Pair({1}, {z}), h), opts);
      o.require(rep.passed, "Ohno for (1) at z = " + z.str() + ", h = " + std::to_string(h));
    }
  }

  int compared = 0;
  while (compared < 50) {
    const Pair p = random_dual_pair(rng, 3, 3, 4);
    if (p.empty()) continue;
    const int h = static_cast<int>(rng() % 4);
    const Relation a = ohno_relation(p, h);
    const Relation b = ohno_relation_algebraic(p, h);
    o.require(a.lhs.mpl == b.lhs.mpl && a.rhs.mpl == b.rhs.mpl, "emission paths differ on " + to_text(p));
    ++compared;
  }
}

void dilcher(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    const ExampleResult r = run_example("dilcher:" + std::to_string(k));
    o.require(r.passed, "dilcher:" + std::to_string(k));
    if (k == 3) {
      bool found = false;
      for (const ExampleCheck& c : r.checks) found = found || c.description.find("8 zeta(1, 2bar)") != std::string::npos;
      o.require(found, "dilcher:3 did not check zeta(3) = 8 zeta(1, 2bar)");
    }
  }
  const MplExpr zeta3(MplTerm{1, MplKind::Shuffle, {3}, {q(1)}});
  const MplExpr alt(MplTerm{8, MplKind::Shuffle, {1, 2}, {q(-1), q(-1)}});
  o.close(eval(zeta3), eval(alt), 1e-6, "zeta(3) against 8 zeta(1, 2bar)");
}

// Membership in the set of Li^sh_k(1, z_2, ..., z_r) with admissible k of the
// given weight, depth at most weight - 1, and z_i in {1, 1/2, ..., 1/n}.
bool in_mpl_set(const MplTerm& m, int n, int wt) {
  if (m.kind != MplKind::Shuffle || m.k.empty()) return false;
  if (!is_admissible(m.k) || weight(m.k) != wt) return false;
  if (static_cast<int>(m.k.size()) > wt - 1) return false;
  if (m.z.front() != Scalar(1)) return false;
  for (std::size_t i = 1; i < m.z.size(); ++i) {
    bool ok = false;
    for (int j = 1; j <= n; ++j) ok = ok || m.z[i] == q(1, j);
    if (!ok) return false;
  }
  return true;
}

void main_shape(Outcome& o) {
  Rng rng(31);
  int done = 0;
  std::size_t mpl_terms = 0;
  int max_weight = 0;
  while (done < 30) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int budget = 6;
    std::vector<Index> comps(n, Index{1});
    Index bar{1};
    const int extra = static_cast<int>(rng() % (budget - n));
    for (int e = 0; e < extra; ++e) {
      const int slot = static_cast<int>(rng() % (n + 1));
      Index& target = slot < n ? comps[slot] : bar;
      if (rng() % 2 == 0) target.push_back(1);
      else target[rng() % target.size()] += 1;
    }
    const ZTerm t = ones_term(comps, bar);
    const int k = t.total_weight();
    MplExpr out;
    try {
      out = normalize_by_duality(reduce(t), [&](const MplTerm& m) { return in_mpl_set(m, n, k - 1); });
    } catch (const Error& e) {
      o.require(false, to_text(t) + " raised " + e.what());
      ++done;
      continue;
    }
    o.require(!out.empty(), to_text(t) + " reduced to zero");
    mpl_terms += out.size();
    max_weight = std::max(max_weight, k);
    for (const MplTerm& m : out.terms()) {
      o.require(in_mpl_set(m, n, k - 1), to_text(t) + " produced " + to_text(m));
      o.require(m.coef.get_den() == 1, to_text(t) + " produced a non-integral coefficient in " + to_text(m));
    }
    ++done;
  }
  o.note(std::to_string(done) + " inputs up to weight " + std::to_string(max_weight) + ", " + std::to_string(mpl_terms) + " MPL terms checked");
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Cloitre: Z_2(1; 1) = pi^2/6", cloitre},
      {"Oloa: Z_2(1; 1 | 1,1) = 3 zeta(3) and its exact reduction", oloa},
      {"zeta(4): three-term reduction and 17/8 zeta(4)", zeta4},
      {"Amtagpa: Z_{n+1}(1; ...; 1) for n = 2, 3, 4", amtagpa},
      {"Boundary exactness on 200 random Z_1 terms", boundary_exactness},
      {"Transport exactness on 100 telescoping instances", transport_exactness},
      {"Duality: involution, transport agreement, numerics", duality},
      {"Ohno: rho tau' = tau rho, numerics, both emission paths", ohno},
      {"Dilcher family k = 2..6", dilcher},
      {"Integral all-ones inputs reduce into MPL(n, k)", main_shape},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("unexpected exception: ") + e.what());
    }
    const bool ok = o.failures().empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, c.name, seconds_since(t0));
    for (const std::string& n : o.notes()) std::printf("         %s\n", n.c_str());
    std::size_t shown = 0;
    for (const std::string& f : o.failures()) {
      if (++shown > 10) {
        std::printf("       ! ... %zu more\n", o.failures().size() - 10);
        break;
      }
      std::printf("       ! %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
