#include "connsum/examples.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "connsum/boundary.hpp"
#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/numeric.hpp"
#include "connsum/ohno.hpp"
#include "connsum/recipe.hpp"
#include "connsum/text.hpp"
#include "connsum/transport.hpp"

namespace connsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942853997381615114;
constexpr long kMplBound = 1L << 18;

MplTerm li(Index k, std::vector<Scalar> z, Rational c = 1) {
  return MplTerm{std::move(c), MplKind::Shuffle, std::move(k), std::move(z)};
}

MplTerm zeta(Index k) {
  std::vector<Scalar> z(k.size(), Scalar(1));
  return li(std::move(k), std::move(z));
}

Complex eval(const MplExpr& e, long bound = kMplBound) {
  Complex s{};
  for (const MplTerm& t : e.terms()) s += eval_mpl(t, bound).value;
  return s;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

class Builder {
 public:
  explicit Builder(std::string name) { result_.name = std::move(name); }

  void symbolic(const std::string& what, bool ok, const std::string& detail = {}) {
    add(what, ok, detail);
  }

  void numeric(const std::string& what, Complex got, Complex want, double tol) {
    const double diff = std::abs(got - want);
    add(what, diff <= tol, "|difference| = " + fmt(diff) + ", tolerance " + fmt(tol));
  }

  ExampleResult done() { return std::move(result_); }

 private:
  void add(const std::string& what, bool ok, const std::string& detail) {
    result_.checks.push_back({what, ok, detail});
    result_.passed = result_.passed && ok;
  }
  ExampleResult result_;
};

ZTerm all_ones_term(std::vector<Index> comps, Index bar) {
  ZTerm t;
  for (Index& k : comps) t.components.push_back(Pair::ones(std::move(k)));
  t.bar = Pair::ones(std::move(bar));
  return t;
}

/// Keeps terms whose variables are 1 or reciprocals of positive integers.
bool positive_unit_fractions(const MplTerm& t) {
  for (const Scalar& z : t.z) {
    if (!z.is_real() || sgn(z.re()) <= 0) return false;
    if (z.re().get_num() != 1) return false;
  }
  return true;
}

ExampleResult cloitre() {
  Builder b("cloitre");
  const ZTerm t = all_ones_term({{1}, {1}}, {1});
  b.symbolic("Z_2(1; 1) reduces to zeta(2)", reduce(t) == MplExpr(zeta({2})), to_text(reduce(t)));
  b.numeric("Z_2(1; 1) = pi^2/6 at M = 400", eval_zterm(t, 400).value, kPi * kPi / 6, 1e-4);
  return b.done();
}

ExampleResult oloa() {
  Builder b("oloa");
  const ZTerm t = all_ones_term({{1}, {1}}, {1, 1});
  ZExpr want;
  want.add(all_ones_term({{2}}, {1, 1}));
  want.add(all_ones_term({{3}}, {1}));
  const ZExpr got = reduce_to_Z1(t);
  b.symbolic("Z_2(1; 1 | 1,1) = Z_1(2 | 1,1) + Z_1(3 | 1)", got == want, to_text(got));
  MplExpr mz;
  mz.add(zeta({1, 2}));
  mz.add(li({3}, {Scalar(1)}, 2));
  b.symbolic("boundary gives zeta(1,2) + 2 zeta(3)", reduce(t) == mz, to_text(reduce(t)));
  b.numeric("Z_2(1; 1 | 1,1) = 3 zeta(3) at M = 400", eval_zterm(t, 400).value, 3 * kZeta3, 1e-4);
  return b.done();
}

ExampleResult zeta4() {
  Builder b("zeta4");
  const ZTerm t = all_ones_term({{1}, {1}}, {2, 1});
  ZExpr want;
  want.add(all_ones_term({{2}}, {2, 1}));
  const std::vector<Scalar> mixed{Scalar(1), Scalar(-1)};
  const ZTerm second{-1, {Pair({2, 1}, mixed)}, Pair::ones({2})};
  const ZTerm third{-1, {Pair({2, 2}, mixed)}, Pair::ones({1})};
  want.add(second);
  want.add(third);
  const ZExpr got = reduce_to_Z1(t);
  b.symbolic("Z_2(1; 1 | 2,1) reduces to three Z_1 terms", got == want, to_text(got));
  const double z4 = std::pow(kPi, 4) / 90;
  b.numeric("boundary expansion = 17/8 zeta(4)", eval(reduce(t)), 17.0 / 8.0 * z4, 1e-8);
  b.numeric("Z_2(1; 1 | 2,1) = 17/8 zeta(4) at M = 400", eval_zterm(t, 400).value, 17.0 / 8.0 * z4, 1e-4);
  return b.done();
}

MplExpr amtagpa_target(int n) {
  Index k(n - 1, 1);
  k.push_back(2);
  std::vector<Scalar> z;
  for (int i = 1; i <= n; ++i) z.emplace_back(make_rational(1, i));
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return MplExpr(li(k, z, fact));
}

ExampleResult amtagpa(int n) {
  Builder b("amtagpa:" + std::to_string(n));
  if (n < 1 || n > 8) throw Error(ErrorKind::DomainError, "amtagpa takes 1 <= n <= 8");
  const ZTerm t = all_ones_term(std::vector<Index>(n + 1, Index{1}), {1});
  const MplExpr target = amtagpa_target(n);
  const MplExpr got = normalize_by_duality(reduce(t), positive_unit_fractions);
  b.symbolic("reduction equals n! Li_{1,...,1,2}(1, 1/2, ..., 1/n)", got == target, to_text(got));
  const Complex want = eval(target);
  b.numeric("Z_{n+1}(1; ...; 1) at M = 200", eval_zterm(t, 200).value, want, 1e-3);
  if (n == 2) {
    const double closed = 13.0 / 4.0 * kZeta3 - kPi * kPi / 2 * std::log(2.0);
    b.numeric("n = 2 closed form 13/4 zeta(3) - pi^2/2 log 2", want, closed, 1e-8);
  }
  return b.done();
}

ExampleResult triple() {
  ExampleResult r = amtagpa(2);
  r.name = "triple";
  return r;
}

/// The explicit alternating-sum evaluation of zeta(k).
Relation dilcher_closed_form(int k) {
  Relation r;
  r.lhs.mpl.add(zeta({k}));
  auto alt = [](int ones, int last) {
    Index idx(ones, 1);
    idx.push_back(last);
    return std::vector<Scalar>(idx.size(), Scalar(-1));
  };
  auto alt_index = [](int ones, int last) {
    Index idx(ones, 1);
    idx.push_back(last);
    return idx;
  };
  r.rhs.mpl.add(li(alt_index(k - 2, 2), alt(k - 2, 2), (k - 1) % 2 ? -1 : 1));
  for (int j = 2; j <= k; ++j) r.rhs.mpl.add(li(alt_index(k - j, j), alt(k - j, j), (k - j + 1) % 2 ? -1 : 1));
  return r;
}

ExampleResult dilcher(int k) {
  Builder b("dilcher:" + std::to_string(k));
  if (k < 2 || k > 10) throw Error(ErrorKind::DomainError, "dilcher takes 2 <= k <= 10");
  RecipeData data{{Pair::ones(Index(k - 1, 1))}, Pair::ones({2})};
  const Relation rel = recipe_relation(data);
  const Relation closed = dilcher_closed_form(k);
  const MplExpr lhs = normalize_by_duality(rel.lhs.mpl, [](const MplTerm& t) { return t.k.size() == 1; });
  b.symbolic("recipe lhs is zeta(k) after duality", lhs == closed.lhs.mpl, to_text(lhs));
  b.symbolic("recipe rhs equals the alternating closed form", rel.rhs.mpl == closed.rhs.mpl, to_text(rel.rhs.mpl));
  b.numeric("closed form holds numerically", eval(closed.lhs.mpl), eval(closed.rhs.mpl), 1e-6);
  if (k == 3) {
    MplExpr rhs(li({1, 2}, {Scalar(-1), Scalar(-1)}, 8));
    b.numeric("zeta(3) = 8 zeta(1, 2bar)", eval(MplExpr(zeta({3}))), eval(rhs), 1e-6);
  }
  return b.done();
}

ExampleResult dilog() {
  Builder b("dilog");
  const Scalar z1 = Scalar::gauss(1, 3);
  const Scalar z2 = Scalar::gauss(-1, 4);
  ZTerm t{1, {Pair({1}, {z1}), Pair({1}, {z2})}, Pair::ones({1})};
  const MplExpr red = reduce(t);
  const MplExpr want(li({1, 1}, {z2, mobius_dual(z1)}, -1));
  b.symbolic("Z_2 reduces to -Li_{1,1}(z2, z1/(z1-1))", red == want, to_text(red));
  MplExpr dilogs;
  dilogs.add(li({2}, {z1}));
  dilogs.add(li({2}, {z2}));
  dilogs.add(li({2}, {z1 + z2 - z1 * z2}, -1));
  b.numeric("equals Li_2(z1) + Li_2(z2) - Li_2(z1 + z2 - z1 z2)", eval(red), eval(dilogs), 1e-9);
  b.numeric("Z_2 evaluated directly", eval_zterm(t, 400).value, eval(dilogs), 1e-6);
  return b.done();
}

ExampleResult kummer_newman() {
  Builder b("kummer-newman");
  const std::vector<Scalar> zs{Scalar::gauss(1, 3), Scalar::gauss(1, 3), Scalar::gauss(-1, 5)};
  const MultiTerm mt = multi_term_relation(zs);
  b.symbolic("transported fundamental identity gives the three-term relation",
             mt.relation.lhs.mpl == mt.closed_form, to_text(mt.relation.lhs.mpl));
  b.numeric("three-term relation vanishes", eval(mt.closed_form), 0.0, 1e-9);
  MplExpr lhs, rhs;
  for (const Scalar& z : zs) lhs.add(li({2}, {z}));
  for (int i = 0; i < 3; ++i) {
    const Scalar& a = zs[i];
    const Scalar& c = zs[(i + 1) % 3];
    const Scalar& d = zs[(i + 2) % 3];
    rhs.add(li({2}, {-(a * c) / d}, make_rational(1, 2)));
  }
  b.numeric("Li_2 six-term identity", eval(lhs), eval(rhs), 1e-9);
  return b.done();
}

ExampleResult eight_term() {
  Builder b("eight-term");
  const std::vector<Scalar> zs{Scalar::gauss(1, 3), Scalar::gauss(1, 3), Scalar::gauss(1, 3), Scalar::gauss(-1, 8)};
  const MultiTerm mt = multi_term_relation(zs);
  b.symbolic("transported fundamental identity gives the eight-term relation",
             mt.relation.lhs.mpl == mt.closed_form, to_text(mt.relation.lhs.mpl));
  b.numeric("eight-term relation vanishes", eval(mt.closed_form), 0.0, 1e-9);
  return b.done();
}

int parameter(const std::string& name, const std::string& prefix) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(name.substr(prefix.size()), &used);
    if (used + prefix.size() != name.size()) throw std::invalid_argument(name);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::DomainError, "bad parameter in example name " + name);
  }
}

}  // namespace

std::vector<std::string> example_names() {
  return {"cloitre", "oloa", "zeta4", "triple", "amtagpa:2", "amtagpa:3", "amtagpa:4", "dilcher:2", "dilcher:3",
          "dilcher:4", "dilcher:5", "dilcher:6", "dilog", "kummer-newman", "eight-term"};
}

ExampleResult run_example(const std::string& name) {
  if (name == "cloitre") return cloitre();
  if (name == "oloa") return oloa();
  if (name == "zeta4") return zeta4();
  if (name == "triple") return triple();
  if (name == "dilog") return dilog();
  if (name == "kummer-newman") return kummer_newman();
  if (name == "eight-term") return eight_term();
  if (name.rfind("amtagpa:", 0) == 0) return amtagpa(parameter(name, "amtagpa:"));
  if (name.rfind("dilcher:", 0) == 0) return dilcher(parameter(name, "dilcher:"));
  throw Error(ErrorKind::DomainError, "unknown example " + name);
}

}  // namespace connsum
