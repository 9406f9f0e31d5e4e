#include <doctest.h>

#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/hoffman.hpp"
#include "connsum/ohno.hpp"
#include "connsum/random.hpp"

using namespace connsum;
using namespace connsum::hoffman;

namespace {

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

Letter X() { return Letter::x(); }
Letter E(const Scalar& z) { return Letter::e(z); }

const std::vector<Letter>& generators() {
  static const std::vector<Letter> g{X(), E(q(1)), E(q(-1)), E(q(1, 3)), E(Scalar::gauss(1, 3, 1, 3)), E(q(-1, 2))};
  return g;
}

Word random_word(Rng& rng, int max_len) {
  Word w;
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i) w.push_back(generators()[rng() % generators().size()]);
  return w;
}

Word random_a0_word(Rng& rng) {
  for (;;) {
    Word w = random_word(rng, 5);
    if (in_A0(w)) return w;
  }
}

Rational coefficient_sum(const LinComb& c) {
  Rational s = 0;
  for (const auto& [w, k] : c.terms()) s += k;
  return s;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("alphabet") {
  CHECK(in_alphabet(q(1)));
  CHECK(in_alphabet(q(-1)));
  CHECK(in_alphabet(q(1, 2)));
  CHECK_FALSE(in_alphabet(q(3, 4)));
  CHECK_FALSE(in_alphabet(Scalar(0)));
  CHECK_FALSE(in_alphabet(Scalar::gauss(1, 2, 1, 1)));
}

TEST_CASE("words and pairs") {
  CHECK(word_of_pair(Pair::ones({2})) == Word{E(q(1)), X()});
  CHECK(word_of_pair(Pair({1, 2}, {q(-1), q(1)})) == Word{E(q(-1)), E(q(1)), X()});
  CHECK(word_of_pair(Pair()).empty());
  CHECK(pair_of_word(Word{E(q(-1)), E(q(1)), X()}) == Pair({1, 2}, {q(-1), q(1)}));
  CHECK_THROWS_AS(word_of_pair(Pair({1}, {q(3, 4)})), Error);
  CHECK_THROWS_AS(pair_of_word(Word{X(), E(q(1))}), Error);
}

TEST_CASE("A0 membership matches the dual condition") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 5);
    if (!in_A1(w)) {
      CHECK(w.front().is_x);
      continue;
    }
    CHECK(in_A0(w) == dual_condition(pair_of_word(w)));
    CHECK(word_of_pair(pair_of_word(w)) == w);
  }
}

TEST_CASE("sigma on e_1 x to first order") {
  Series s = apply(Map::Sigma, Word{E(q(1)), X()}, 1);
  CHECK(s[0] == LinComb(Word{E(q(1)), X()}));
  CHECK(s[1] == LinComb(Word{E(q(1)), X(), X()}));
}

TEST_CASE("generator images of tau") {
  Series a = image(Map::Tau, X(), 2);
  CHECK(a[0] == LinComb(Word{E(q(1))}));
  CHECK(a[1].empty());
  Series b = image(Map::Tau, E(q(-1)), 2);
  CHECK(b[0] == LinComb(Word{E(q(1, 2))}, -1));
  CHECK(b[1] == LinComb(Word{E(q(1, 2)), E(q(1, 2))}, -1));
  CHECK(b[2] == LinComb(Word{E(q(1, 2)), E(q(1, 2)), E(q(1, 2))}, -1));
}

TEST_CASE("involutions and inverses") {
  Rng rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_word(rng, 4);
    const int H = 3;
    Series s(w, H);
    CHECK(apply(Map::Tau, apply(Map::Tau, s)) == s);
    CHECK(apply(Map::TauPrime, apply(Map::TauPrime, s)) == s);
    CHECK(apply(Map::SigmaInv, apply(Map::Sigma, s)) == s);
    CHECK(apply(Map::Sigma, apply(Map::SigmaInv, s)) == s);
    CHECK(apply(Map::RhoInv, apply(Map::Rho, s)) == s);
    CHECK(apply(Map::Rho, apply(Map::RhoInv, s)) == s);
  }
}

TEST_CASE("rho after tau' equals tau after rho") {
  for (int H = 0; H <= 4; ++H) {
    for (const Letter& g : generators()) {
      Series s(Word{g}, H);
      CHECK(apply(Map::Rho, apply(Map::TauPrime, s)) == apply(Map::Tau, apply(Map::Rho, s)));
    }
  }
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) CHECK(rho_tau_commute(random_word(rng, 4), 3));
}

TEST_CASE("the inverse of rho preserves A0") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Series s = apply(Map::RhoInv, random_a0_word(rng), 3);
    for (int h = 0; h <= 3; ++h)
      for (const auto& [w, c] : s[h].terms()) CHECK(in_A0(w));
  }
}

TEST_CASE("coefficient sums of sigma after rho") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_a0_word(rng);
    long r = 0;
    for (const Letter& a : w) r += a.is_x ? 0 : 1;
    Series s = apply(Map::Sigma, apply(Map::Rho, w, 3));
    for (int h = 0; h <= 3; ++h) CHECK(coefficient_sum(s[h]) == binom(h + r - 1, r - 1) * (1L << h));
  }
}

TEST_CASE("degree-one boundary series of e_1 x") {
  MplExpr expected;
  expected.add(MplTerm{1, MplKind::Shuffle, {3}, {q(1)}});
  expected.add(MplTerm{1, MplKind::Shuffle, {1, 2}, {q(1), q(1)}});
  CHECK(boundary_series(Word{E(q(1)), X()}, 1) == expected);
  CHECK(boundary_series(Word{E(q(1)), X()}, 0) == MplExpr(MplTerm{1, MplKind::Shuffle, {2}, {q(1)}}));
}

TEST_CASE("L rejects words outside A0") {
  CHECK_THROWS_AS(L(LinComb(Word{E(q(1))})), Error);
  CHECK(L(LinComb(Word{E(q(1)), X()}, 3)) == MplExpr(MplTerm{3, MplKind::Shuffle, {2}, {q(1)}}));
}

TEST_CASE("negative truncation order") {
  CHECK_THROWS_AS(apply(Map::Sigma, Word{X()}, -1), Error);
}
