#include <doctest.h>

#include "connsum/duality.hpp"
#include "connsum/errors.hpp"
#include "connsum/hoffman.hpp"
#include "connsum/numeric.hpp"
#include "connsum/ohno.hpp"
#include "connsum/random.hpp"
#include "connsum/recipe.hpp"

using namespace connsum;

namespace {

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

MplTerm sh(Index k, std::vector<Scalar> z, long c = 1) { return MplTerm{c, MplKind::Shuffle, std::move(k), std::move(z)}; }

// The alternating evaluation of zeta(k), written out by hand.
MplExpr alternating_side(int k) {
  MplExpr e;
  auto add = [&](int ones, int last, int sign) {
    Index idx(ones, 1);
    idx.push_back(last);
    e.add(sh(idx, std::vector<Scalar>(idx.size(), q(-1)), sign));
  };
  add(k - 2, 2, (k - 1) % 2 ? -1 : 1);
  for (int j = 2; j <= k; ++j) add(k - j, j, (k - j + 1) % 2 ? -1 : 1);
  return e;
}

}  // namespace

TEST_CASE("a self-dual single entry gives a tautology") {
  Relation r = recipe_relation(RecipeData{{Pair::ones({2})}, Pair::ones({1})});
  CHECK(mpl_difference(r).empty());
  CHECK(r.lhs.mpl == MplExpr(sh({2}, {q(1)})));
}

TEST_CASE("the Dilcher family") {
  for (int k = 2; k <= 6; ++k) {
    Relation r = recipe_relation(RecipeData{{Pair::ones(Index(k - 1, 1))}, Pair::ones({2})});
    CHECK(r.rhs.mpl == alternating_side(k));
    MplExpr lhs = normalize_by_duality(r.lhs.mpl, [](const MplTerm& m) { return m.k.size() == 1; });
    CHECK(lhs == MplExpr(sh({k}, {q(1)})));
  }
}

TEST_CASE("zeta(3) = 8 zeta(1, 2bar) from the k = 3 instance") {
  Relation r = recipe_relation(RecipeData{{Pair::ones({1, 1})}, Pair::ones({2})});
  CHECK(r.rhs.mpl == alternating_side(3));
  Relation famous;
  famous.lhs.mpl.add(sh({3}, {q(1)}));
  famous.rhs.mpl.add(sh({1, 2}, {q(-1), q(-1)}, 8));
  CHECK(verify_relation(famous, VerifyOptions{1L << 18, 400, 1e-6, 2}).passed);
}

TEST_CASE("three components give the three-term relation") {
  RecipeData data{{Pair({1}, {q(1, 3)}), Pair({1}, {q(1, 3)})}, Pair::ones({1})};
  REQUIRE_FALSE(recipe_violation(data).has_value());
  Relation r = recipe_relation(data);
  CHECK(r.details.front().second == "3");
  VerifyReport rep = verify_relation(r, VerifyOptions{1L << 16, 400, 1e-6, 2});
  CHECK_MESSAGE(rep.passed, "difference " << rep.difference);
}

TEST_CASE("violations are described") {
  auto why = [](const RecipeData& d) { return recipe_violation(d).value_or(""); };
  CHECK(why(RecipeData{{}, Pair::ones({1})}).find("component") != std::string::npos);
  CHECK(why(RecipeData{{Pair::ones({2})}, Pair()}).find("bar") != std::string::npos);
  CHECK(why(RecipeData{{Pair::ones({1})}, Pair::ones({1})}).find("w_s") != std::string::npos);
  CHECK(why(RecipeData{{Pair({1}, {Scalar::gauss(3, 5, 4, 5)})}, Pair::ones({2})}).find("B(") != std::string::npos);
  CHECK(why(RecipeData{{Pair({2}, {q(-1)})}, Pair({1}, {q(1, 2)})}).find("raised") != std::string::npos);
  CHECK(why(RecipeData{{Pair({1}, {q(1, 2)}), Pair({1}, {q(-1, 2)})}, Pair::ones({2})}).find("vanishes") !=
        std::string::npos);
  CHECK_THROWS_AS(recipe_relation(RecipeData{{Pair::ones({1})}, Pair::ones({1})}), Error);
}

TEST_CASE("with a single-letter bar the recipe reproduces Ohno's relation at height zero") {
  Rng rng(61);
  int tested = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Pair p = random_dual_pair(rng, 3, 3, 4);
    if (p.empty()) continue;
    RecipeData data{{p}, Pair::ones({1})};
    if (recipe_violation(data)) continue;
    CHECK(mpl_difference(recipe_relation(data)) == mpl_difference(ohno_relation(p, 0)));
    ++tested;
  }
  CHECK(tested >= 30);
}

TEST_CASE("with an all-ones bar the recipe is a rho-weighted sum of Ohno relations") {
  Rng rng(62);
  int tested = 0;
  for (int trial = 0; trial < 90; ++trial) {
    Pair p = random_dual_pair(rng, 3, 3, 4);
    if (p.empty()) continue;
    const int s = 1 + trial % 3, h = s - 1;
    RecipeData data{{p}, Pair::ones(Index(s, 1))};
    if (recipe_violation(data)) continue;
    MplExpr combination;
    hoffman::Series rho = hoffman::apply(hoffman::Map::Rho, hoffman::word_of_pair(p), h);
    for (int i = 0; i <= h; ++i)
      for (const auto& [u, c] : rho[i].terms())
        combination.add(mpl_difference(ohno_relation(hoffman::pair_of_word(u), h - i)), c);
    CHECK(mpl_difference(recipe_relation(data)) == combination);
    ++tested;
  }
  CHECK(tested >= 30);
}

TEST_CASE("random recipe relations hold numerically") {
  Rng rng(63);
  int tested = 0;
  for (int trial = 0; trial < 300 && tested < 6; ++trial) {
    RecipeData data;
    int m = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < m; ++i) data.components.push_back(random_dual_pair(rng, 2, 2, 3));
    data.bar = random_dual_pair(rng, 2, 2, 3);
    bool empty = data.bar.empty();
    for (const Pair& c : data.components) empty = empty || c.empty();
    if (empty || recipe_violation(data)) continue;
    Relation r;
    try {
      r = recipe_relation(data);
    } catch (const Error& e) {
      FAIL("recipe failed: " << e.what());
    }
    if (r.lhs.mpl.size() + r.rhs.mpl.size() > 40) continue;
    VerifyReport rep = verify_relation(r, VerifyOptions{1L << 18, 400, 1e-6, 4});
    CHECK_MESSAGE(rep.passed, "difference " << rep.difference << " tail " << rep.tail);
    ++tested;
  }
  CHECK(tested >= 4);
}
