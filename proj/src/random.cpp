#include "connsum/random.hpp"

#include "connsum/duality.hpp"

namespace connsum {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Index random_index(Rng& rng, int depth, int max_exponent) {
  Index k(depth);
  for (int& e : k) e = uniform(rng, 1, max_exponent);
  return k;
}

}  // namespace

Scalar random_gaussian(Rng& rng, int height) {
  return Scalar::gauss(uniform(rng, -height, height), uniform(rng, 1, height), uniform(rng, -height, height),
                       uniform(rng, 1, height));
}

Scalar random_disk_scalar(Rng& rng, int height) {
  while (true) {
    Scalar z = random_gaussian(rng, height);
    if (!z.is_zero() && in_closed_disk(z)) return z;
  }
}

Scalar random_alphabet_scalar(Rng& rng, int height, double p_one) {
  if (std::bernoulli_distribution(p_one)(rng)) return Scalar(1);
  while (true) {
    Scalar z = random_disk_scalar(rng, height);
    if (re_leq_half(z)) return z;
  }
}

Pair random_dual_pair(Rng& rng, int max_depth, int max_exponent, int height, double p_one) {
  while (true) {
    const int r = uniform(rng, 1, max_depth);
    std::vector<Scalar> z;
    for (int i = 0; i < r; ++i) z.push_back(random_alphabet_scalar(rng, height, p_one));
    Pair p(random_index(rng, r, max_exponent), std::move(z));
    if (dual_condition(p)) return p;
  }
}

ZTerm random_z1_term(Rng& rng, int max_depth, int max_exponent, int height) {
  while (true) {
    ZTerm t;
    for (int part = 0; part < 2; ++part) {
      const int r = uniform(rng, 1, max_depth);
      std::vector<Scalar> z;
      for (int i = 0; i < r; ++i) z.push_back(random_disk_scalar(rng, height));
      Pair p(random_index(rng, r, max_exponent), std::move(z));
      if (part == 0) t.components.push_back(std::move(p));
      else t.bar = std::move(p);
    }
    if (convergence_guard(t) == Convergence::Ok) return t;
  }
}

}  // namespace connsum
