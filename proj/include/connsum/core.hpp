#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "connsum/scalar.hpp"

namespace connsum {

/// A finite sequence of positive integers.
using Index = std::vector<int>;

int weight(const Index& k);
inline int depth(const Index& k) { return static_cast<int>(k.size()); }
/// Empty, or last entry at least 2.
bool is_admissible(const Index& k);

/// A decorated index (k; z): exponents paired with variables in the closed unit disk.
struct Pair {
  Index k;
  std::vector<Scalar> z;

  Pair() = default;
  /// Validates that lengths agree, exponents are positive and variables lie in the disk.
  Pair(Index k, std::vector<Scalar> z);
  /// All variables equal to 1.
  static Pair ones(Index k);

  bool empty() const { return k.empty(); }
  int size() const { return static_cast<int>(k.size()); }
  bool has_zero_variable() const;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend std::strong_ordering operator<=>(const Pair& a, const Pair& b);
};

struct SignedPair {
  int sign = 1;
  Pair pair;
};

/// Which of the two conventions governs peeling: component chains are strict, the bar chain is weak.
enum class Slot { Component, Bar };

/// The up-arrow operation p_{->v}.
SignedPair arrow(const Pair& p, const Scalar& v);

struct Peeled {
  Scalar v;
  Pair base;
  int sign = 1;
};

/// Inverse of arrow: writes p as +-(base)_{->v}.
Peeled peel(const Pair& p, Slot slot);

/// The symbol c * Z_n(components | bar).
struct ZTerm {
  Rational coef{1};
  std::vector<Pair> components;
  Pair bar;

  int arity() const { return static_cast<int>(components.size()); }
  /// True when the value is identically zero: a zero variable in some
  /// component, or an empty bar.
  bool vanishes() const;
  /// Weight of all components plus the bar.
  int total_weight() const;
};

/// Reorders components: result component i is input component perm[i].
ZTerm swap_components(const ZTerm& t, const std::vector<int>& perm);
/// Removes every empty component.  Requires n > 1 and at least one empty component.
ZTerm drop_empty_component(const ZTerm& t);

enum class Convergence { Ok, Diverges };
Convergence convergence_guard(const ZTerm& t);

/// Normalized linear combination of Z symbols.  Equal symbols merge, zero
/// coefficients and identically vanishing symbols disappear.
class ZExpr {
 public:
  using Key = std::pair<std::vector<Pair>, Pair>;

  ZExpr() = default;
  explicit ZExpr(const ZTerm& t) { add(t); }

  void add(const ZTerm& t);
  void add(const ZExpr& e, const Rational& scale = 1);
  std::vector<ZTerm> terms() const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  friend bool operator==(const ZExpr&, const ZExpr&) = default;

 private:
  std::map<Key, Rational> map_;
};

enum class MplKind { Shuffle, Harmonic };

/// c * Li^sh_k(z) or c * Li^*_k(z).
struct MplTerm {
  Rational coef{1};
  MplKind kind = MplKind::Shuffle;
  Index k;
  std::vector<Scalar> z;
};

/// The convergence guard for a single MPL: shuffle variables in the disk with
/// |z_r| < 1 when k is not admissible; harmonic suffix products likewise.
bool mpl_guard_ok(const MplTerm& m);

/// Harmonic to shuffle (suffix products) and back (consecutive ratios).
MplTerm to_shuffle(const MplTerm& m);
MplTerm to_harmonic(const MplTerm& m);

class MplExpr {
 public:
  using Key = std::tuple<MplKind, Index, std::vector<Scalar>>;

  MplExpr() = default;
  explicit MplExpr(const MplTerm& t) { add(t); }

  void add(const MplTerm& t);
  void add(const MplExpr& e, const Rational& scale = 1);
  /// Terms sorted by (kind, k, z).
  std::vector<MplTerm> terms() const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  friend bool operator==(const MplExpr&, const MplExpr&) = default;

 private:
  std::map<Key, Rational> map_;
};

MplExpr operator-(const MplExpr& a, const MplExpr& b);

}  // namespace connsum
