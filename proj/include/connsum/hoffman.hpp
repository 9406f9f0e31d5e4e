#pragma once

#include <compare>
#include <map>
#include <vector>

#include "connsum/core.hpp"

namespace connsum::hoffman {

/// x or e_z.
struct Letter {
  bool is_x = true;
  Scalar z;

  static Letter x() { return {true, Scalar(0)}; }
  static Letter e(const Scalar& z) { return {false, z}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (a.is_x != b.is_x) return a.is_x ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.z <=> b.z;
  }
};

using Word = std::vector<Letter>;

/// z belongs to the alphabet when z = 1, or z != 0, |z| <= 1 and Re z <= 1/2.
bool in_alphabet(const Scalar& z);

/// Rational linear combination of words.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Word& w, const Rational& c = 1) { add(w, c); }

  void add(const Word& w, const Rational& c);
  void add(const LinComb& o, const Rational& scale = 1);
  const std::map<Word, Rational>& terms() const { return map_; }
  bool empty() const { return map_.empty(); }

  friend LinComb operator*(const LinComb& a, const LinComb& b);
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  std::map<Word, Rational> map_;
};

/// Power series in t with word coefficients, truncated after t^order.
class Series {
 public:
  /// Throws TruncationTooSmall for a negative order.
  explicit Series(int order);
  Series(const Word& w, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  LinComb& operator[](int h) { return coeffs_.at(h); }
  const LinComb& operator[](int h) const { return coeffs_.at(h); }

  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<LinComb> coeffs_;
};

enum class Map { Sigma, Rho, SigmaInv, RhoInv, Tau, TauPrime };

/// Image of a single generator.
Series image(Map m, const Letter& a, int order);
/// Extends the generator images multiplicatively (anti-multiplicatively for
/// the two tau maps) and t-linearly.
Series apply(Map m, const Series& s);
Series apply(Map m, const Word& w, int order);

bool in_A1(const Word& w);
bool in_A0(const Word& w);

Word word_of_pair(const Pair& p);
Pair pair_of_word(const Word& w);

/// Li^sh of each word, extended linearly.  Every word must lie in A^0.
MplExpr L(const LinComb& c);

}  // namespace connsum::hoffman
