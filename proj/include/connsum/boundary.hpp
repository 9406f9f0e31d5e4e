#pragma once

#include <map>
#include <vector>

#include "connsum/core.hpp"
#include "connsum/trace.hpp"

namespace connsum {

/// A letter of a harmonic-type word: exponent and ratio variable.
struct HLetter {
  int e = 1;
  Scalar x;

  friend bool operator==(const HLetter&, const HLetter&) = default;
  friend auto operator<=>(const HLetter&, const HLetter&) = default;
};

using HWordH = std::vector<HLetter>;
/// Words with integer multiplicities.
using HWordBag = std::map<HWordH, long>;

/// Concatenation-merge of two letters: exponents add, variables multiply.
HLetter merge(const HLetter& a, const HLetter& b);

/// Quasi-shuffle (stuffle) product of two words over strictly increasing summation chains.
HWordBag quasi_shuffle(const HWordH& u, const HWordH& v);

/// A non-decreasing chain rewritten as a sum over strictly increasing chains:
/// every way of merging runs of consecutive letters.
HWordBag weak_expand(const HWordH& v);

/// The boundary condition: a single Z_1 symbol as a combination of shuffle-type
/// MPLs, sorted by (k, z).  Output coefficients carry t.coef.
MplExpr boundary_reduce(const ZTerm& t, Trace* trace = nullptr);

/// Full pipeline: transport down to Z_1 and then apply the boundary condition.
MplExpr reduce(const ZTerm& t, Trace* trace = nullptr);

}  // namespace connsum
