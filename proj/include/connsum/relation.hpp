#pragma once

#include <string>
#include <utility>
#include <vector>

#include "connsum/core.hpp"

namespace connsum {

/// One side of an identity: Z symbols and MPLs, summed.
struct Side {
  ZExpr z;
  MplExpr mpl;

  bool empty() const { return z.empty() && mpl.empty(); }
};

struct Relation {
  Side lhs;
  Side rhs;
  std::string source;  // e.g. "duality", "ohno", "recipe"
  std::vector<std::pair<std::string, std::string>> details;
};

/// lhs - rhs on the MPL parts (Z parts are not expanded).
MplExpr mpl_difference(const Relation& r);

}  // namespace connsum
