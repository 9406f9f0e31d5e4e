#pragma once

#include <string>
#include <vector>

#include "connsum/core.hpp"

namespace connsum {

/// One rule application in a reduction: premise on the left, conclusions on the right.
struct TraceRecord {
  std::string rule;  // "swap", "drop_empty", "transport" or "boundary"
  ZTerm premise;
  ZExpr conclusions;          // for swap, drop_empty and transport
  MplExpr mpl_conclusions;    // for boundary
  std::vector<int> perm;      // for swap
};

using Trace = std::vector<TraceRecord>;

}  // namespace connsum
