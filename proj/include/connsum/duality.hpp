#pragma once

#include <functional>

#include "connsum/core.hpp"
#include "connsum/relation.hpp"

namespace connsum {

/// Every z_i in B_1(1), Re z_1 != 1/2, and |z_r| != 1 whenever k is not admissible.
bool dual_condition(const Pair& p);

/// Dual of an admissible index with trivial variables.
Index mzv_dual(const Index& k);

struct DualPair {
  int sign = 1;
  Pair pair;
  int iota = 0;  // number of variables different from 1
};

/// The closed-form dual: Li^sh_k(z) = (-1)^iota Li^sh_{k'}(z').
DualPair dagger(const Pair& p);
/// The same dual obtained by transporting Z_2(p; empty) one step at a time.
DualPair reduce_duality(const Pair& p);

Relation duality_relation(const Pair& p);

/// Replaces every term rejected by keep with its dual.
MplExpr normalize_by_duality(const MplExpr& e, const std::function<bool(const MplTerm&)>& keep);

}  // namespace connsum
