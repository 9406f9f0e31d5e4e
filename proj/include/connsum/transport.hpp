#pragma once

#include <optional>

#include "connsum/core.hpp"
#include "connsum/trace.hpp"

namespace connsum {

/// One application of the transport relation with the last component as the
/// receiver.  Components 1..n-1 and the bar are peeled, the receiver is raised
/// by v_n with sum 1/v_i = t, and the resulting n right-hand terms (the one with
/// an empty bar omitted) are returned, already multiplied by t.coef.
ZExpr fundamental_step(const ZTerm& t);

/// Whether component j (0-based) can serve as the receiver for the whole reduction.
bool is_transportable(const ZTerm& t, int j);
/// The first admissible receiver, trying the last component first.
std::optional<int> find_receiver(const ZTerm& t);

/// Rewrites t as a combination of Z_1 symbols.  Empty components are dropped
/// up front; the receiver is found automatically.
ZExpr reduce_to_Z1(const ZTerm& t, Trace* trace = nullptr);
/// Same, with the receiver fixed to component j (0-based).
ZExpr reduce_to_Z1(const ZTerm& t, int j, Trace* trace = nullptr);

}  // namespace connsum
