#pragma once

#include <json.hpp>

#include "connsum/core.hpp"
#include "connsum/numeric.hpp"
#include "connsum/relation.hpp"
#include "connsum/trace.hpp"

namespace connsum::json {

using nlohmann::json;

json encode(const Rational& q);
json encode(const Scalar& s);
json encode(const Pair& p);
json encode(const ZTerm& t);
json encode(const ZExpr& e);
json encode(const MplTerm& m);
json encode(const MplExpr& e);
json encode(const Side& s);
json encode(const Relation& r);
json encode(const TraceRecord& r);
json encode(const Trace& t);
json encode(const Complex& c);
json encode(const EvalReport& r);
json encode(const VerifyReport& r);

/// Decoders throw Error(ParseError) on malformed input.  Integers may be JSON
/// numbers or decimal strings; a rational may also be written "p/q".
Rational decode_rational(const json& j);
Scalar decode_scalar(const json& j);
Pair decode_pair(const json& j);
ZTerm decode_zterm(const json& j);
ZExpr decode_zexpr(const json& j);
MplTerm decode_mpl(const json& j);
MplExpr decode_mplexpr(const json& j);
Side decode_side(const json& j);
Relation decode_relation(const json& j);
Trace decode_trace(const json& j);

}  // namespace connsum::json
