#include "connsum/json_io.hpp"

#include <limits>

#include "connsum/errors.hpp"

namespace connsum::json {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

json encode_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class decode_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("not a decimal integer: " + j.get<std::string>());
    return z;
  }
  bad("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index decode_index(const json& j) {
  if (!j.is_array()) bad("index must be an array");
  Index k;
  for (const json& e : j) {
    if (!e.is_number_integer()) bad("index entries must be integers");
    if (e.get<long long>() < 1 || e.get<long long>() > std::numeric_limits<int>::max())
      bad("index entries must be positive integers");
    k.push_back(e.get<int>());
  }
  return k;
}

std::vector<Scalar> decode_scalars(const json& j) {
  if (!j.is_array()) bad("variables must be an array");
  std::vector<Scalar> z;
  for (const json& e : j) z.push_back(decode_scalar(e));
  return z;
}

json encode_scalars(const std::vector<Scalar>& z) {
  json a = json::array();
  for (const Scalar& s : z) a.push_back(encode(s));
  return a;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

json encode(const Rational& q) { return json::array({encode_integer(q.get_num()), encode_integer(q.get_den())}); }

json encode(const Scalar& s) {
  if (s.is_infinite()) return "inf";
  return {{"re", encode(s.re())}, {"im", encode(s.im())}};
}

json encode(const Pair& p) { return {{"k", p.k}, {"z", encode_scalars(p.z)}}; }

json encode(const ZTerm& t) {
  json comps = json::array();
  for (const Pair& c : t.components) comps.push_back(encode(c));
  return {{"coef", encode(t.coef)}, {"components", comps}, {"bar", encode(t.bar)}};
}

json encode(const ZExpr& e) {
  json a = json::array();
  for (const ZTerm& t : e.terms()) a.push_back(encode(t));
  return a;
}

json encode(const MplTerm& m) {
  return {{"coef", encode(m.coef)},
          {"kind", m.kind == MplKind::Shuffle ? "shuffle" : "harmonic"},
          {"k", m.k},
          {"z", encode_scalars(m.z)}};
}

json encode(const MplExpr& e) {
  json a = json::array();
  for (const MplTerm& t : e.terms()) a.push_back(encode(t));
  return a;
}

json encode(const Side& s) {
  json a = encode(s.z);
  for (const json& m : encode(s.mpl)) a.push_back(m);
  return a;
}

json encode(const Relation& r) {
  json prov = {{"source", r.source}};
  for (const auto& [k, v] : r.details) prov[k] = v;
  return {{"lhs", encode(r.lhs)}, {"rhs", encode(r.rhs)}, {"provenance", prov}};
}

json encode(const TraceRecord& r) {
  json out = {{"rule", r.rule}, {"premise", encode(r.premise)}};
  out["conclusions"] = r.rule == "boundary" ? encode(r.mpl_conclusions) : encode(r.conclusions);
  if (r.rule == "swap") out["perm"] = r.perm;
  return out;
}

json encode(const Trace& t) {
  json a = json::array();
  for (const TraceRecord& r : t) a.push_back(encode(r));
  return a;
}

json encode(const Complex& c) { return json::array({c.real(), c.imag()}); }

json encode(const EvalReport& r) {
  return {{"value", encode(r.value)},         {"partial_sum", encode(r.partial_sum)},
          {"truncation", r.truncation},       {"tail_estimate", r.tail_estimate},
          {"converged", r.converged},         {"method", r.method}};
}

json encode(const VerifyReport& r) {
  json terms = json::array();
  for (const TermReport& t : r.terms) terms.push_back({{"side", t.label}, {"value", encode(t.value)}, {"tail", t.tail}});
  return {{"pass", r.passed},         {"converged", r.converged}, {"lhs", encode(r.lhs)},
          {"rhs", encode(r.rhs)},     {"difference", r.difference}, {"tail", r.tail},
          {"tolerance", r.tol},       {"terms", terms}};
}

Rational decode_rational(const json& j) {
  return guarded([&]() -> Rational {
    if (j.is_number_integer()) return Rational(decode_integer(j));
    if (j.is_string()) {
      Rational q;
      if (q.set_str(j.get<std::string>(), 10) != 0) bad("not a rational: " + j.get<std::string>());
      if (q.get_den() == 0) bad("zero denominator");
      q.canonicalize();
      return q;
    }
    if (j.is_array() && j.size() == 2) {
      const mpz_class num = decode_integer(j[0]);
      const mpz_class den = decode_integer(j[1]);
      if (den == 0) bad("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    bad("expected a rational, got " + j.dump());
  });
}

Scalar decode_scalar(const json& j) {
  return guarded([&]() -> Scalar {
    if (j.is_string() && j.get<std::string>() == "inf") return Scalar::infinity();
    if (j.is_object()) {
      Rational re = j.contains("re") ? decode_rational(j.at("re")) : Rational(0);
      Rational im = j.contains("im") ? decode_rational(j.at("im")) : Rational(0);
      return Scalar(re, im);
    }
    return Scalar(decode_rational(j));
  });
}

Pair decode_pair(const json& j) {
  return guarded([&]() -> Pair {
    if (j.is_array()) return Pair::ones(decode_index(j));
    Index k = decode_index(field(j, "k"));
    std::vector<Scalar> z = j.contains("z") ? decode_scalars(j.at("z")) : std::vector<Scalar>(k.size(), Scalar(1));
    try {
      return Pair(std::move(k), std::move(z));
    } catch (const Error& e) {
      bad(e.what());
    }
  });
}

ZTerm decode_zterm(const json& j) {
  return guarded([&]() -> ZTerm {
    ZTerm t;
    if (j.contains("coef")) t.coef = decode_rational(j.at("coef"));
    const json& comps = field(j, "components");
    if (!comps.is_array() || comps.empty()) bad("components must be a non-empty array");
    for (const json& c : comps) t.components.push_back(decode_pair(c));
    t.bar = j.contains("bar") ? decode_pair(j.at("bar")) : Pair::ones({1});
    return t;
  });
}

ZExpr decode_zexpr(const json& j) {
  if (!j.is_array()) bad("expression must be an array");
  ZExpr e;
  for (const json& t : j) e.add(decode_zterm(t));
  return e;
}

MplTerm decode_mpl(const json& j) {
  return guarded([&]() -> MplTerm {
    MplTerm m;
    if (j.contains("coef")) m.coef = decode_rational(j.at("coef"));
    const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "shuffle";
    if (kind == "shuffle") m.kind = MplKind::Shuffle;
    else if (kind == "harmonic") m.kind = MplKind::Harmonic;
    else bad("unknown MPL kind " + kind);
    m.k = decode_index(field(j, "k"));
    m.z = j.contains("z") ? decode_scalars(j.at("z")) : std::vector<Scalar>(m.k.size(), Scalar(1));
    if (m.z.size() != m.k.size()) bad("index and variables differ in length");
    return m;
  });
}

MplExpr decode_mplexpr(const json& j) {
  if (!j.is_array()) bad("expression must be an array");
  MplExpr e;
  for (const json& t : j) e.add(decode_mpl(t));
  return e;
}

Side decode_side(const json& j) {
  if (!j.is_array()) bad("relation side must be an array");
  Side s;
  for (const json& t : j) {
    if (t.is_object() && t.contains("components")) s.z.add(decode_zterm(t));
    else s.mpl.add(decode_mpl(t));
  }
  return s;
}

Relation decode_relation(const json& j) {
  return guarded([&]() -> Relation {
    Relation r;
    r.lhs = decode_side(field(j, "lhs"));
    r.rhs = decode_side(field(j, "rhs"));
    if (j.contains("provenance")) {
      const json& p = j.at("provenance");
      if (p.is_object()) {
        for (auto it = p.begin(); it != p.end(); ++it) {
          const std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
          if (it.key() == "source") r.source = v;
          else r.details.emplace_back(it.key(), v);
        }
      }
    }
    return r;
  });
}

Trace decode_trace(const json& j) {
  return guarded([&]() -> Trace {
    if (!j.is_array()) bad("trace must be an array");
    Trace out;
    for (const json& rec : j) {
      TraceRecord r;
      r.rule = field(rec, "rule").get<std::string>();
      r.premise = decode_zterm(field(rec, "premise"));
      if (r.rule == "boundary") r.mpl_conclusions = decode_mplexpr(field(rec, "conclusions"));
      else r.conclusions = decode_zexpr(field(rec, "conclusions"));
      if (rec.contains("perm")) r.perm = rec.at("perm").get<std::vector<int>>();
      out.push_back(std::move(r));
    }
    return out;
  });
}

}  // namespace connsum::json
