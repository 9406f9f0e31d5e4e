#include "connsum/text.hpp"

#include <sstream>

namespace connsum {

namespace {

std::string join_index(const Index& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

std::string join_scalars(const std::vector<Scalar>& z) {
  std::string s;
  for (std::size_t i = 0; i < z.size(); ++i) s += (i ? ", " : "") + z[i].str();
  return s;
}

/// "+ 2*", "- ", "+ 1/2*" prefixes; the first term drops a leading "+ ".
std::string coefficient_prefix(const Rational& c, bool first) {
  std::string sign = sgn(c) < 0 ? "- " : (first ? "" : "+ ");
  if (first && sgn(c) < 0) sign = "-";
  const Rational a = abs(c);
  return sign + (a == 1 ? std::string() : a.get_str() + "*");
}

template <class Term>
std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms) {
    Term unit = t;
    unit.coef = 1;
    s += (first ? "" : " ") + coefficient_prefix(t.coef, first) + to_text(unit);
    first = false;
  }
  return s;
}

}  // namespace

std::string to_text(const Pair& p) {
  if (p.empty()) return "()";
  bool trivial = true;
  for (const Scalar& z : p.z) trivial = trivial && z.is_one();
  if (trivial) return join_index(p.k);
  return "{" + join_index(p.k) + "}(" + join_scalars(p.z) + ")";
}

std::string to_text(const ZTerm& t) {
  std::ostringstream os;
  if (t.coef != 1) os << coefficient_prefix(t.coef, true);
  os << "Z_" << t.arity() << "(";
  for (int i = 0; i < t.arity(); ++i) os << (i ? "; " : "") << to_text(t.components[i]);
  os << " | " << to_text(t.bar) << ")";
  return os.str();
}

std::string to_text(const ZExpr& e) { return join_terms(e.terms()); }

std::string to_text(const MplTerm& m) {
  std::ostringstream os;
  if (m.coef != 1) os << coefficient_prefix(m.coef, true);
  os << (m.kind == MplKind::Shuffle ? "Li^sh_{" : "Li^*_{") << join_index(m.k) << "}(" << join_scalars(m.z) << ")";
  return os.str();
}

std::string to_text(const MplExpr& e) { return join_terms(e.terms()); }

std::string to_text(const Relation& r) {
  auto side = [](const Side& s) {
    std::string out;
    if (!s.z.empty()) out += to_text(s.z);
    if (!s.mpl.empty()) out += (out.empty() ? "" : " + (") + to_text(s.mpl) + (s.z.empty() ? "" : ")");
    return out.empty() ? std::string("0") : out;
  };
  return side(r.lhs) + " = " + side(r.rhs);
}

}  // namespace connsum
