#include "connsum/recipe.hpp"

#include "connsum/boundary.hpp"
#include "connsum/errors.hpp"
#include "connsum/transport.hpp"

namespace connsum {

namespace {

bool all_ones(const Index& k) {
  for (int e : k)
    if (e != 1) return false;
  return true;
}

}  // namespace

std::optional<std::string> recipe_violation(const RecipeData& data) {
  const int m = static_cast<int>(data.components.size());
  if (m < 1) return "at least one component is required";
  for (const Pair& c : data.components) {
    if (c.empty()) return "components must be non-empty";
    if (c.has_zero_variable()) return "component variables must be non-zero";
  }
  if (data.bar.empty()) return "the bar must be non-empty";
  const Pair& l = data.bar;

  Scalar s(0);
  for (const Pair& c : data.components)
    if (!is_admissible(c.k)) s += c.z.back().inv();
  if (!is_admissible(l.k)) {
    if (s == l.z.back()) return "sum of reciprocals of the last variables equals w_s";
  } else if (s.is_zero()) {
    return "sum of reciprocals of the last variables vanishes";
  }

  std::vector<Scalar> ts(l.z.begin(), l.z.end());
  if (!all_ones(l.k)) ts.emplace_back(0);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> members;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) members.push_back(b);
    std::vector<int> pos(members.size(), 0);
    while (true) {
      std::vector<Scalar> choice;
      for (std::size_t q = 0; q < members.size(); ++q) choice.push_back(data.components[members[q]].z[pos[q]]);
      for (const Scalar& w : ts)
        if (!in_B(choice, w)) return "a choice of variables lies outside B(" + w.str() + ")";
      std::size_t q = 0;
      while (q < members.size() && ++pos[q] == data.components[members[q]].size()) pos[q++] = 0;
      if (q == members.size()) break;
    }
  }

  for (const Scalar& w : l.z) {
    if (!abs_eq_one(w)) continue;
    for (const Pair& c : data.components)
      if ((w - c.z.front().inv()).abs_sq() == 1) return "|w_k - 1/z_1| = 1 for a unimodular w_k";
  }

  bool raised = false;
  for (const Pair& c : data.components)
    for (int e : c.k) raised = raised || e >= 2;
  if (raised) {
    for (const Scalar& w : ts)
      if (!w.is_zero() && !abs_eq_one(w)) return "a raised exponent meets a bar variable strictly inside the disk";
  }

  if (m == 1 && !is_admissible(data.components[0].k) && !is_admissible(l.k)) {
    if (!abs_lt_one(data.components[0].z.back()) && !abs_lt_one(l.z.back()))
      return "both last variables are unimodular with non-admissible indices";
  }
  return std::nullopt;
}

Relation recipe_relation(const RecipeData& data) {
  if (auto why = recipe_violation(data)) throw Error(ErrorKind::PreconditionViolated, *why);

  ZTerm direct{1, data.components, data.bar};
  ZTerm extended = direct;
  extended.components.emplace_back();

  Relation r;
  r.source = "recipe";
  r.lhs.mpl = reduce(direct);
  for (const ZTerm& t : fundamental_step(extended).terms()) {
    ZTerm cur = t;
    if (cur.arity() > 1) {
      bool empty = false;
      for (int i = 0; i + 1 < cur.arity(); ++i) empty = empty || cur.components[i].empty();
      if (empty) cur = drop_empty_component(cur);
    }
    for (const ZTerm& z1 : reduce_to_Z1(cur, cur.arity() - 1).terms()) r.rhs.mpl.add(boundary_reduce(z1));
  }
  r.details.emplace_back("n", std::to_string(data.n()));
  return r;
}

}  // namespace connsum
