#pragma once

#include <optional>
#include <string>
#include <vector>

#include "connsum/core.hpp"
#include "connsum/relation.hpp"

namespace connsum {

/// Input of the relation recipe: n - 1 non-empty pairs (k_i; z_i) and a
/// non-empty bar (l; w).
struct RecipeData {
  std::vector<Pair> components;
  Pair bar;

  int n() const { return static_cast<int>(components.size()) + 1; }
};

/// The first violated assumption, described in words, or nullopt.
std::optional<std::string> recipe_violation(const RecipeData& data);

/// Z_{n-1}(k_1; ...; k_{n-1} | l) evaluated two ways: directly (lhs), and by
/// appending an empty component and transporting everything into it (rhs).
Relation recipe_relation(const RecipeData& data);

}  // namespace connsum
