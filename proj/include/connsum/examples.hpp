#pragma once

#include <string>
#include <vector>

namespace connsum {

struct ExampleCheck {
  std::string description;
  bool passed = false;
  std::string detail;
};

struct ExampleResult {
  std::string name;
  bool passed = true;
  std::vector<ExampleCheck> checks;
};

/// Names accepted by run_example; parameterised families are listed with a
/// representative argument.
std::vector<std::string> example_names();

/// Runs one named example: cloitre, oloa, zeta4, triple, amtagpa:<n>,
/// dilcher:<k>, dilog, kummer-newman or eight-term.  Throws DomainError for an
/// unknown name.
ExampleResult run_example(const std::string& name);

}  // namespace connsum
