#pragma once

#include <string>
#include <vector>

namespace normlab {

/// Outcome of one named identity, inequality or informational comparison.
struct Check {
  enum class Kind {
    Identity,       // must hold for every input; a failure is thrown
    Assertion,      // guaranteed for the inputs we accept; a failure is an alert
    Informational,  // reported only
  };

  std::string name;
  Kind kind = Kind::Assertion;
  bool holds = true;
  std::string lhs;
  /// "==", "<=" or ">=".
  std::string relation;
  std::string rhs;
  std::string note;
};

std::string to_string(Check::Kind kind);

/// True when no Identity or Assertion check failed.
bool all_guaranteed_hold(const std::vector<Check>& checks);

}  // namespace normlab
