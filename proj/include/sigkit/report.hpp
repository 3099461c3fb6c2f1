#pragma once

#include <map>
#include <string>

namespace sigkit {

enum class BoundDirection { LessEqual, GreaterEqual, Equal };

struct StatedBound {
  std::string name;
  double value = 0.0;
  BoundDirection direction = BoundDirection::LessEqual;
  std::string location;  // where the bound is stated
};

// Result of one harness check: computed values against a stated bound.
struct VerificationReport {
  std::string check_name;
  std::map<std::string, double> parameters;
  std::map<std::string, double> computed_values;
  StatedBound bound;
  bool passed = false;
  double runtime_ms = 0.0;

  std::string to_text() const;
};

}  // namespace sigkit
