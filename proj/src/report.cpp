#include "sigkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace sigkit {

namespace {

const char* direction_symbol(BoundDirection d) {
  switch (d) {
    case BoundDirection::LessEqual:
      return "<=";
    case BoundDirection::GreaterEqual:
      return ">=";
    case BoundDirection::Equal:
      return "=";
  }
  return "?";
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "check: " << check_name << '\n';
  for (const auto& [k, v] : parameters)
    out << "  param " << k << " = " << v << '\n';
  for (const auto& [k, v] : computed_values)
    out << "  " << k << " = " << v << '\n';
  out << "  bound: " << direction_symbol(bound.direction) << ' '
      << bound.name << " (" << bound.value << ") ["
      << bound.location << "]\n";
  out << "  result: " << (passed ? "PASS" : "FAIL") << "  ("
      << runtime_ms << " ms)\n";
  return out.str();
}

}  // namespace sigkit
