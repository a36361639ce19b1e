#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace rdh {

/// Monetary amounts are exact integers in minor units; budget checks are
/// integer comparisons, never floating point.
using Money = std::int64_t;

enum class ComponentKind { Sensor, Actuator, Processing, Interface };

enum class AttackModel { Stealthy, NonStealthy };

/// Separate caps for redundancy, diversity, and hardening spending.
struct SplitBudget {
  Money redundancy = 0;
  Money diversity = 0;
  Money hardening = 0;
};

/// One cap on the sum of all three spending categories.
struct CombinedBudget {
  Money total = 0;
};

using BudgetConfig = std::variant<SplitBudget, CombinedBudget>;

/// Invalid input data: malformed files, broken invariants, unknown ids.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance too large for an exact method; callers should fall back to a
/// sampling-based alternative.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(ComponentKind kind);
std::string to_string(AttackModel attack);
ComponentKind component_kind_from_string(const std::string& text);
AttackModel attack_model_from_string(const std::string& text);

/// Throws ValidationError if any amount is negative.
void validate_budget(const BudgetConfig& budgets);

}  // namespace rdh
