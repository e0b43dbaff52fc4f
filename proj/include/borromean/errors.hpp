#pragma once

#include <stdexcept>
#include <string>

namespace borromean {

// Bad user input: unknown block names, malformed sequences, invalid diagrams.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A search exceeded its configured node budget.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(unsigned long long bound)
      : std::runtime_error("search budget of " + std::to_string(bound) +
                           " nodes exceeded"),
        bound_(bound) {}

  unsigned long long bound() const noexcept { return bound_; }

private:
  unsigned long long bound_;
};

// An internal consistency check failed.
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace borromean
