#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subshift {

// Malformed input: unknown symbols, bad JSON, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query was made on a graph that does not satisfy the operation's contract,
// e.g. ray counting on a presentation that is not resolved on that side.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration or search hit one of the configured limits. `partial_count`
// holds how many results had been produced before stopping.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

// A counter-machine run could not follow the requested branch choices.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subshift
