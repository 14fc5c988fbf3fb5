#pragma once

#include <stdexcept>
#include <string>

namespace treecolor {

/// Argument outside the domain of an operation (bad node index, h = 0 split,
/// color label out of range, empty partition).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input violates an operation's precondition, e.g. a non-colorable partition
/// passed to the coloring engine.
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a size guard (enumeration height, tree height, count index).
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Malformed serialized document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace treecolor
