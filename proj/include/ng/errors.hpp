#pragma once

#include <stdexcept>
#include <string>

namespace ng {

// Group passed where a non-nilpotent one is required (the graph is
// undefined for nilpotent groups).
class nilpotent_group_error : public std::runtime_error {
public:
  explicit nilpotent_group_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Enumeration or search budget exceeded.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Element or set not contained in the group it must belong to.
class membership_error : public std::invalid_argument {
public:
  explicit membership_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Group-spec string rejected; carries the offending position.
class spec_parse_error : public std::invalid_argument {
public:
  spec_parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " +
                              std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace ng
