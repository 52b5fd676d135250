#include "sesstype/action.hpp"

#include <stdexcept>

namespace sesstype {

namespace {

bool is_tail_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool ActionName::is_valid(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  if (name == "end") return false;  // keyword
  for (char c : name.substr(1)) {
    if (!is_tail_char(c)) return false;
  }
  return true;
}

ActionName::ActionName(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) throw std::invalid_argument("invalid action name '" + name_ + "'");
}

std::string to_string(const Action& action) {
  return action.is_output() ? "!" + action.name.str() : action.name.str();
}

std::string to_string(const Label& label) {
  return label.is_success() ? std::string("✓") : to_string(label.action());
}

}  // namespace sesstype
