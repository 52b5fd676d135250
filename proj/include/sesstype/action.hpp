#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sesstype {

/// Message name; matches `[a-z][a-zA-Z0-9_]*` and is not the keyword `end`.
class ActionName {
 public:
  /// Throws std::invalid_argument when `name` is not a valid identifier.
  explicit ActionName(std::string name);

  static bool is_valid(std::string_view name) noexcept;

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const ActionName&, const ActionName&) = default;
  friend std::strong_ordering operator<=>(const ActionName& a, const ActionName& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

enum class Polarity : std::uint8_t { Input, Output };

struct Action {
  Polarity polarity;
  ActionName name;

  static Action input(std::string name) { return {Polarity::Input, ActionName(std::move(name))}; }
  static Action output(std::string name) { return {Polarity::Output, ActionName(std::move(name))}; }

  bool is_input() const noexcept { return polarity == Polarity::Input; }
  bool is_output() const noexcept { return polarity == Polarity::Output; }

  /// The co-action: `a` <-> `!a`.
  Action co() const {
    return {is_input() ? Polarity::Output : Polarity::Input, name};
  }

  friend bool operator==(const Action&, const Action&) = default;
  friend std::strong_ordering operator<=>(const Action& a, const Action& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
};

/// Observable of a labelled transition: a visible action or the success flag.
class Label {
 public:
  explicit Label(Action action) : action_(std::move(action)) {}

  static Label success() { return Label(); }

  bool is_success() const noexcept { return !action_.has_value(); }
  bool is_input() const noexcept { return action_ && action_->is_input(); }
  bool is_output() const noexcept { return action_ && action_->is_output(); }

  /// Precondition: !is_success().
  const Action& action() const { return *action_; }

  /// Success is its own co-label.
  Label co() const { return action_ ? Label(action_->co()) : success(); }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (!a.action_ || !b.action_) return a.action_.has_value() <=> b.action_.has_value();
    return *a.action_ <=> *b.action_;
  }

 private:
  Label() = default;
  std::optional<Action> action_;
};

std::string to_string(const Action& action);
std::string to_string(const Label& label);

}  // namespace sesstype
