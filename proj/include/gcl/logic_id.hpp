#pragma once

#include <array>
#include <string>
#include <string_view>

namespace gcl {

/// One of the eight logics, named by the frame properties it assumes:
/// S (seriality), I (independence of agents), D (determinism).
struct LogicId {
  bool serial = false;
  bool independent = false;
  bool deterministic = false;

  /// True iff every property of `this` is also a property of `other`.
  constexpr bool subset_of(const LogicId& other) const noexcept {
    return (!serial || other.serial) && (!independent || other.independent) &&
           (!deterministic || other.deterministic);
  }

  constexpr auto operator<=>(const LogicId&) const = default;

  /// Canonical spelling: letters in S, I, D order; "E" for the empty string.
  std::string name() const;

  /// Accepts letters in any order ("DS" == "SD"), "E" (or "") for the minimal
  /// logic, and the aliases MCL (= E) and CL (= SID). Case-insensitive.
  static LogicId parse(std::string_view text);

  /// The eight logics, from E up to SID.
  static std::array<LogicId, 8> all();
};

}  // namespace gcl
