#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcl {

/// Index of an agent in the grand coalition; agents are named 0..n-1.
using Agent = int;

/// Upper bound on the size of the grand coalition. Coalitions are bitmasks.
inline constexpr int kMaxAgents = 16;

/// Size of the grand coalition for a session.
class AgentCount {
 public:
  explicit AgentCount(int n) : n_(n) {
    if (n < 1 || n > kMaxAgents) {
      throw std::invalid_argument("agent count must be in 1.." + std::to_string(kMaxAgents));
    }
  }
  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }

 private:
  int n_;
};

/// A set of agents, stored as a bitmask.
class Coalition {
 public:
  constexpr Coalition() = default;
  static constexpr Coalition from_mask(std::uint32_t mask) { return Coalition(mask); }
  static constexpr Coalition empty() { return Coalition(0); }
  static constexpr Coalition full(int agents) {
    return Coalition(agents >= 32 ? ~0u : ((1u << agents) - 1u));
  }
  static Coalition of(std::initializer_list<Agent> members) {
    Coalition c;
    for (Agent a : members) c = c.with(a);
    return c;
  }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool is_empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(Agent a) const noexcept { return (mask_ >> a) & 1u; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool subset_of(Coalition other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint(Coalition other) const noexcept { return (mask_ & other.mask_) == 0; }
  constexpr bool is_full(int agents) const noexcept { return *this == full(agents); }
  constexpr Coalition with(Agent a) const noexcept { return Coalition(mask_ | (1u << a)); }
  constexpr Coalition operator|(Coalition o) const noexcept { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const noexcept { return Coalition(mask_ & o.mask_); }
  constexpr Coalition minus(Coalition o) const noexcept { return Coalition(mask_ & ~o.mask_); }

  /// Highest member index + 1, or 0 for the empty coalition.
  constexpr int bound() const noexcept { return 32 - std::countl_zero(mask_); }

  std::vector<Agent> members() const {
    std::vector<Agent> out;
    for (Agent a = 0; a < 32; ++a) {
      if (contains(a)) out.push_back(a);
    }
    return out;
  }

  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Every coalition over `agents` agents, ordered by bitmask (the empty one first).
inline std::vector<Coalition> all_coalitions(int agents) {
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << agents);
  for (std::uint32_t m = 0; m < (1u << agents); ++m) out.push_back(Coalition::from_mask(m));
  return out;
}

}  // namespace gcl
