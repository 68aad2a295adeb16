#pragma once

// Backtracking search for continuous maps under unary restrictions, and
// isomorphism search. These are the exact kernels behind retract, extension,
// lifting, homotopy and enumeration queries.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pstop/space.hpp"

namespace pstop {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Finds continuous maps dom → cod with h(x) restricted per point.
///
/// Variables are chosen by fewest remaining candidates (ties to the lowest
/// index) and values are tried in canonical order, so the visiting order is
/// deterministic. Assigning x = z prunes every y with ẏ → x to V(z) and every
/// x' with ẋ → x' to lim ż. Exceeding the node budget throws
/// SearchSpaceTooLarge.
class MapSearch {
 public:
  MapSearch(const Space& dom, const Space& cod);

  void restrict_to(Point x, const Subset& allowed);
  void fix(Point x, Point value);

  /// Calls visit for each solution until it returns false. Returns the number
  /// of solutions visited.
  std::uint64_t for_each(const std::function<bool(const Assignment&)>& visit,
                         std::uint64_t node_budget = kDefaultNodeBudget);
  std::optional<Assignment> first(std::uint64_t node_budget = kDefaultNodeBudget);
  /// All solutions in lexicographic order.
  std::vector<Assignment> all(std::uint64_t node_budget = kDefaultNodeBudget);

  std::uint64_t nodes_used() const noexcept { return nodes_; }

 private:
  bool recurse(std::vector<std::uint64_t>& cand, Assignment& a, std::size_t assigned,
               const std::function<bool(const Assignment&)>& visit, std::uint64_t& count);

  const Space& dom_;
  const Space& cod_;
  std::size_t words_;
  std::vector<std::uint64_t> initial_;
  std::vector<std::uint64_t> cod_limits_;  // per target point, words_ each
  std::vector<std::uint64_t> cod_nbhd_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = kDefaultNodeBudget;
};

/// All continuous maps in lexicographic order. Throws ExponentialTooLarge when
/// |cod|^|dom| exceeds the cap.
std::vector<Assignment> continuous_maps(const Space& dom, const Space& cod,
                                        std::uint64_t exponential_cap = 50'000);
std::uint64_t count_continuous_maps(const Space& dom, const Space& cod,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

/// |base|^exp saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp);

/// Isomorphism dom → cod respecting the given fixed images, if any.
std::optional<Assignment> find_isomorphism(
    const Space& a, const Space& b,
    const std::vector<std::pair<Point, Point>>& fixed = {},
    std::uint64_t node_budget = kDefaultNodeBudget);

inline bool are_isomorphic(const Space& a, const Space& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace pstop
