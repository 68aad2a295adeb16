#pragma once

// Based spaces, wedge, torus, suspension, sphere models, π₀ and budgeted πₙ.

#include <cstdint>
#include <optional>
#include <vector>

#include "pstop/codec.hpp"
#include "pstop/homotopy.hpp"

namespace pstop {

/// ∗ is terminal, so the trivial map X → ∗ is unique and not stored.
struct BasedSpace {
  Space space;
  Point base = 0;
};

/// Throws UnknownPoint when base lies outside the carrier.
BasedSpace make_based(Space s, Point base);
/// The discrete pair {"0", "1"} based at "0".
BasedSpace sphere0();

/// Pushout of A ← ∗ → B at the base points.
BasedSpace wedge(const BasedSpace& a, const BasedSpace& b);

/// Σ_Y X: the relative cylinder on Y ⊂ X with both ends folded onto X.
struct Torus {
  RelativeCylinder cylinder;
  Space space;
  SpaceMap tau;  // Z → Σ_Y X
  SpaceMap i;    // X → Σ_Y X
  SpaceMap r;    // Σ_Y X → X
  bool r_tau_is_p;
};

/// Throws NotEmbedding.
Torus torus(const SpaceMap& i, std::size_t n);

/// ΣA = (A × I_n) with A × {0, n} ∪ {base} × I_n collapsed to the base
/// point, assembled as the torus on ∗ → A followed by collapsing A.
struct Suspension {
  BasedSpace result;
  /// (a, t) ↦ point of ΣA, indexed a·(n+1) + t.
  std::vector<Point> glue;
  std::size_t length;
};

/// Non-base points are labelled "(a,t)", the base "*".
Suspension suspension(const BasedSpace& a, std::size_t n);

/// Iterated suspension; levels[0] is the base object.
struct SuspensionTower {
  std::vector<std::size_t> lengths;
  std::vector<BasedSpace> levels;
  std::vector<std::vector<Point>> glue;  // glue[k] for level k ≥ 1
  const BasedSpace& top() const { return levels.back(); }
};

SuspensionTower suspension_tower(const BasedSpace& a, const std::vector<std::size_t>& lengths);
/// Σᵏ S⁰ with the given per-level lengths.
SuspensionTower sphere_model(std::size_t k, const std::vector<std::size_t>& lengths);

/// Top-level map from a tower to a shorter one of the same depth, applying
/// t ↦ min(t, L) at every level. Throws DomainMismatch.
Assignment tower_collapse(const SuspensionTower& from, const SuspensionTower& to);

struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t count = 0;
  std::vector<std::vector<Point>> classes() const;
};

/// Components of mutual convergence (ẏ → z and ż → y), which are the
/// classes of maps ∗ → X.
Partition pi0(const Space& x);

struct GroupTable {
  std::size_t identity = 0;
  std::vector<std::size_t> core;      // minimal core length per class
  std::vector<std::size_t> inverse;   // class of the reversed representative
  /// product[a][b], or -1 when cores add up beyond the budget.
  std::vector<std::vector<long>> product;
  std::size_t defined = 0;
  bool well_defined = true;
  bool identity_law = true;
  bool inverse_law = true;
  bool associative = true;
  std::size_t associativity_checked = 0;
  bool laws() const { return well_defined && identity_law && inverse_law && associative; }
};

struct PiNBudget {
  std::size_t length;
  std::size_t maps;
  std::size_t classes;
  std::vector<std::size_t> class_sizes;
  std::vector<Assignment> representatives;  // lexicographically least member
};

struct PiNResult {
  std::size_t n;
  Point base;
  std::vector<PiNBudget> budgets;
  /// class_maps[k] sends classes at budget k to classes at budget k+1.
  std::vector<std::vector<std::size_t>> class_maps;
  std::vector<bool> bijective;
  bool class_maps_well_defined = true;
  bool stabilized = false;
  std::optional<GroupTable> group;  // n ≥ 1, on the last budget
  /// Every based map at the last budget (sorted) and its class.
  std::vector<Assignment> last_maps;
  std::vector<std::size_t> last_class_of;
  json to_json() const;
};

struct PiNOptions {
  std::uint64_t map_cap = 2'000'000;  // based maps enumerated per budget
  std::uint64_t node_budget = kDefaultNodeBudget;  // per search
  std::size_t rep_cap = 8;            // representatives per class in consistency checks
};

/// Classes of based maps Σⁿ_L S⁰ → X under based one-step homotopy for each
/// budget L. Throws ExponentialTooLarge when a budget has more than map_cap
/// based maps, SearchSpaceTooLarge.
PiNResult pi_n(const BasedSpace& x, std::size_t n, const std::vector<std::size_t>& budgets,
               const PiNOptions& options = {});

/// Class index, at the budget of `result`, of a based map on the top level
/// of sphere_model(n, {L, .., L}).
std::optional<std::size_t> classify_based_map(const PiNResult& result, const Assignment& f);

/// Winding number of a loop I_L → C_k: the sum of steps in {−1, 0, 1}
/// divided by k. Throws NotALoop when the codomain is not cycle_space(k)
/// with k ≥ 3 or the ends differ.
long winding_oracle(const SpaceMap& loop);
/// Loop on I_L read off a based map Σ(S⁰; L) → X.
Assignment loop_from_sphere_map(const SuspensionTower& circle, const Assignment& f);

}  // namespace pstop
