#pragma once

// Discrete intervals and cylinders, homotopies of finite length, the one-step
// relation, gluing of intervals, homotopy classes and equivalences.

#include <cstdint>
#include <optional>
#include <vector>

#include "pstop/constructions.hpp"
#include "pstop/search.hpp"

namespace pstop {

/// I_n: the path 0 - 1 - ... - n with its end inclusions and projection.
struct IntervalObject {
  std::size_t length;
  Space space;
  SpaceMap end0;  // ∗ → I_n at 0
  SpaceMap end1;  // ∗ → I_n at n
  SpaceMap proj;  // I_n → ∗
};

/// Throws std::invalid_argument for n = 0.
IntervalObject interval(std::size_t n);

/// X × I_n; the point (x, t) has index x·(n+1) + t.
struct Cylinder {
  Space base;
  std::size_t length;
  Space space;
  SpaceMap i0;
  SpaceMap i1;
  SpaceMap p;
};

Cylinder cylinder(const Space& x, std::size_t n);
inline Point cyl_point(std::size_t n, Point x, std::size_t t) {
  return static_cast<Point>(x * (n + 1) + t);
}
/// I_n f : X × I_n → Y × I_n.
SpaceMap cylinder_map(const SpaceMap& f, std::size_t n);

/// A continuous H : X × I_n → Y.
class Homotopy {
 public:
  /// Throws NotContinuous, DomainMismatch.
  Homotopy(const Space& x, std::size_t n, SpaceMap h);

  const Space& base() const noexcept { return x_; }
  std::size_t length() const noexcept { return n_; }
  const SpaceMap& map() const noexcept { return h_; }
  const Space& codomain() const noexcept { return h_.codomain(); }
  /// H(−, t).
  Assignment slice(std::size_t t) const;
  SpaceMap start() const;
  SpaceMap finish() const;
  /// Slices 0..n.
  std::vector<Assignment> chain() const;

 private:
  Space x_;
  std::size_t n_;
  SpaceMap h_;
};

Homotopy constant_homotopy(const SpaceMap& f, std::size_t n);
/// H(x, t) = chain[t](x); consecutive entries must be one-step related.
Homotopy homotopy_from_chain(const Space& x, const Space& y,
                             const std::vector<Assignment>& chain);

struct OneStepCertificate {
  bool related = true;
  /// (y, x) with ẏ → x where one of the two cross conditions fails.
  std::optional<std::pair<Point, Point>> violation;
};

/// f and g continuous, and g(x) ∈ lim f(y), f(x) ∈ lim g(y) whenever ẏ → x.
/// Throws DomainMismatch.
OneStepCertificate one_step(const SpaceMap& f, const SpaceMap& g);
bool one_step_related(const Space& x, const Space& y, const Assignment& f,
                      const Assignment& g);
/// Restricts a search over X → Y to maps one-step related to f.
void restrict_to_one_step(MapSearch& s, const Space& x, const Space& y, const Assignment& f);
/// All continuous g one-step related to f, in lexicographic order.
std::vector<Assignment> one_step_neighbors(const Space& x, const Space& y, const Assignment& f,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

/// F ⋆ G, glued along F's end and G's start. Throws EndMismatch.
Homotopy concatenate(const Homotopy& f, const Homotopy& g);
Homotopy reverse(const Homotopy& h);

/// End-preserving isomorphism I_m ∪_{m∼0} I_n → I_{m+n}, if any.
std::optional<Assignment> interval_gluing_iso(std::size_t m, std::size_t n);

struct GluingReport {
  std::size_t length;
  std::size_t glued_size;
  std::size_t interval_size;
  bool literal_holds;
  struct Substitute {
    std::size_t m;
    std::size_t n;
    bool holds;
  };
  std::vector<Substitute> substitutes;  // every m, n ≥ 1 with m + n ≤ max_total
};

/// Decides I_n ∪ I_n ≅ I_n (ends preserved) and the substitute law
/// I_m ∪ I_n ≅ I_{m+n}.
GluingReport gluing_check(const IntervalObject& iv, std::size_t max_total = 6);

struct HomotopyClasses {
  std::vector<Assignment> maps;        // lexicographic
  std::vector<std::size_t> class_of;   // per map; classes numbered by first member
  std::size_t count = 0;
};

/// Components of the one-step graph on 𝒞(X, Y). Throws ExponentialTooLarge.
HomotopyClasses homotopy_classes(const Space& x, const Space& y,
                                 std::uint64_t exponential_cap = 50'000,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// Shortest one-step chain from f to g (first and last entries are f and g).
/// Ties go to the lexicographically first neighbour. Throws DomainMismatch,
/// SearchSpaceTooLarge.
std::optional<std::vector<Assignment>> are_homotopic(const SpaceMap& f, const SpaceMap& g,
                                                     std::uint64_t node_budget = kDefaultNodeBudget);

/// The one-step component of f, sorted.
std::vector<Assignment> homotopy_component(const Space& x, const Space& y, const Assignment& f,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

struct EquivalenceWitness {
  SpaceMap inverse;
  std::vector<Assignment> chain_gf;  // g∘f to id_X
  std::vector<Assignment> chain_fg;  // f∘g to id_Y
};

/// An isomorphism is answered by its inverse. Otherwise searches every
/// continuous g : Y → X in lexicographic order. Throws
/// ExponentialTooLarge when |X|^|Y| exceeds the cap.
std::optional<EquivalenceWitness> is_homotopy_equivalence(
    const SpaceMap& f, std::uint64_t exponential_cap = 50'000,
    std::uint64_t node_budget = kDefaultNodeBudget);

/// Z = (A × I_n)/((b, t) ∼ (b, 0) for b ∈ i(B)).
struct RelativeCylinder {
  SpaceMap inclusion;
  std::size_t length;
  Space space;
  SpaceMap q;         // A × I_n → Z
  SpaceMap i0;        // A → Z
  SpaceMap i1;
  SpaceMap p;         // Z → A
  PushoutResult doubled;  // A ∪_B A
  SpaceMap j;         // A ∪_B A → Z
  bool fold_factors;  // p ∘ j = (1, 1)
};

/// Throws NotEmbedding.
RelativeCylinder relative_cylinder(const SpaceMap& i, std::size_t n);
/// H is stationary on i(B), i.e. factors through the relative cylinder.
bool is_homotopy_rel(const Homotopy& h, const SpaceMap& i);

}  // namespace pstop
