#pragma once

// Products, coproducts, subspaces, quotients, pushouts and function spaces.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pstop/space.hpp"

namespace pstop {

struct ProductResult {
  Space space;
  SpaceMap p0;
  SpaceMap p1;
};

/// Pair (a, b) has index a·|Y| + b. Throws KindMismatch for subset-limit
/// operands.
ProductResult product(const Space& x, const Space& y);
inline Point pair_index(std::size_t y_size, Point a, Point b) {
  return static_cast<Point>(a * y_size + b);
}
/// f × g.
SpaceMap product_map(const SpaceMap& f, const SpaceMap& g);
/// (f, g) : W → X × Y.
SpaceMap pairing(const SpaceMap& f, const SpaceMap& g, const Space& xy);

struct CoproductResult {
  Space space;
  SpaceMap in0;
  SpaceMap in1;
};

/// X points first, then Y points; labels are tagged "0:" and "1:".
CoproductResult coproduct(const Space& x, const Space& y);

struct SubspaceResult {
  Space space;
  SpaceMap inclusion;
};

SubspaceResult subspace(const Space& x, const Subset& u);

struct QuotientResult {
  Space space;
  SpaceMap projection;
};

/// classes must partition the carrier; classes are reordered by least
/// member. Throws NotAPartition.
QuotientResult quotient(const Space& x, const std::vector<std::vector<Point>>& classes);
/// class_of[x] is any class key; keys are renumbered by first occurrence.
QuotientResult quotient_by_key(const Space& x, const std::vector<std::size_t>& class_of);

struct PushoutResult {
  Space apex;
  SpaceMap q0;  // A → apex
  SpaceMap q1;  // Y → apex
  /// Coproduct point (A first, then Y) → apex point.
  std::vector<Point> class_map;
};

/// Pushout of A ←i− B −f→ Y. Throws DomainMismatch.
PushoutResult pushout(const SpaceMap& i, const SpaceMap& f);
/// The mediating map apex → W for a cocone (u: A → W, v: Y → W). Throws
/// IncompatibleData when u ∘ i ≠ v ∘ f.
SpaceMap pushout_induced(const PushoutResult& po, const SpaceMap& u, const SpaceMap& v);

class FunctionSpace {
 public:
  FunctionSpace(Space x, Space y, std::uint64_t exponential_cap = 50'000);

  const Space& space() const noexcept { return space_; }
  const Space& domain() const noexcept { return x_; }
  const Space& codomain() const noexcept { return y_; }
  const std::vector<Assignment>& maps() const noexcept { return maps_; }
  const Assignment& map(Point p) const { return maps_[p]; }
  std::optional<Point> index_of(const Assignment& a) const;

 private:
  struct Hash {
    std::size_t operator()(const Assignment& a) const noexcept;
  };
  Space x_;
  Space y_;
  std::vector<Assignment> maps_;
  std::unordered_map<Assignment, Point, Hash> index_;
  Space space_;
};

/// Continuous convergence on 𝒞(X, Y): f ∈ lim ġ iff f(x) ∈ lim g(y) whenever
/// x ∈ lim ẏ. Throws ExponentialTooLarge, KindMismatch.
FunctionSpace function_space(const Space& x, const Space& y,
                             std::uint64_t exponential_cap = 50'000);

/// ω : 𝒞(X, Y) × X → Y.
SpaceMap evaluation(const FunctionSpace& fs);
/// X × Y → Z to X → 𝒞(Y, Z). Throws NotContinuous, DomainMismatch.
SpaceMap curry(const SpaceMap& f, const Space& x, const Space& y, const FunctionSpace& yz);
/// X → 𝒞(Y, Z) to X × Y → Z.
SpaceMap uncurry(const SpaceMap& g, const FunctionSpace& yz);

}  // namespace pstop
