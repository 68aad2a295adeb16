#pragma once

// Finite convergence structures, principal filters, closure/neighbourhood
// duality and continuity.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pstop/errors.hpp"

namespace pstop {

using Point = std::uint32_t;
using Subset = boost::dynamic_bitset<std::uint64_t>;
/// Values of a map on the domain points, in canonical domain order.
using Assignment = std::vector<Point>;

Subset empty_subset(std::size_t n);
Subset full_subset(std::size_t n);
Subset make_subset(std::size_t n, std::initializer_list<Point> pts);
Subset make_subset(std::size_t n, const std::vector<Point>& pts);
std::vector<Point> members(const Subset& s);
/// Bitmask of a subset of a carrier with at most 32 points.
std::uint32_t to_mask(const Subset& s);
Subset from_mask(std::size_t n, std::uint32_t mask);

/// The principal filter {A : generator ⊆ A}. On a finite carrier every filter
/// has this form; point filters are the ultrafilters.
struct PrincipalFilter {
  PrincipalFilter(std::size_t carrier_size, Subset generator);
  static PrincipalFilter point(std::size_t carrier_size, Point x);

  std::size_t carrier_size;
  Subset generator;

  bool contains(const Subset& a) const { return generator.is_subset_of(a); }
  bool is_ultrafilter() const { return generator.count() == 1; }
};

struct StructureKind {
  bool is_convergence = false;
  bool is_limit = false;
  bool is_pseudotopological = false;

  friend bool operator==(const StructureKind&, const StructureKind&) = default;
};

/// A finite convergence space.
///
/// Point-limit spaces store lim ẏ for every point y; the limits of any other
/// principal filter are the intersection over its generator, so these are
/// pseudotopological by construction. Subset-limit spaces store the limit set
/// of every principal filter and can express convergence structures that are
/// not limit spaces (carriers of at most 16 points).
///
/// A Space is an immutable value with shared storage; copies are cheap.
class Space {
 public:
  enum class Kind { PointLimit, SubsetLimit };
  static constexpr std::size_t kMaxSubsetLimitPoints = 16;

  /// The empty space.
  Space();

  /// Throws CenteringViolation when y ∉ limits[y], UnknownPoint when a limit
  /// set is not sized to the carrier.
  static Space point_limit(std::vector<std::string> labels,
                           std::vector<Subset> limits);
  /// limits_by_mask[m] is the limit set of the filter generated by mask m;
  /// entry 0 is ignored.
  static Space subset_limit(std::vector<std::string> labels,
                            std::vector<Subset> limits_by_mask);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  Kind kind() const noexcept;

  const std::vector<std::string>& labels() const noexcept;
  const std::string& label(Point p) const;
  std::optional<Point> find(std::string_view label) const;
  /// Throws UnknownPoint.
  Point index_of(std::string_view label) const;

  /// lim ẏ.
  const Subset& point_limits(Point y) const;
  /// V(x) = {y : ẏ → x}; generator of the neighbourhood filter of x.
  const Subset& neighborhood(Point x) const;
  const std::vector<Point>& point_limit_list(Point y) const;
  const std::vector<Point>& neighborhood_list(Point x) const;
  bool converges(Point y, Point x) const { return point_limits(y).test(x); }

  /// Limits of the principal filter with the given generator.
  /// Throws UnknownFilter for an empty generator.
  Subset filter_limits(const Subset& generator) const;
  Subset filter_limits(const PrincipalFilter& f) const;

  /// Same carrier, labels and limits of every principal filter.
  friend bool operator==(const Space& a, const Space& b);

  struct Data;  // opaque storage

 private:
  explicit Space(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

/// make_space: point-limit space from labelled limit lists.
Space make_space(const std::vector<std::string>& points,
                 const std::vector<std::vector<std::string>>& point_limits);

/// One-point space, the terminal object.
Space point_space(std::string label = "*");
Space discrete_space(std::size_t n);
Space indiscrete_space(std::size_t n);
/// Labels "0".."n-1".
std::vector<std::string> numbered_labels(std::size_t n);

/// Exhaustive axiom check over all non-empty subsets; for point-limit spaces
/// the answer is known without enumeration.
StructureKind classify(const Space& s);
/// Same check, enumerating subsets even for point-limit spaces (≤ 16 points).
StructureKind classify_exhaustive(const Space& s);

/// Point-limit space with lim ẋ taken from s. Idempotent, and its limits
/// contain those of s on every filter when s is a convergence structure.
Space pseudotopological_modification(const Space& s);
/// Subset-limit copy of a point-limit space (≤ 16 points).
Space to_subset_limit(const Space& s);

/// Adherence of A: {x : ∃a ∈ A, ȧ → x}.
Subset closure_of(const Space& s, const Subset& a);
PrincipalFilter neighborhood_filter(const Space& s, Point x);

/// Outcome of a continuity check: either a witness that the map is
/// continuous or a filter (by its generator) and a limit point x with
/// filter → x but f(filter) ↛ f(x).
struct ContinuityCertificate {
  bool continuous = true;
  Subset violating_generator;
  Point violating_limit = 0;
};

ContinuityCertificate check_continuity(const Space& dom, const Space& cod,
                                       const Assignment& a);
/// Fast path used by the search kernels: point-filter criterion only.
bool is_continuous_assignment(const Space& dom, const Space& cod,
                              const Assignment& a);

/// A function between spaces with its continuity certificate.
class SpaceMap {
 public:
  /// Throws UnknownPoint when the assignment is not total or out of range.
  SpaceMap(Space domain, Space codomain, Assignment assignment);

  const Space& domain() const noexcept { return dom_; }
  const Space& codomain() const noexcept { return cod_; }
  const Assignment& assignment() const noexcept { return a_; }
  Point operator()(Point x) const { return a_[x]; }
  const ContinuityCertificate& certificate() const noexcept { return cert_; }
  bool continuous() const noexcept { return cert_.continuous; }

  friend bool operator==(const SpaceMap& f, const SpaceMap& g) {
    return f.a_ == g.a_ && f.dom_ == g.dom_ && f.cod_ == g.cod_;
  }

 private:
  Space dom_;
  Space cod_;
  Assignment a_;
  ContinuityCertificate cert_;
};

ContinuityCertificate is_continuous(const SpaceMap& f);

SpaceMap identity_map(const Space& x);
SpaceMap constant_map(const Space& x, const Space& y, Point value);
/// g ∘ f. Throws DomainMismatch.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);
/// Map from labelled pairs (domain label → codomain label).
SpaceMap map_from_labels(
    const Space& dom, const Space& cod,
    const std::vector<std::pair<std::string, std::string>>& pairs);

bool is_injective(const Assignment& a, std::size_t codomain_size);
/// Injective, continuous and the domain carries the subspace structure.
bool is_embedding(const SpaceMap& f);
/// Bijective with continuous inverse.
bool is_isomorphism(const SpaceMap& f);

}  // namespace pstop
