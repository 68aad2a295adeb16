#pragma once

// Cofibrations via the retract characterization, homotopy extension,
// the interchange map, mapping-cylinder factorization and the axiom suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstop/codec.hpp"
#include "pstop/homotopy.hpp"

namespace pstop {

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

/// j₀ : A ∪_{i₀} I_nB → I_nA and, when found, r with r ∘ j₀ = id.
struct RetractProblem {
  SpaceMap inclusion;
  std::size_t length;
  PushoutResult pushout;  // A ←i− B −i₀→ I_nB
  SpaceMap j0;
  std::optional<SpaceMap> retract;
  std::uint64_t nodes = 0;
};

/// Builds and solves the retract problem at one cylinder length. Throws
/// NotEmbedding when i is not injective, NotContinuous, SearchSpaceTooLarge.
RetractProblem solve_retract(const SpaceMap& i, std::size_t n,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct CofibrationResult {
  bool cofibration = false;
  std::size_t length = 1;            // length of the deciding attempt
  std::vector<std::size_t> tried;    // lengths attempted, ascending
  std::optional<SpaceMap> retract;
  std::uint64_t nodes = 0;
};

/// Tries lengths n..max(n, max_cyl) and stops at the first retract found.
CofibrationResult is_cofibration(const SpaceMap& i, std::size_t n = 1, std::size_t max_cyl = 0,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// j : A ∪_B I_nB ∪_B A → I_nA assembled from i₀, I_n i and i₁.
SpaceMap relative_cylinder_map(const SpaceMap& i, std::size_t n);

/// H : I_nA → Z with H ∘ i_k = f and H ∘ I_n i = G, where G is a homotopy on
/// B into Z and k ∈ {0, 1}. Throws IncompatibleData when G at end k differs
/// from f ∘ i.
std::optional<Homotopy> hep_solve(const SpaceMap& i, const SpaceMap& f, const Homotopy& g,
                                  int k = 0, std::uint64_t node_budget = kDefaultNodeBudget);

/// T : I_n I_n X → I_n I_n X, ((x, s), t) ↦ ((x, t), s).
struct Interchange {
  Space iix;
  SpaceMap t;
};
Interchange interchange(const Space& x, std::size_t n);

struct InterchangeCheck {
  bool continuous;
  bool involution;
  bool t_ik;   // T ∘ i_k(IX) = I(i_k(X)) for k = 0, 1
  bool t_iik;  // T ∘ I(i_k(X)) = i_k(IX) for k = 0, 1
  bool all() const { return continuous && involution && t_ik && t_iik; }
};
InterchangeCheck check_interchange(const Space& x, std::size_t n);

/// Mapping cylinder M_f = (X × I_n) ∪_{i₁, f} Y with i = i₀ and g the
/// induced projection.
struct Factorization {
  SpaceMap f;
  std::size_t length;
  Space mapping_cylinder;
  SpaceMap i;
  SpaceMap g;
};
Factorization factorize(const SpaceMap& f, std::size_t n = 1);

struct FactorizationReport {
  bool commutes = false;
  Verdict cofibration = Verdict::Inconclusive;
  Verdict equivalence = Verdict::Inconclusive;
  Verdict verdict() const;
};
FactorizationReport verify_factorization(const Factorization& fz, std::size_t max_cyl = 0,
                                         std::uint64_t exponential_cap = 50'000,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Homotopy equivalence decision with budget exhaustion reported as
/// Inconclusive.
Verdict weak_equivalence_verdict(const SpaceMap& f, std::uint64_t exponential_cap = 50'000,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// α : A → B is a retract of β : C → D: there are s : A → C, r : C → A,
/// s' : B → D, r' : D → B with r s = 1, r' s' = 1, β s = s' α, α r = r' β.
struct MapRetraction {
  Assignment s, r, s2, r2;
};
std::optional<MapRetraction> is_retract_of(const SpaceMap& alpha, const SpaceMap& beta,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------

enum class Suite { ICategory, CofibrationCategory };
std::optional<Suite> parse_suite(const std::string& name);
const char* to_string(Suite s);

struct AxiomInstance {
  std::string description;
  Verdict verdict;
  json payload;  // enough to replay the instance
};

struct AxiomResult {
  std::string id;
  std::vector<AxiomInstance> instances;
  Verdict verdict() const;
};

struct SuiteOptions {
  std::size_t length = 1;
  std::size_t max_cyl = 0;
  std::uint64_t seed = 0;
  std::size_t maps_per_pair = 2;    // sampled maps per ordered pair of spaces
  std::size_t factorizations = 20;
  std::size_t squares = 10;
  std::size_t max_space_size = 6;   // larger samples are skipped by map-heavy checks
  std::uint64_t exponential_cap = 50'000;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct AxiomReport {
  Suite suite;
  SuiteOptions options;
  std::vector<std::string> sample;  // names of the sampled spaces
  std::vector<AxiomResult> axioms;
  Verdict verdict() const;
  json to_json() const;
};

/// Instance-level verification of the axiom lists on the sample.
AxiomReport verify_axioms(const std::vector<std::pair<std::string, Space>>& sample, Suite suite,
                          const SuiteOptions& options = {});

}  // namespace pstop
