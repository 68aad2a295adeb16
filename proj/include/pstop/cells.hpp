#pragma once

// Adherence, covering systems, interior, finite subcovers and compactness;
// finite cell models, attachments and presentations; Serre lifting and
// budgeted weak-equivalence checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstop/codec.hpp"
#include "pstop/cofibration.hpp"
#include "pstop/invariants.hpp"

namespace pstop {

Subset adherence(const Space& s, const Subset& a);
bool is_closed(const Space& s, const Subset& a);
bool is_open(const Space& s, const Subset& a);

struct CoveringSystem {
  std::vector<Subset> sets;
  Subset scope;
};

struct CoverCertificate {
  bool covering = true;
  /// A scope point and a convergent filter generator contained in no set.
  std::optional<std::pair<Point, Subset>> witness;
};

/// Every principal filter converging to a scope point contains a set of the
/// family. Point-limit spaces reduce each point to the generator V(x);
/// subset-limit spaces enumerate the convergent generators.
CoverCertificate is_covering_system(const Space& s, const CoveringSystem& cs);

/// Points at which the family is a covering system.
Subset interior(const Space& s, const std::vector<Subset>& family);

struct Subcover {
  std::vector<std::size_t> indices;  // into the input family, ascending
  std::vector<Subset> sets;
  bool minimal = true;               // false when the greedy fallback ran
};

inline constexpr std::size_t kExactSubcoverLimit = 20;

/// Minimum-cardinality covering sub-family; ties go to the lexicographically
/// least index list. Families larger than kExactSubcoverLimit use a greedy
/// cover. Throws NotACoveringSystem.
Subcover finite_subcover(const Space& s, const CoveringSystem& cs);

/// Sets and scope intersected with U, renumbered to the subspace on U.
CoveringSystem restrict_covering_system(const CoveringSystem& cs, const Subset& u);

/// Every point filter converges somewhere.
bool is_compact(const Space& s);

// ---------------------------------------------------------------------------

/// Sⁿ⁻¹ and the cone Dⁿ = (Sⁿ⁻¹ × I_L) / (Sⁿ⁻¹ × {L}) with boundary at t = 0.
/// S⁻¹ = ∅, D⁰ = ∗, S⁰ is the discrete pair and higher spheres are suspension
/// models with every level of length L.
struct CellModel {
  std::size_t dim;
  std::size_t length;
  Space sphere;
  Space disk;
  SpaceMap boundary;  // sphere → disk
  json declaration() const { return {{"dim", dim}, {"length", length}}; }
};

/// Throws std::invalid_argument for length 0 when dim ≥ 1.
CellModel cell_model(std::size_t dim, std::size_t length);

struct CellAttachment {
  Space result;
  SpaceMap inclusion;       // X → result
  SpaceMap characteristic;  // disk → result
};

/// Pushout X ←h− Sⁿ⁻¹ → Dⁿ. Points coming from X keep their labels and new
/// points are labelled "e<tag>:" followed by their disk label. Throws
/// NotContinuousAttachment, DomainMismatch.
CellAttachment attach_cell(const Space& x, const CellModel& model, const SpaceMap& h,
                           const std::string& tag = "");

struct CellSpec {
  std::size_t dim;
  std::size_t length;
  Assignment attaching;  // sphere points → points of the space built so far
};

struct Presentation {
  Space base;
  std::vector<CellSpec> cells;
  /// stages[0] = base, stages[k+1] after the k-th attachment.
  std::vector<Space> stages;
  /// characteristic[k] : disk of cell k → result.
  std::vector<SpaceMap> characteristic;
  /// base → result.
  Assignment base_inclusion;
  const Space& result() const { return stages.back(); }
  json to_json() const;
};

/// Attaches the cells left to right. Throws NotContinuousAttachment.
Presentation build_presentation(const Space& base, const std::vector<CellSpec>& cells);
/// {"base": space, "cells": [{"dim", "length", "attachingMap": [labels]}]}.
/// Attaching maps name points of the stage they attach to.
Presentation read_presentation(const json& doc, const std::filesystem::path& base_dir = {});

/// Cells whose open part (disk minus boundary) meets K ⊆ result.
std::vector<std::size_t> cells_meeting(const Presentation& p, const Subset& k);

struct PresentationSearch {
  std::uint64_t examined = 0;
  std::optional<Presentation> non_topological;
};

/// Enumerates presentations built from ∅ with at most max_cells cells of
/// dimension ≤ max_dim and lengths ≤ max_length, stopping at the first whose
/// result is not topological (closure not idempotent).
PresentationSearch search_non_topological(std::size_t max_cells, std::size_t max_dim,
                                          std::size_t max_length,
                                          std::size_t max_result_size = 12);

// ---------------------------------------------------------------------------

struct SerreOptions {
  std::vector<std::pair<std::size_t, std::size_t>> models{{0, 2}, {1, 2}, {2, 2}};  // (dim, length)
  std::uint64_t square_cap = 20'000;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SerreSquare {
  std::size_t model;  // index into the declared models
  Assignment top;     // disk → E
  Assignment bottom;  // disk × I₁ → B
  std::optional<Assignment> lift;
};

struct SerreReport {
  std::vector<CellModel> models;
  std::vector<SerreSquare> squares;
  bool truncated = false;  // square cap reached
  Verdict verdict() const;
  json to_json(const Space& e, const Space& b) const;
};

/// Lifts disk × I₁ → E for every commuting square over p : E → B.
SerreReport serre_check(const SpaceMap& p, const SerreOptions& options = {});

struct WeqOptions {
  std::size_t n_max = 1;
  std::vector<std::size_t> budgets{3, 4};
  PiNOptions pin;
};

struct WeqCheck {
  Point base;
  std::size_t n;
  std::size_t length;
  std::size_t domain_classes;
  std::size_t codomain_classes;
  bool bijective;
  bool domain_stabilized;
  bool codomain_stabilized;
};

struct WeqReport {
  std::size_t pi0_domain = 0;
  std::size_t pi0_codomain = 0;
  bool pi0_bijective = false;
  std::vector<WeqCheck> checks;
  std::string inconclusive_reason;
  Verdict verdict = Verdict::Inconclusive;
  /// "passes up to n = <n>, L = <L>" or the first failing level.
  std::string qualification;
  json to_json(const Space& x, const Space& y) const;
};

/// π₀ bijection, then for every base point x and 1 ≤ n ≤ n_max the class map
/// πₙ(X, x) → πₙ(Y, f x) at the last budget. A failing bijection at an
/// unstabilized budget gives Inconclusive. Throws NotContinuous.
WeqReport weak_equivalence_check(const SpaceMap& f, const WeqOptions& options = {});

}  // namespace pstop
