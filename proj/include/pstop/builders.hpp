#pragma once

// Spaces from graphs, hypergraphs, scaled metric data and finite topologies.

#include <string>
#include <utility>
#include <vector>

#include "pstop/space.hpp"

namespace pstop {

struct GraphData {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct HypergraphData {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

/// Symmetric, zero-diagonal, non-negative; the triangle inequality is not
/// required.
struct ScaledMetricData {
  std::vector<std::string> points;
  std::vector<std::vector<double>> distances;
  double scale = 0.0;
};

struct FiniteTopologyData {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

enum class HypergraphMode { Skeleton, Alexandrov };

/// Which way a simplex converges in the Alexandrov construction: towards its
/// faces (closed points are the vertices) or towards its cofaces.
enum class AlexandrovOrientation { Faces, Cofaces };

/// lim v̇ = {v} ∪ neighbours(v). Throws MalformedEdge for unknown endpoints
/// and self-loops.
Space from_graph(const GraphData& g);

/// Skeleton: the graph on the 2-section. Alexandrov: the simplices of the
/// induced complex ordered by (dimension, vertex order) with the Alexandrov
/// closure. Throws EmptyHyperedge.
Space from_hypergraph(const HypergraphData& h, HypergraphMode mode,
                      AlexandrovOrientation orientation = AlexandrovOrientation::Faces);
GraphData two_section(const HypergraphData& h);

/// lim ẏ = {x : d(x, y) ≤ ε}. Throws AsymmetricMatrix, NegativeDistance.
Space from_scaled_metric(const ScaledMetricData& m);

/// lim ẏ = closure of {y}. Throws NotATopology naming a missing set.
Space from_finite_topology(const FiniteTopologyData& t);

/// Graph helpers used throughout the tests and samples.
Space path_space(std::size_t edges);   // P_{edges+1}: 0 - 1 - ... - edges
Space cycle_space(std::size_t n);      // C_n; n = 2 is the indiscrete pair
Space complete_space(std::size_t n);   // K_n, the indiscrete space

/// True iff closure_of is idempotent, i.e. the space is topological.
bool is_topological(const Space& s);

}  // namespace pstop
