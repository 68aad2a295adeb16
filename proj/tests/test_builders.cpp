#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pstop/builders.hpp"
#include "pstop/codec.hpp"

using namespace pstop;

namespace {

GraphData random_graph(std::mt19937_64& rng, std::size_t n) {
  GraphData g{numbered_labels(n), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 2) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  return g;
}

bool symmetric(const Space& s) {
  for (Point x = 0; x < s.size(); ++x)
    for (Point y = 0; y < s.size(); ++y)
      if (s.converges(x, y) != s.converges(y, x)) return false;
  return true;
}

}  // namespace

TEST(FromGraph, PathOnThreeVertices) {
  const Space p = from_graph({{"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}});
  EXPECT_EQ(p.point_limits(0), make_subset(3, {0, 1}));
  EXPECT_EQ(p.point_limits(1), make_subset(3, {0, 1, 2}));
  EXPECT_EQ(p.point_limits(2), make_subset(3, {1, 2}));
  EXPECT_EQ(p, path_space(2));
}

TEST(FromGraph, EdgelessAndCycle) {
  EXPECT_EQ(from_graph({numbered_labels(3), {}}), discrete_space(3));
  const Space c = from_graph({numbered_labels(5),
                              {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}}});
  for (Point v = 0; v < 5; ++v)
    EXPECT_EQ(c.point_limits(v), make_subset(5, {(v + 4) % 5, v, (v + 1) % 5}));
  EXPECT_EQ(c, cycle_space(5));
}

TEST(FromGraph, RejectsMalformedEdges) {
  EXPECT_THROW(from_graph({{"a"}, {{"a", "z"}}}), MalformedEdge);
  EXPECT_THROW(from_graph({{"a", "b"}, {{"a", "a"}}}), MalformedEdge);
}

TEST(FromGraph, AlwaysSymmetric) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(symmetric(from_graph(random_graph(rng, 1 + t % 6))));
}

TEST(FromHypergraph, Examples) {
  const Space k3 = from_hypergraph({{"a", "b", "c"}, {{"a", "b", "c"}}}, HypergraphMode::Skeleton);
  for (Point v = 0; v < 3; ++v) EXPECT_EQ(k3.point_limits(v), full_subset(3));
  const Space alex = from_hypergraph({{"a", "b"}, {{"a", "b"}}}, HypergraphMode::Alexandrov);
  ASSERT_EQ(alex.size(), 3u);
  const Point ab = alex.index_of("{a,b}");
  // The edge converges to its faces; vertices are closed points.
  EXPECT_EQ(alex.point_limits(ab), full_subset(3));
  EXPECT_EQ(alex.point_limits(alex.index_of("{a}")), make_subset(3, {alex.index_of("{a}")}));
  const Space d = from_hypergraph({{"a", "b"}, {{"a"}, {"b"}}}, HypergraphMode::Skeleton);
  EXPECT_EQ(d.point_limits(0), make_subset(2, {0}));
  EXPECT_EQ(d.point_limits(1), make_subset(2, {1}));
  EXPECT_THROW(from_hypergraph({{"a"}, {{}}}, HypergraphMode::Skeleton), EmptyHyperedge);
}

TEST(FromHypergraph, CofaceOrientationIsTheOpposite) {
  const HypergraphData h{{"a", "b"}, {{"a", "b"}}};
  const Space f = from_hypergraph(h, HypergraphMode::Alexandrov, AlexandrovOrientation::Faces);
  const Space c = from_hypergraph(h, HypergraphMode::Alexandrov, AlexandrovOrientation::Cofaces);
  for (Point x = 0; x < 3; ++x)
    for (Point y = 0; y < 3; ++y) EXPECT_EQ(f.converges(x, y), c.converges(y, x));
}

TEST(FromHypergraph, SkeletonIsTwoSection) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    HypergraphData h{numbered_labels(n), {}};
    for (int e = 0; e < 3; ++e) {
      std::vector<std::string> edge;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 2) edge.push_back(h.vertices[v]);
      if (edge.empty()) edge.push_back(h.vertices[0]);
      h.edges.push_back(edge);
    }
    EXPECT_EQ(from_hypergraph(h, HypergraphMode::Skeleton), from_graph(two_section(h)));
  }
}

TEST(FromHypergraph, ConstructionsAreNotInjective) {
  const HypergraphData one{{"a", "b", "c"}, {{"a", "b", "c"}}};
  const HypergraphData three{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}};
  EXPECT_EQ(from_hypergraph(one, HypergraphMode::Skeleton),
            from_hypergraph(three, HypergraphMode::Skeleton));
  // The Alexandrov construction sees the 2-simplex only when the edge has it.
  EXPECT_NE(from_hypergraph(one, HypergraphMode::Alexandrov).size(),
            from_hypergraph(three, HypergraphMode::Alexandrov).size());
  const HypergraphData nested{{"a", "b"}, {{"a", "b"}, {"a"}}};
  const HypergraphData flat{{"a", "b"}, {{"a", "b"}}};
  EXPECT_EQ(from_hypergraph(nested, HypergraphMode::Alexandrov),
            from_hypergraph(flat, HypergraphMode::Alexandrov));
}

TEST(FromScaledMetric, Examples) {
  const std::vector<std::vector<double>> line{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  EXPECT_EQ(from_scaled_metric({numbered_labels(3), line, 1.0}), path_space(2));
  EXPECT_EQ(from_scaled_metric({numbered_labels(3), line, 0.0}), discrete_space(3));
  EXPECT_EQ(from_scaled_metric({numbered_labels(3), line, 2.0}), complete_space(3));
  EXPECT_THROW(from_scaled_metric({numbered_labels(2), {{0, 1}, {2, 0}}, 1.0}), AsymmetricMatrix);
  EXPECT_THROW(from_scaled_metric({numbered_labels(2), {{0, -1}, {-1, 0}}, 1.0}), NegativeDistance);
}

TEST(FromScaledMetric, TriangleInequalityNotRequired) {
  const std::vector<std::vector<double>> d{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  EXPECT_EQ(from_scaled_metric({numbered_labels(3), d, 1.0}), path_space(2));
}

TEST(FromScaledMetric, AlwaysSymmetric) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) d[a][b] = d[b][a] = u(rng);
    EXPECT_TRUE(symmetric(from_scaled_metric({numbered_labels(n), d, 1.5})));
  }
}

TEST(FromFiniteTopology, Examples) {
  EXPECT_EQ(from_finite_topology({{"0", "1"}, {{}, {"0"}, {"1"}, {"0", "1"}}}), discrete_space(2));
  EXPECT_EQ(from_finite_topology({{"0", "1"}, {{}, {"0", "1"}}}), indiscrete_space(2));
  const Space s = from_finite_topology({{"a", "b"}, {{}, {"a"}, {"a", "b"}}});
  EXPECT_EQ(s.point_limits(0), full_subset(2));
  EXPECT_EQ(s.point_limits(1), make_subset(2, {1}));
  EXPECT_THROW(from_finite_topology({{"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}}),
               NotATopology);
}

TEST(FromFiniteTopology, ClosureIsIdempotent) {
  // Topologies from random preorders: opens are the down-sets.
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) le[a][a] = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && rng() % 4 == 0) le[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (le[a][k] && le[k][b]) le[a][b] = true;
    FiniteTopologyData top{numbered_labels(n), {}};
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      bool down = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (((m >> b) & 1u) && le[a][b] && !((m >> a) & 1u)) down = false;
      if (!down) continue;
      std::vector<std::string> open;
      for (std::size_t a = 0; a < n; ++a)
        if ((m >> a) & 1u) open.push_back(top.points[a]);
      top.opens.push_back(open);
    }
    const Space s = from_finite_topology(top);
    EXPECT_TRUE(is_topological(s));
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const Subset c = closure_of(s, from_mask(n, m));
      EXPECT_EQ(closure_of(s, c), c);
    }
  }
}

TEST(Codec, EdgeListMatchesBuilder) {
  const GraphData g = read_edge_list("# vertices: 0 1 2\n0 1\n1 2\n");
  EXPECT_EQ(from_graph(g), from_graph({{"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}}));
  EXPECT_EQ(from_graph(read_edge_list(write_edge_list(g))), from_graph(g));
  EXPECT_THROW(read_edge_list("# vertices: 0 1\n0 7\n"), MalformedEdge);
}

TEST(Codec, SpaceDocumentRoundTripAndCentering) {
  const json doc = write_space(cycle_space(4));
  EXPECT_EQ(write_space(read_space(doc)), doc);
  const json bad = json::parse(R"({"points": ["a"], "kind": "point-limit", "limits": {"a": []}})");
  EXPECT_THROW(read_space(bad), CenteringViolation);
  const json unknown = json::parse(R"({"points": ["a"], "limits": {"a": ["z"]}})");
  EXPECT_THROW(read_space(unknown), UnknownPoint);
}

TEST(Codec, ParseErrorsCarryLocations) {
  try {
    read_space(json::parse(R"({"points": ["a"], "limits": {"a": [true]}})"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "limits.a[0]");
  }
  EXPECT_THROW(read_space(json::parse(R"({"points": ["a"]})")), ParseError);
}

TEST(Codec, OtherFormatsRoundTrip) {
  const HypergraphData h{{"a", "b", "c"}, {{"a", "b"}, {"c"}}};
  const HypergraphData h2 = read_hypergraph(write_hypergraph(h));
  EXPECT_EQ(h2.vertices, h.vertices);
  EXPECT_EQ(h2.edges, h.edges);
  const FiniteTopologyData t{{"a", "b"}, {{}, {"a"}, {"a", "b"}}};
  EXPECT_EQ(from_finite_topology(read_topology(write_topology(t))), from_finite_topology(t));
  const auto m = read_distance_csv("a,b,c\n0,1,2\n1,0,1\n2,1,0\n", 1.0);
  EXPECT_EQ(from_scaled_metric(m), from_scaled_metric({{"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 1.0}));
}
