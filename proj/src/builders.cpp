#include "pstop/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace pstop {

namespace {

std::unordered_map<std::string, Point> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Point> idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], static_cast<Point>(i)).second)
      throw UnknownPoint("duplicate point identifier '" + labels[i] + "'");
  return idx;
}

std::vector<Subset> reflexive(std::size_t n) {
  std::vector<Subset> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(make_subset(n, {static_cast<Point>(i)}));
  return l;
}

}  // namespace

Space from_graph(const GraphData& g) {
  const auto idx = index_labels(g.vertices);
  const std::size_t n = g.vertices.size();
  auto lim = reflexive(n);
  for (const auto& [u, v] : g.edges) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu == idx.end() || iv == idx.end())
      throw MalformedEdge("edge {" + u + ", " + v + "} references an unknown vertex");
    if (iu->second == iv->second) throw MalformedEdge("self-loop at '" + u + "'");
    lim[iu->second].set(iv->second);
    lim[iv->second].set(iu->second);
  }
  return Space::point_limit(g.vertices, std::move(lim));
}

GraphData two_section(const HypergraphData& h) {
  const auto idx = index_labels(h.vertices);
  GraphData g{h.vertices, {}};
  std::set<std::pair<Point, Point>> seen;
  for (const auto& e : h.edges) {
    if (e.empty()) throw EmptyHyperedge("hyperedge with no vertices");
    std::vector<Point> pts;
    for (const auto& v : e) {
      auto it = idx.find(v);
      if (it == idx.end()) throw UnknownPoint("hyperedge vertex '" + v + "'");
      pts.push_back(it->second);
    }
    for (Point a : pts)
      for (Point b : pts)
        if (a < b && seen.emplace(a, b).second)
          g.edges.emplace_back(h.vertices[a], h.vertices[b]);
  }
  return g;
}

Space from_hypergraph(const HypergraphData& h, HypergraphMode mode,
                      AlexandrovOrientation orientation) {
  if (mode == HypergraphMode::Skeleton) return from_graph(two_section(h));

  const auto idx = index_labels(h.vertices);
  // Simplices as sorted vertex-index vectors; order by (size, lexicographic).
  std::set<std::vector<Point>> simplices;
  for (const auto& e : h.edges) {
    if (e.empty()) throw EmptyHyperedge("hyperedge with no vertices");
    std::set<Point> pts;
    for (const auto& v : e) {
      auto it = idx.find(v);
      if (it == idx.end()) throw UnknownPoint("hyperedge vertex '" + v + "'");
      pts.insert(it->second);
    }
    std::vector<Point> verts(pts.begin(), pts.end());
    if (verts.size() > 20) throw EmptyHyperedge("hyperedges are limited to 20 vertices");
    for (std::uint32_t m = 1; m < (1u << verts.size()); ++m) {
      std::vector<Point> face;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (m & (1u << i)) face.push_back(verts[i]);
      simplices.insert(std::move(face));
    }
  }
  std::vector<std::vector<Point>> sigma(simplices.begin(), simplices.end());
  std::stable_sort(sigma.begin(), sigma.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t n = sigma.size();
  std::vector<std::string> labels;
  for (const auto& s : sigma) {
    std::string l = "{";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + h.vertices[s[i]];
    labels.push_back(l + "}");
  }
  std::vector<Subset> lim(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool b_face_of_a =
          std::includes(sigma[a].begin(), sigma[a].end(), sigma[b].begin(), sigma[b].end());
      const bool b_coface_of_a =
          std::includes(sigma[b].begin(), sigma[b].end(), sigma[a].begin(), sigma[a].end());
      if (orientation == AlexandrovOrientation::Faces ? b_face_of_a : b_coface_of_a) lim[a].set(b);
    }
  return Space::point_limit(std::move(labels), std::move(lim));
}

Space from_scaled_metric(const ScaledMetricData& m) {
  const std::size_t n = m.points.size();
  index_labels(m.points);
  if (m.scale < 0) throw NegativeDistance("scale must be non-negative");
  if (m.distances.size() != n) throw AsymmetricMatrix("matrix is not square");
  for (const auto& row : m.distances)
    if (row.size() != n) throw AsymmetricMatrix("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.distances[i][i] != 0.0) throw AsymmetricMatrix("non-zero diagonal at " + m.points[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.distances[i][j] < 0)
        throw NegativeDistance("d(" + m.points[i] + ", " + m.points[j] + ") < 0");
      if (m.distances[i][j] != m.distances[j][i])
        throw AsymmetricMatrix("d(" + m.points[i] + ", " + m.points[j] + ") != d(" +
                               m.points[j] + ", " + m.points[i] + ")");
    }
  }
  std::vector<Subset> lim(n, Subset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (m.distances[x][y] <= m.scale) lim[y].set(x);
  return Space::point_limit(m.points, std::move(lim));
}

Space from_finite_topology(const FiniteTopologyData& t) {
  const auto idx = index_labels(t.points);
  const std::size_t n = t.points.size();
  auto describe = [&](const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (Point p : members(s)) {
      out += (first ? "" : ",") + t.points[p];
      first = false;
    }
    return out + "}";
  };
  std::set<Subset> opens;
  for (const auto& o : t.opens) {
    Subset s(n);
    for (const auto& p : o) {
      auto it = idx.find(p);
      if (it == idx.end()) throw UnknownPoint("open set member '" + p + "'");
      s.set(it->second);
    }
    opens.insert(s);
  }
  if (!opens.count(Subset(n))) throw NotATopology("missing " + describe(Subset(n)));
  if (!opens.count(full_subset(n))) throw NotATopology("missing " + describe(full_subset(n)));
  for (const auto& a : opens)
    for (const auto& b : opens) {
      if (!opens.count(a | b)) throw NotATopology("missing union " + describe(a | b));
      if (!opens.count(a & b)) throw NotATopology("missing intersection " + describe(a & b));
    }
  // x ∈ cl{y} iff every open set containing x contains y.
  std::vector<Subset> lim(n, Subset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      bool in = true;
      for (const auto& o : opens)
        if (o.test(x) && !o.test(y)) { in = false; break; }
      if (in) lim[y].set(x);
    }
  return Space::point_limit(t.points, std::move(lim));
}

Space path_space(std::size_t edges) {
  GraphData g{numbered_labels(edges + 1), {}};
  for (std::size_t i = 0; i < edges; ++i)
    g.edges.emplace_back(std::to_string(i), std::to_string(i + 1));
  return from_graph(g);
}

Space cycle_space(std::size_t n) {
  if (n <= 2) return complete_space(n);
  GraphData g{numbered_labels(n), {}};
  for (std::size_t i = 0; i < n; ++i)
    g.edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
  return from_graph(g);
}

Space complete_space(std::size_t n) { return indiscrete_space(n); }

bool is_topological(const Space& s) {
  for (Point y = 0; y < s.size(); ++y) {
    const Subset& c = s.point_limits(y);
    if (closure_of(s, c) != c) return false;
  }
  return true;
}

}  // namespace pstop
