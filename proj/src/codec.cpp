#include "pstop/codec.hpp"

#include <fstream>
#include <sstream>

namespace pstop {

namespace {

std::string as_point_id(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where, "point identifiers must be strings or integers");
}

std::vector<std::string> read_id_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_point_id(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Subset ids_to_subset(const Space& s, const std::vector<std::string>& ids,
                     const std::string& where) {
  Subset out(s.size());
  for (const auto& id : ids) {
    auto p = s.find(id);
    if (!p) throw UnknownPoint("'" + id + "' at " + where);
    out.set(*p);
  }
  return out;
}

json subset_to_ids(const Space& s, const Subset& sub) {
  json arr = json::array();
  for (Point p : members(sub)) arr.push_back(s.label(p));
  return arr;
}

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Space read_space(const json& doc) {
  const auto points = read_id_list(require(doc, "points", "$"), "points");
  std::string kind = "point-limit";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ParseError("kind", "expected a string");
    kind = doc["kind"].get<std::string>();
  }
  const json& limits = require(doc, "limits", "$");
  const std::size_t n = points.size();
  // Build a throwaway discrete space for label lookup.
  std::vector<Subset> refl;
  for (std::size_t i = 0; i < n; ++i) refl.push_back(make_subset(n, {static_cast<Point>(i)}));
  const Space carrier = Space::point_limit(points, refl);

  if (kind == "point-limit") {
    if (!limits.is_object()) throw ParseError("limits", "expected an object keyed by point");
    std::vector<Subset> lim(n, Subset(n));
    for (auto it = limits.begin(); it != limits.end(); ++it) {
      auto p = carrier.find(it.key());
      if (!p) throw UnknownPoint("'" + it.key() + "' at limits");
      const std::string where = "limits." + it.key();
      lim[*p] = ids_to_subset(carrier, read_id_list(it.value(), where), where);
    }
    return Space::point_limit(points, std::move(lim));
  }
  if (kind == "subset-limit") {
    if (n > Space::kMaxSubsetLimitPoints)
      throw ParseError("points", "subset-limit documents are limited to 16 points");
    if (!limits.is_array()) throw ParseError("limits", "expected an array of filter records");
    std::vector<Subset> by_mask(std::size_t{1} << n, Subset(n));
    std::vector<bool> seen(by_mask.size(), false);
    for (std::size_t i = 0; i < limits.size(); ++i) {
      const std::string where = "limits[" + std::to_string(i) + "]";
      const Subset gen = ids_to_subset(
          carrier, read_id_list(require(limits[i], "filter", where), where + ".filter"), where);
      if (gen.none()) throw ParseError(where, "empty filter generator");
      const auto m = to_mask(gen);
      by_mask[m] = ids_to_subset(
          carrier, read_id_list(require(limits[i], "limits", where), where + ".limits"), where);
      seen[m] = true;
    }
    for (std::uint32_t m = 1; m < by_mask.size(); ++m)
      if (!seen[m]) {
        json missing = subset_to_ids(carrier, from_mask(n, m));
        throw UnknownFilter("no limits listed for filter " + missing.dump());
      }
    return Space::subset_limit(points, std::move(by_mask));
  }
  throw ParseError("kind", "unknown kind '" + kind + "'");
}

json write_space(const Space& s) {
  json doc;
  doc["points"] = s.labels();
  if (s.kind() == Space::Kind::PointLimit) {
    doc["kind"] = "point-limit";
    json lim = json::object();
    for (Point y = 0; y < s.size(); ++y) lim[s.label(y)] = subset_to_ids(s, s.point_limits(y));
    doc["limits"] = lim;
  } else {
    doc["kind"] = "subset-limit";
    json lim = json::array();
    const std::size_t n = s.size();
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      const Subset gen = from_mask(n, m);
      lim.push_back({{"filter", subset_to_ids(s, gen)},
                     {"limits", subset_to_ids(s, s.filter_limits(gen))}});
    }
    doc["limits"] = lim;
  }
  return doc;
}

GraphData read_edge_list(const std::string& text) {
  GraphData g;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto add_vertex = [&](const std::string& v) {
    if (std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end())
      g.vertices.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      const std::string tag = "vertices:";
      if (body.rfind(tag, 0) == 0) {
        if (have_header) throw ParseError("line " + std::to_string(lineno), "second vertices header");
        have_header = true;
        for (const auto& v : split_ws(body.substr(tag.size()))) {
          if (std::find(g.vertices.begin(), g.vertices.end(), v) != g.vertices.end())
            throw ParseError("line " + std::to_string(lineno), "duplicate vertex '" + v + "'");
          g.vertices.push_back(v);
        }
      }
      continue;
    }
    const auto toks = split_ws(t);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(lineno), "expected 'u v', got '" + t + "'");
    for (const auto& v : toks) {
      if (have_header) {
        if (std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end())
          throw MalformedEdge("line " + std::to_string(lineno) + ": unknown vertex '" + v + "'");
      } else {
        add_vertex(v);
      }
    }
    g.edges.emplace_back(toks[0], toks[1]);
  }
  return g;
}

std::string write_edge_list(const GraphData& g) {
  std::string out = "# vertices:";
  for (const auto& v : g.vertices) out += " " + v;
  out += "\n";
  for (const auto& [u, v] : g.edges) out += u + " " + v + "\n";
  return out;
}

HypergraphData read_hypergraph(const json& doc) {
  HypergraphData h;
  h.vertices = read_id_list(require(doc, "vertices", "$"), "vertices");
  const json& edges = require(doc, "edges", "$");
  if (!edges.is_array()) throw ParseError("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i)
    h.edges.push_back(read_id_list(edges[i], "edges[" + std::to_string(i) + "]"));
  return h;
}

json write_hypergraph(const HypergraphData& h) {
  return json{{"vertices", h.vertices}, {"edges", h.edges}};
}

ScaledMetricData read_distance_csv(const std::string& text, double scale) {
  ScaledMetricData m;
  m.scale = scale;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto split_csv = [](const std::string& l) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) out.push_back(trim(cell));
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (m.points.empty()) {
      if (!cells.empty() && cells[0].empty()) cells.erase(cells.begin());
      m.points = cells;
      continue;
    }
    const std::size_t n = m.points.size();
    if (cells.size() == n + 1) cells.erase(cells.begin());
    if (cells.size() != n)
      throw ParseError("line " + std::to_string(lineno),
                       "expected " + std::to_string(n) + " distances");
    std::vector<double> row;
    for (std::size_t c = 0; c < n; ++c) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cells[c], &used));
        if (used != cells[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ", column " + std::to_string(c + 1),
                         "not a number: '" + cells[c] + "'");
      }
    }
    m.distances.push_back(std::move(row));
  }
  if (m.distances.size() != m.points.size())
    throw ParseError("end of input", "expected one row per point");
  return m;
}

FiniteTopologyData read_topology(const json& doc) {
  FiniteTopologyData t;
  t.points = read_id_list(require(doc, "points", "$"), "points");
  const json& opens = require(doc, "opens", "$");
  if (!opens.is_array()) throw ParseError("opens", "expected an array");
  for (std::size_t i = 0; i < opens.size(); ++i)
    t.opens.push_back(read_id_list(opens[i], "opens[" + std::to_string(i) + "]"));
  return t;
}

json write_topology(const FiniteTopologyData& t) {
  return json{{"points", t.points}, {"opens", t.opens}};
}

namespace {

}  // namespace

Space read_space_ref(const json& v, const std::filesystem::path& base, const std::string& where) {
  if (v.is_string()) return load_space(base / v.get<std::string>());
  if (v.is_object()) return read_space(v);
  throw ParseError(where, "expected a space document or a path");
}

SpaceMap read_map(const json& doc, const std::filesystem::path& base_dir) {
  const Space dom = read_space_ref(require(doc, "domain", "$"), base_dir, "domain");
  const Space cod = read_space_ref(require(doc, "codomain", "$"), base_dir, "codomain");
  const json& asg = require(doc, "assignment", "$");
  if (!asg.is_object()) throw ParseError("assignment", "expected an object");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto it = asg.begin(); it != asg.end(); ++it)
    pairs.emplace_back(it.key(), as_point_id(it.value(), "assignment." + it.key()));
  return map_from_labels(dom, cod, pairs);
}

json write_assignment(const Space& dom, const Space& cod, const Assignment& a) {
  json out = json::object();
  for (Point x = 0; x < dom.size(); ++x) out[dom.label(x)] = cod.label(a[x]);
  return out;
}

json write_map(const SpaceMap& f, bool embed_spaces) {
  json doc;
  doc["assignment"] = write_assignment(f.domain(), f.codomain(), f.assignment());
  if (embed_spaces) {
    doc["domain"] = write_space(f.domain());
    doc["codomain"] = write_space(f.codomain());
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(p.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& p) {
  const std::string text = read_text_file(p);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(p.string() + " byte " + std::to_string(e.byte), e.what());
  }
}

Space load_space(const std::filesystem::path& p) {
  const auto ext = p.extension().string();
  if (ext == ".edges" || ext == ".txt") return from_graph(read_edge_list(read_text_file(p)));
  const json doc = read_json_file(p);
  if (doc.contains("opens")) return from_finite_topology(read_topology(doc));
  if (doc.contains("vertices"))
    return from_hypergraph(read_hypergraph(doc), HypergraphMode::Skeleton);
  return read_space(doc);
}

}  // namespace pstop
