#include "pstop/cells.hpp"

#include <algorithm>
#include <map>

#include "pstop/builders.hpp"

namespace pstop {

Subset adherence(const Space& s, const Subset& a) { return closure_of(s, a); }

bool is_closed(const Space& s, const Subset& a) { return adherence(s, a) == a; }

bool is_open(const Space& s, const Subset& a) { return is_closed(s, ~a); }

namespace {

/// (x, B) pairs that a covering system at x must serve: B = V(x) for
/// point-limit spaces, the maximal convergent generators otherwise.
std::vector<std::pair<Point, Subset>> requirements(const Space& s, const Subset& scope) {
  std::vector<std::pair<Point, Subset>> out;
  const std::size_t n = s.size();
  for (Point x : members(scope)) {
    if (s.kind() == Space::Kind::PointLimit) {
      out.emplace_back(x, s.neighborhood(x));
      continue;
    }
    std::vector<Subset> conv;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      Subset b = from_mask(n, m);
      if (s.filter_limits(b).test(x)) conv.push_back(std::move(b));
    }
    for (const auto& b : conv) {
      const bool maximal = std::none_of(conv.begin(), conv.end(), [&](const Subset& c) {
        return c != b && b.is_subset_of(c);
      });
      if (maximal) out.emplace_back(x, b);
    }
  }
  return out;
}

bool served(const Subset& b, const std::vector<Subset>& sets) {
  return std::any_of(sets.begin(), sets.end(), [&](const Subset& c) { return b.is_subset_of(c); });
}

}  // namespace

CoverCertificate is_covering_system(const Space& s, const CoveringSystem& cs) {
  for (auto& [x, b] : requirements(s, cs.scope))
    if (!served(b, cs.sets)) return {false, std::make_pair(x, b)};
  return {};
}

Subset interior(const Space& s, const std::vector<Subset>& family) {
  Subset out = full_subset(s.size());
  for (auto& [x, b] : requirements(s, out))
    if (!served(b, family)) out.reset(x);
  return out;
}

Subcover finite_subcover(const Space& s, const CoveringSystem& cs) {
  const auto reqs = requirements(s, cs.scope);
  const std::size_t m = cs.sets.size();
  std::vector<Subset> covers(m, Subset(reqs.size()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < reqs.size(); ++r)
      if (reqs[r].second.is_subset_of(cs.sets[i])) covers[i].set(r);
  Subset all(reqs.size());
  for (const auto& c : covers) all |= c;
  if (!all.all())
    throw NotACoveringSystem("no set of the family contains the neighbourhood generator of '" +
                             s.label(reqs[(~all).find_first()].first) + "'");
  Subcover out;
  auto finish = [&](std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    out.indices = std::move(idx);
    for (std::size_t i : out.indices) out.sets.push_back(cs.sets[i]);
    return out;
  };
  if (m > kExactSubcoverLimit) {
    out.minimal = false;
    Subset covered(reqs.size());
    std::vector<std::size_t> idx;
    while (!covered.all()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t g = (covers[i] - covered).count();
        if (g > gain) {
          gain = g;
          best = i;
        }
      }
      covered |= covers[best];
      idx.push_back(best);
    }
    return finish(std::move(idx));
  }
  // Combinations of size k in lexicographic order.
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Subset u(reqs.size());
      for (std::size_t i : idx) u |= covers[i];
      if (u.all()) return finish(std::move(idx));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return finish({});  // unreachable: the whole family covers
}

CoveringSystem restrict_covering_system(const CoveringSystem& cs, const Subset& u) {
  const auto pts = members(u);
  auto shrink = [&](const Subset& a) {
    Subset out(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (a.test(pts[k])) out.set(k);
    return out;
  };
  CoveringSystem out;
  for (const auto& c : cs.sets) out.sets.push_back(shrink(c));
  out.scope = shrink(cs.scope);
  return out;
}

bool is_compact(const Space& s) {
  for (Point y = 0; y < s.size(); ++y)
    if (s.point_limits(y).none()) return false;
  return true;
}

// ---------------------------------------------------------------------------

CellModel cell_model(std::size_t dim, std::size_t length) {
  if (dim == 0) {
    const Space pt = point_space();
    return {0, length, Space(), pt, SpaceMap(Space(), pt, {})};
  }
  if (length == 0) throw std::invalid_argument("cell length must be at least 1");
  const Space sphere =
      dim == 1 ? sphere0().space
               : sphere_model(dim - 1, std::vector<std::size_t>(dim - 1, length)).top().space;
  const Cylinder cyl = cylinder(sphere, length);
  std::vector<std::size_t> key(cyl.space.size());
  for (Point p = 0; p < sphere.size(); ++p)
    for (std::size_t t = 0; t <= length; ++t)
      key[cyl_point(length, p, t)] = t == length ? 0 : 1 + cyl_point(length, p, t);
  const auto q = quotient_by_key(cyl.space, key);
  std::vector<std::string> labels(q.space.size());
  for (Point p = 0; p < sphere.size(); ++p)
    for (std::size_t t = 0; t <= length; ++t)
      labels[q.projection(cyl_point(length, p, t))] =
          t == length ? "c" : "(" + sphere.label(p) + "," + std::to_string(t) + ")";
  std::vector<Subset> lim;
  for (Point p = 0; p < q.space.size(); ++p) lim.push_back(q.space.point_limits(p));
  Space disk = Space::point_limit(std::move(labels), std::move(lim));
  Assignment b(sphere.size());
  for (Point p = 0; p < sphere.size(); ++p) b[p] = q.projection(cyl_point(length, p, 0));
  return {dim, length, sphere, disk, SpaceMap(sphere, disk, std::move(b))};
}

CellAttachment attach_cell(const Space& x, const CellModel& model, const SpaceMap& h,
                           const std::string& tag) {
  if (!(h.domain() == model.sphere) || !(h.codomain() == x))
    throw DomainMismatch("attaching map must go from the model sphere to the space");
  if (!h.continuous()) throw NotContinuousAttachment("attaching map is not continuous");
  const auto po = pushout(model.boundary, h);
  const std::size_t m = po.apex.size();
  std::vector<std::string> labels(m);
  std::vector<bool> from_x(m, false);
  for (Point y = 0; y < x.size(); ++y) {
    labels[po.q1(y)] = x.label(y);
    from_x[po.q1(y)] = true;
  }
  for (Point d = 0; d < model.disk.size(); ++d) {
    const Point v = po.q0(d);
    if (from_x[v]) continue;
    std::string l = "e" + tag + ":" + model.disk.label(d);
    while (x.find(l)) l += "'";
    labels[v] = l;
  }
  std::vector<Subset> lim;
  for (Point p = 0; p < m; ++p) lim.push_back(po.apex.point_limits(p));
  Space result = Space::point_limit(std::move(labels), std::move(lim));
  return {result, SpaceMap(x, result, po.q1.assignment()),
          SpaceMap(model.disk, result, po.q0.assignment())};
}

Presentation build_presentation(const Space& base, const std::vector<CellSpec>& cells) {
  Presentation p{base, cells, {base}, {}, {}};
  p.base_inclusion.resize(base.size());
  for (Point x = 0; x < base.size(); ++x) p.base_inclusion[x] = x;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const CellModel model = cell_model(cells[k].dim, cells[k].length);
    const Space& stage = p.stages.back();
    if (cells[k].attaching.size() != model.sphere.size())
      throw DomainMismatch("cell " + std::to_string(k) + ": attaching map has " +
                           std::to_string(cells[k].attaching.size()) + " values, sphere has " +
                           std::to_string(model.sphere.size()) + " points");
    for (Point v : cells[k].attaching)
      if (v >= stage.size()) throw UnknownPoint("cell " + std::to_string(k) + ": attaching value");
    const SpaceMap h(model.sphere, stage, cells[k].attaching);
    if (!h.continuous())
      throw NotContinuousAttachment("cell " + std::to_string(k) + ": attaching map is not continuous");
    auto att = attach_cell(stage, model, h, std::to_string(k));
    for (auto& c : p.characteristic) c = compose(att.inclusion, c);
    for (auto& v : p.base_inclusion) v = att.inclusion(v);
    p.characteristic.push_back(att.characteristic);
    p.stages.push_back(att.result);
  }
  return p;
}

json Presentation::to_json() const {
  json cs = json::array();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    json am = json::array();
    for (Point v : cells[k].attaching) am.push_back(stages[k].label(v));
    cs.push_back({{"dim", cells[k].dim}, {"length", cells[k].length}, {"attachingMap", am}});
  }
  return {{"base", write_space(base)}, {"cells", cs}, {"result", write_space(result())}};
}

Presentation read_presentation(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("cells")) throw ParseError("$", "missing key 'cells'");
  const Space base = doc.contains("base") ? read_space_ref(doc["base"], base_dir, "base") : Space();
  const json& cells = doc["cells"];
  if (!cells.is_array()) throw ParseError("cells", "expected an array");
  // Labels refer to the stage being attached to, so build incrementally.
  Presentation p = build_presentation(base, {});
  std::vector<CellSpec> specs;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string where = "cells[" + std::to_string(k) + "]";
    const json& c = cells[k];
    if (!c.is_object() || !c.contains("dim") || !c["dim"].is_number_unsigned())
      throw ParseError(where, "expected an object with a non-negative 'dim'");
    const std::size_t dim = c["dim"].get<std::size_t>();
    const std::size_t len = c.value("length", std::size_t{1});
    const json am = c.value("attachingMap", json::array());
    if (!am.is_array()) throw ParseError(where + ".attachingMap", "expected an array");
    Assignment a;
    for (const auto& v : am) {
      if (!v.is_string() && !v.is_number_integer())
        throw ParseError(where + ".attachingMap", "point identifiers must be strings or integers");
      const std::string id = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
      a.push_back(p.result().index_of(id));
    }
    specs.push_back({dim, len, std::move(a)});
    p = build_presentation(base, specs);
  }
  return p;
}

std::vector<std::size_t> cells_meeting(const Presentation& p, const Subset& k) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    const CellModel model = cell_model(p.cells[c].dim, p.cells[c].length);
    Subset bnd(model.disk.size());
    for (Point s = 0; s < model.sphere.size(); ++s) bnd.set(model.boundary(s));
    for (Point d = 0; d < model.disk.size(); ++d)
      if (!bnd.test(d) && k.test(p.characteristic[c](d))) {
        out.push_back(c);
        break;
      }
  }
  return out;
}

namespace {

bool search_depth(std::vector<CellSpec>& specs, const Space& stage, std::size_t depth,
                  std::size_t max_dim, std::size_t max_length, std::size_t max_size,
                  PresentationSearch& out) {
  if (depth == 0) return false;
  for (std::size_t dim = 0; dim <= max_dim; ++dim)
    for (std::size_t len = 1; len <= (dim == 0 ? 1 : max_length); ++len) {
      const CellModel model = cell_model(dim, len);
      MapSearch s(model.sphere, stage);
      bool found = false;
      s.for_each([&](const Assignment& h) {
        auto att = attach_cell(stage, model, SpaceMap(model.sphere, stage, h));
        if (att.result.size() > max_size) return true;
        specs.push_back({dim, len, h});
        ++out.examined;
        if (!is_topological(att.result)) {
          out.non_topological = build_presentation(Space(), specs);
          found = true;
          return false;
        }
        found = search_depth(specs, att.result, depth - 1, max_dim, max_length, max_size, out);
        specs.pop_back();
        return !found;
      });
      if (found) return true;
    }
  return false;
}

}  // namespace

PresentationSearch search_non_topological(std::size_t max_cells, std::size_t max_dim,
                                          std::size_t max_length, std::size_t max_result_size) {
  PresentationSearch out;
  for (std::size_t depth = 1; depth <= max_cells; ++depth) {
    std::vector<CellSpec> specs;
    out.examined = 0;
    if (search_depth(specs, Space(), depth, max_dim, max_length, max_result_size, out)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

Verdict SerreReport::verdict() const {
  for (const auto& sq : squares)
    if (!sq.lift) return Verdict::Fail;
  return truncated ? Verdict::Inconclusive : Verdict::Pass;
}

json SerreReport::to_json(const Space& e, const Space& b) const {
  json ms = json::array();
  for (const auto& m : models) ms.push_back(m.declaration());
  json sq = json::array();
  std::size_t lifted = 0;
  for (const auto& s : squares) {
    json j{{"model", s.model}, {"top", s.top}, {"bottom", s.bottom}, {"lifted", s.lift.has_value()}};
    if (s.lift) {
      j["lift"] = *s.lift;
      ++lifted;
    }
    sq.push_back(std::move(j));
  }
  return {{"verdict", to_string(verdict())},
          {"relativeTo", "declared cell models"},
          {"models", ms},
          {"totalSpaceSize", e.size()},
          {"baseSpaceSize", b.size()},
          {"squares", squares.size()},
          {"lifted", lifted},
          {"truncated", truncated},
          {"perSquare", sq}};
}

SerreReport serre_check(const SpaceMap& p, const SerreOptions& opt) {
  const Space& e = p.domain();
  const Space& b = p.codomain();
  SerreReport r;
  std::vector<Subset> fibre(b.size(), Subset(e.size()));
  for (Point v = 0; v < e.size(); ++v) fibre[p(v)].set(v);
  for (std::size_t mi = 0; mi < opt.models.size() && !r.truncated; ++mi) {
    r.models.push_back(cell_model(opt.models[mi].first, opt.models[mi].second));
    const Space& d = r.models.back().disk;
    const Cylinder cyl = cylinder(d, 1);
    MapSearch tops(d, e);
    tops.for_each(
        [&](const Assignment& a) {
          MapSearch bottoms(cyl.space, b);
          for (Point x = 0; x < d.size(); ++x) bottoms.fix(cyl_point(1, x, 0), p(a[x]));
          bottoms.for_each(
              [&](const Assignment& h) {
                if (r.squares.size() >= opt.square_cap) {
                  r.truncated = true;
                  return false;
                }
                MapSearch lift(cyl.space, e);
                for (Point x = 0; x < d.size(); ++x) {
                  lift.fix(cyl_point(1, x, 0), a[x]);
                  lift.restrict_to(cyl_point(1, x, 1), fibre[h[cyl_point(1, x, 1)]]);
                }
                r.squares.push_back({mi, a, h, lift.first(opt.node_budget)});
                return true;
              },
              opt.node_budget);
          return !r.truncated;
        },
        opt.node_budget);
  }
  return r;
}

json WeqReport::to_json(const Space& x, const Space& y) const {
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"base", x.label(c.base)},
                  {"n", c.n},
                  {"length", c.length},
                  {"domainClasses", c.domain_classes},
                  {"codomainClasses", c.codomain_classes},
                  {"bijective", c.bijective},
                  {"domainStabilized", c.domain_stabilized},
                  {"codomainStabilized", c.codomain_stabilized}});
  json out{{"verdict", to_string(verdict)},
           {"qualification", qualification},
           {"pi0", {{"domain", pi0_domain}, {"codomain", pi0_codomain}, {"bijective", pi0_bijective}}},
           {"checks", cs},
           {"codomainSize", y.size()}};
  if (!inconclusive_reason.empty()) out["reason"] = inconclusive_reason;
  return out;
}

WeqReport weak_equivalence_check(const SpaceMap& f, const WeqOptions& opt) {
  if (!f.continuous()) throw NotContinuous("map is not continuous");
  const Space& x = f.domain();
  const Space& y = f.codomain();
  WeqReport r;
  const Partition px = pi0(x), py = pi0(y);
  r.pi0_domain = px.count;
  r.pi0_codomain = py.count;
  {
    std::vector<long> img(px.count, -1);
    for (Point p = 0; p < x.size(); ++p) img[px.class_of[p]] = static_cast<long>(py.class_of[f(p)]);
    std::vector<bool> hit(py.count, false);
    bool inj = true;
    for (long c : img) {
      if (hit[c]) inj = false;
      hit[c] = true;
    }
    r.pi0_bijective = inj && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  }
  if (!r.pi0_bijective) {
    r.verdict = Verdict::Fail;
    r.qualification = "fails at n = 0";
    return r;
  }
  bool inconclusive = false;
  std::string failure;
  std::map<std::pair<Point, std::size_t>, PiNResult> cod_cache;
  for (std::size_t n = 1; n <= opt.n_max; ++n)
    for (Point b = 0; b < x.size(); ++b) {
      try {
        const PiNResult dom = pi_n({x, b}, n, opt.budgets, opt.pin);
        auto key = std::make_pair(f(b), n);
        auto it = cod_cache.find(key);
        if (it == cod_cache.end())
          it = cod_cache.emplace(key, pi_n({y, f(b)}, n, opt.budgets, opt.pin)).first;
        const PiNResult& cod = it->second;
        const auto& last = dom.budgets.back();
        std::vector<bool> hit(cod.budgets.back().classes, false);
        bool inj = true, total = true;
        for (const auto& rep : last.representatives) {
          Assignment g(rep.size());
          for (std::size_t k = 0; k < rep.size(); ++k) g[k] = f(rep[k]);
          const auto c = classify_based_map(cod, g);
          if (!c) {
            total = false;
            continue;
          }
          if (hit[*c]) inj = false;
          hit[*c] = true;
        }
        const bool bij =
            total && inj && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
        r.checks.push_back({b, n, last.length, last.classes, cod.budgets.back().classes, bij,
                            dom.stabilized, cod.stabilized});
        if (!bij) {
          if (dom.stabilized && cod.stabilized) {
            if (failure.empty())
              failure = "fails at n = " + std::to_string(n) + ", base " + x.label(b) +
                        ", L = " + std::to_string(last.length);
          } else {
            inconclusive = true;
            if (r.inconclusive_reason.empty())
              r.inconclusive_reason = "class map not bijective at an unstabilized budget";
          }
        }
      } catch (const ExponentialTooLarge& e) {
        inconclusive = true;
        if (r.inconclusive_reason.empty()) r.inconclusive_reason = e.what();
      } catch (const SearchSpaceTooLarge& e) {
        inconclusive = true;
        if (r.inconclusive_reason.empty()) r.inconclusive_reason = e.what();
      }
    }
  if (!failure.empty()) {
    r.verdict = Verdict::Fail;
    r.qualification = failure;
  } else if (inconclusive) {
    r.verdict = Verdict::Inconclusive;
    r.qualification = "undecided within budget";
  } else {
    r.verdict = Verdict::Pass;
    r.qualification = "passes up to n = " + std::to_string(opt.n_max) +
                      ", L = " + std::to_string(opt.budgets.empty() ? 0 : opt.budgets.back());
  }
  return r;
}

}  // namespace pstop
