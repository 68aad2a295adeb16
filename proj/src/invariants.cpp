#include "pstop/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pstop/builders.hpp"

namespace pstop {

BasedSpace make_based(Space s, Point base) {
  if (base >= s.size()) throw UnknownPoint("base point outside the carrier");
  return {std::move(s), base};
}

BasedSpace sphere0() { return {discrete_space(2), 0}; }

BasedSpace wedge(const BasedSpace& a, const BasedSpace& b) {
  const Space pt = point_space();
  const auto po = pushout(SpaceMap(pt, a.space, {a.base}), SpaceMap(pt, b.space, {b.base}));
  return {po.apex, po.q0(a.base)};
}

Torus torus(const SpaceMap& i, std::size_t n) {
  auto rc = relative_cylinder(i, n);
  const Space& x = i.codomain();
  const SpaceMap fold = pushout_induced(rc.doubled, identity_map(x), identity_map(x));
  const auto po = pushout(rc.j, fold);
  SpaceMap r = pushout_induced(po, rc.p, identity_map(x));
  const bool ok = compose(r, po.q0).assignment() == rc.p.assignment();
  return {std::move(rc), po.apex, po.q0, po.q1, std::move(r), ok};
}

Suspension suspension(const BasedSpace& a, std::size_t n) {
  const Space pt = point_space();
  const Torus t = torus(SpaceMap(pt, a.space, {a.base}), n);
  const auto po = pushout(t.i, constant_map(a.space, pt, 0));
  const Point base = po.q1(0);
  const std::size_t m = po.apex.size();
  std::vector<Point> glue(a.space.size() * (n + 1));
  std::vector<std::string> labels(m);
  labels[base] = "*";
  for (Point p = 0; p < a.space.size(); ++p)
    for (std::size_t s = 0; s <= n; ++s) {
      const Point c = cyl_point(n, p, s);
      const Point v = po.q0(t.tau(t.cylinder.q(c)));
      glue[c] = v;
      if (v != base) labels[v] = "(" + a.space.label(p) + "," + std::to_string(s) + ")";
    }
  std::vector<Subset> lim;
  for (Point p = 0; p < m; ++p) lim.push_back(po.apex.point_limits(p));
  return {{Space::point_limit(std::move(labels), std::move(lim)), base}, std::move(glue), n};
}

SuspensionTower suspension_tower(const BasedSpace& a, const std::vector<std::size_t>& lengths) {
  SuspensionTower t;
  t.lengths = lengths;
  t.levels.push_back(a);
  t.glue.emplace_back();
  for (std::size_t len : lengths) {
    auto s = suspension(t.levels.back(), len);
    t.levels.push_back(std::move(s.result));
    t.glue.push_back(std::move(s.glue));
  }
  return t;
}

SuspensionTower sphere_model(std::size_t k, const std::vector<std::size_t>& lengths) {
  if (lengths.size() != k)
    throw std::invalid_argument("sphere_model needs one interval length per level");
  return suspension_tower(sphere0(), lengths);
}

Assignment tower_collapse(const SuspensionTower& from, const SuspensionTower& to) {
  if (from.levels.size() != to.levels.size() || !(from.levels[0].space == to.levels[0].space))
    throw DomainMismatch("towers differ in depth or base object");
  Assignment c(from.levels[0].space.size());
  std::iota(c.begin(), c.end(), Point{0});
  for (std::size_t k = 1; k < from.levels.size(); ++k) {
    const std::size_t lf = from.lengths[k - 1], lt = to.lengths[k - 1];
    if (lt > lf) throw DomainMismatch("collapse target is longer than its source");
    const auto& prev = from.levels[k - 1].space;
    Assignment next(from.levels[k].space.size(), to.levels[k].base);
    for (Point q = 0; q < prev.size(); ++q)
      for (std::size_t s = 0; s <= lf; ++s) {
        const Point p = from.glue[k][cyl_point(lf, q, s)];
        if (p == from.levels[k].base) continue;
        next[p] = to.glue[k][cyl_point(lt, c[q], std::min(s, lt))];
      }
    c = std::move(next);
  }
  return c;
}

std::vector<std::vector<Point>> Partition::classes() const {
  std::vector<std::vector<Point>> out(count);
  for (Point p = 0; p < class_of.size(); ++p) out[class_of[p]].push_back(p);
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  /// Classes numbered in order of their least member.
  std::pair<std::vector<std::size_t>, std::size_t> number() {
    std::vector<std::size_t> out(parent.size());
    std::unordered_map<std::size_t, std::size_t> ids;
    for (std::size_t k = 0; k < parent.size(); ++k) {
      auto [it, fresh] = ids.emplace(find(k), ids.size());
      out[k] = it->second;
    }
    return {out, ids.size()};
  }
};

}  // namespace

Partition pi0(const Space& x) {
  UnionFind uf(x.size());
  for (Point y = 0; y < x.size(); ++y)
    for (Point z : x.point_limit_list(y))
      if (x.converges(z, y)) uf.unite(y, z);
  auto [cls, count] = uf.number();
  return {std::move(cls), count};
}

namespace {

struct BudgetData {
  SuspensionTower tower;
  std::vector<Assignment> maps;  // sorted
  std::vector<std::size_t> class_of;
  std::size_t classes = 0;

  std::optional<std::size_t> class_of_map(const Assignment& f) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) return std::nullopt;
    return class_of[static_cast<std::size_t>(it - maps.begin())];
  }
};

BudgetData compute_budget(const BasedSpace& x, std::size_t n, std::size_t len,
                          const PiNOptions& opt) {
  BudgetData d{sphere_model(n, std::vector<std::size_t>(n, len)), {}, {}, 0};
  const BasedSpace& sigma = d.tower.top();
  MapSearch s(sigma.space, x.space);
  s.fix(sigma.base, x.base);
  s.for_each(
      [&](const Assignment& a) {
        if (d.maps.size() >= opt.map_cap)
          throw ExponentialTooLarge("more than " + std::to_string(opt.map_cap) +
                                    " based maps at length " + std::to_string(len));
        d.maps.push_back(a);
        return true;
      },
      opt.node_budget);
  std::sort(d.maps.begin(), d.maps.end());
  UnionFind uf(d.maps.size());
  for (std::size_t k = 0; k < d.maps.size(); ++k) {
    MapSearch t(sigma.space, x.space);
    t.fix(sigma.base, x.base);
    restrict_to_one_step(t, sigma.space, x.space, d.maps[k]);
    t.for_each(
        [&](const Assignment& g) {
          auto it = std::lower_bound(d.maps.begin(), d.maps.end(), g);
          uf.unite(k, static_cast<std::size_t>(it - d.maps.begin()));
          return true;
        },
        opt.node_budget);
  }
  std::tie(d.class_of, d.classes) = uf.number();
  return d;
}

/// Coordinates of the top level: (q, t) for every non-base point.
struct TopGrid {
  std::size_t len;
  std::size_t prev_size;
  std::vector<Point> glue;
  Point base;
  Point at(Point q, std::size_t t) const { return glue[cyl_point(len, q, t)]; }
};

TopGrid grid_of(const SuspensionTower& t) {
  return {t.lengths.back(), t.levels[t.levels.size() - 2].space.size(), t.glue.back(),
          t.top().base};
}

Point value(const TopGrid& g, const Assignment& f, Point x0, Point q, std::size_t t) {
  if (t == 0 || t >= g.len) return x0;
  return f[g.at(q, t)];
}

std::size_t core_of(const TopGrid& g, const Assignment& f, Point x0) {
  for (std::size_t t = g.len - 1; t >= 1; --t)
    for (Point q = 0; q < g.prev_size; ++q)
      if (value(g, f, x0, q, t) != x0) return t + 1;
  return 0;
}

Assignment concat(const TopGrid& g, const Assignment& f, std::size_t cf, const Assignment& h,
                  std::size_t ch, Point x0) {
  Assignment out(f.size(), x0);
  for (Point q = 0; q < g.prev_size; ++q)
    for (std::size_t t = 1; t < g.len; ++t) {
      const Point p = g.at(q, t);
      if (p == g.base) continue;
      out[p] = t < cf ? value(g, f, x0, q, t) : (t < cf + ch ? value(g, h, x0, q, t - cf) : x0);
    }
  return out;
}

Assignment reversed(const TopGrid& g, const Assignment& f, std::size_t c, Point x0) {
  Assignment out(f.size(), x0);
  for (Point q = 0; q < g.prev_size; ++q)
    for (std::size_t t = 1; t < g.len; ++t) {
      const Point p = g.at(q, t);
      if (p == g.base) continue;
      out[p] = t <= c ? value(g, f, x0, q, c - t) : x0;
    }
  return out;
}

GroupTable group_table(const BudgetData& d, Point x0, std::size_t rep_cap) {
  const TopGrid g = grid_of(d.tower);
  const std::size_t k = d.classes;
  GroupTable gt;
  gt.core.assign(k, g.len + 1);
  std::vector<std::vector<std::size_t>> reps(k);
  std::vector<std::size_t> cores(d.maps.size());
  for (std::size_t m = 0; m < d.maps.size(); ++m) {
    cores[m] = core_of(g, d.maps[m], x0);
    gt.core[d.class_of[m]] = std::min(gt.core[d.class_of[m]], cores[m]);
  }
  for (std::size_t m = 0; m < d.maps.size(); ++m) {
    const std::size_t c = d.class_of[m];
    if (cores[m] == gt.core[c] && reps[c].size() < rep_cap) reps[c].push_back(m);
  }
  const Assignment constant(d.maps.empty() ? 0 : d.maps[0].size(), x0);
  gt.identity = d.class_of_map(constant).value_or(0);

  auto product_class = [&](std::size_t ma, std::size_t mb) -> long {
    const Assignment h = concat(g, d.maps[ma], cores[ma], d.maps[mb], cores[mb], x0);
    auto c = d.class_of_map(h);
    return c ? static_cast<long>(*c) : -2;  // -2: not a based continuous map
  };

  gt.product.assign(k, std::vector<long>(k, -1));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (gt.core[a] + gt.core[b] > g.len) continue;
      const long first = product_class(reps[a][0], reps[b][0]);
      for (std::size_t ra : reps[a])
        for (std::size_t rb : reps[b])
          if (product_class(ra, rb) != first) gt.well_defined = false;
      if (first < 0) {
        gt.well_defined = false;
        continue;
      }
      gt.product[a][b] = first;
      ++gt.defined;
    }
  gt.inverse.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t m = reps[a][0];
    auto c = d.class_of_map(reversed(g, d.maps[m], cores[m], x0));
    if (!c) {
      gt.inverse_law = false;
      continue;
    }
    gt.inverse[a] = *c;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (gt.product[gt.identity][a] != static_cast<long>(a) ||
        gt.product[a][gt.identity] != static_cast<long>(a))
      gt.identity_law = false;
    const long ai = gt.product[a][gt.inverse[a]], ia = gt.product[gt.inverse[a]][a];
    if ((ai >= 0 && ai != static_cast<long>(gt.identity)) ||
        (ia >= 0 && ia != static_cast<long>(gt.identity)))
      gt.inverse_law = false;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const long ab = gt.product[a][b], bc = gt.product[b][c];
        if (ab < 0 || bc < 0) continue;
        const long l = gt.product[ab][c], r = gt.product[a][bc];
        if (l < 0 || r < 0) continue;
        ++gt.associativity_checked;
        if (l != r) gt.associative = false;
      }
  return gt;
}

}  // namespace

PiNResult pi_n(const BasedSpace& x, std::size_t n, const std::vector<std::size_t>& budgets,
               const PiNOptions& opt) {
  std::vector<std::size_t> lens = n == 0 ? std::vector<std::size_t>{0} : budgets;
  if (lens.empty()) throw std::invalid_argument("at least one budget is required");
  for (std::size_t k = 0; k < lens.size(); ++k) {
    if (n > 0 && lens[k] == 0) throw std::invalid_argument("budgets must be positive");
    if (k > 0 && lens[k] <= lens[k - 1])
      throw std::invalid_argument("budgets must be strictly increasing");
  }
  PiNResult r;
  r.n = n;
  r.base = x.base;
  std::optional<BudgetData> prev;
  for (std::size_t len : lens) {
    BudgetData d = compute_budget(x, n, len, opt);
    PiNBudget b{len, d.maps.size(), d.classes, std::vector<std::size_t>(d.classes, 0), {}};
    b.representatives.assign(d.classes, {});
    for (std::size_t m = 0; m < d.maps.size(); ++m) {
      if (b.class_sizes[d.class_of[m]]++ == 0) b.representatives[d.class_of[m]] = d.maps[m];
    }
    if (prev) {
      const Assignment c = tower_collapse(d.tower, prev->tower);
      std::vector<std::size_t> cmap(prev->classes, 0);
      std::vector<std::size_t> seen_reps(prev->classes, 0);
      std::vector<bool> set(prev->classes, false);
      for (std::size_t m = 0; m < prev->maps.size(); ++m) {
        const std::size_t cls = prev->class_of[m];
        if (seen_reps[cls]++ >= opt.rep_cap) continue;
        Assignment lifted(c.size());
        for (Point p = 0; p < c.size(); ++p) lifted[p] = prev->maps[m][c[p]];
        const auto target = d.class_of_map(lifted);
        if (!target) {
          r.class_maps_well_defined = false;
          continue;
        }
        if (set[cls] && cmap[cls] != *target) r.class_maps_well_defined = false;
        cmap[cls] = *target;
        set[cls] = true;
      }
      std::vector<bool> hit(d.classes, false);
      bool injective = true;
      for (std::size_t v : cmap) {
        if (hit[v]) injective = false;
        hit[v] = true;
      }
      r.bijective.push_back(injective && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
      r.class_maps.push_back(std::move(cmap));
    }
    r.budgets.push_back(std::move(b));
    prev = std::move(d);
  }
  // S⁰ carries no interval, so π₀ does not depend on the budget.
  r.stabilized = n == 0 || (!r.bijective.empty() && r.bijective.back());
  if (n >= 1) r.group = group_table(*prev, x.base, opt.rep_cap);
  r.last_maps = std::move(prev->maps);
  r.last_class_of = std::move(prev->class_of);
  return r;
}

std::optional<std::size_t> classify_based_map(const PiNResult& result, const Assignment& f) {
  auto it = std::lower_bound(result.last_maps.begin(), result.last_maps.end(), f);
  if (it == result.last_maps.end() || *it != f) return std::nullopt;
  return result.last_class_of[static_cast<std::size_t>(it - result.last_maps.begin())];
}

json PiNResult::to_json() const {
  json bs = json::array();
  for (const auto& b : budgets)
    bs.push_back({{"length", b.length},
                  {"maps", b.maps},
                  {"classes", b.classes},
                  {"classSizes", b.class_sizes},
                  {"representatives", b.representatives}});
  json out{{"n", n},
           {"budgets", bs},
           {"classMaps", class_maps},
           {"bijective", bijective},
           {"classMapsWellDefined", class_maps_well_defined},
           {"stabilized", stabilized}};
  if (group) {
    json table = json::array();
    for (std::size_t a = 0; a < group->product.size(); ++a)
      for (std::size_t b = 0; b < group->product.size(); ++b)
        if (group->product[a][b] >= 0) table.push_back({a, b, group->product[a][b]});
    out["group"] = {{"identity", group->identity},
                    {"cores", group->core},
                    {"inverse", group->inverse},
                    {"table", table},
                    {"defined", group->defined},
                    {"entries", group->product.size() * group->product.size()},
                    {"wellDefined", group->well_defined},
                    {"identityLaw", group->identity_law},
                    {"inverseLaw", group->inverse_law},
                    {"associative", group->associative},
                    {"associativityChecked", group->associativity_checked}};
  } else {
    out["group"] = nullptr;
  }
  return out;
}

long winding_oracle(const SpaceMap& loop) {
  const std::size_t len = loop.domain().size() - 1;
  if (loop.domain().size() < 2 || !(loop.domain() == path_space(len)))
    throw NotALoop("domain is not an interval I_L");
  const std::size_t k = loop.codomain().size();
  if (k < 3 || !(loop.codomain() == cycle_space(k)))
    throw NotALoop("codomain is not a cycle C_k with k >= 3");
  if (loop(0) != loop(static_cast<Point>(len))) throw NotALoop("the ends differ");
  long sum = 0;
  for (Point t = 0; t < len; ++t) {
    const std::size_t d = (loop(t + 1) + k - loop(t)) % k;
    if (d == 1) ++sum;
    else if (d == k - 1) --sum;
    else if (d != 0) throw NotALoop("consecutive values are not adjacent");
  }
  return sum / static_cast<long>(k);
}

Assignment loop_from_sphere_map(const SuspensionTower& circle, const Assignment& f) {
  if (circle.levels.size() != 2) throw DomainMismatch("expected a one-level tower");
  const std::size_t len = circle.lengths[0];
  const Point other = circle.levels[0].base == 0 ? 1 : 0;
  Assignment loop(len + 1);
  for (std::size_t t = 0; t <= len; ++t) loop[t] = f[circle.glue[1][cyl_point(len, other, t)]];
  return loop;
}

}  // namespace pstop
