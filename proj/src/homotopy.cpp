#include "pstop/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pstop/builders.hpp"

namespace pstop {

namespace {

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point p : a) h = (h ^ p) * 1099511628211ull;
    return h;
  }
};

void require_same_hom(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw DomainMismatch("maps do not share domain and codomain");
}

std::uint64_t remaining(std::uint64_t budget, std::uint64_t used) {
  if (used >= budget)
    throw SearchSpaceTooLarge("node budget of " + std::to_string(budget) + " exceeded");
  return budget - used;
}

}  // namespace

// g(w) ∈ ⋂_{v ∈ V(w)} lim f(v) ∩ ⋂_{z ∈ lim ẇ} V(f(z)).
void restrict_to_one_step(MapSearch& s, const Space& x, const Space& y, const Assignment& f) {
  for (Point w = 0; w < x.size(); ++w) {
    Subset allowed = full_subset(y.size());
    for (Point v : x.neighborhood_list(w)) allowed &= y.point_limits(f[v]);
    for (Point z : x.point_limit_list(w)) allowed &= y.neighborhood(f[z]);
    s.restrict_to(w, allowed);
  }
}

IntervalObject interval(std::size_t n) {
  if (n == 0) throw std::invalid_argument("interval length must be at least 1");
  Space s = path_space(n);
  Space pt = point_space();
  return {n, s, SpaceMap(pt, s, {0}), SpaceMap(pt, s, {static_cast<Point>(n)}),
          SpaceMap(s, pt, Assignment(n + 1, 0))};
}

Cylinder cylinder(const Space& x, std::size_t n) {
  const auto iv = interval(n);
  auto prod = product(x, iv.space);
  Assignment a0(x.size()), a1(x.size());
  for (Point p = 0; p < x.size(); ++p) {
    a0[p] = cyl_point(n, p, 0);
    a1[p] = cyl_point(n, p, n);
  }
  return {x, n, prod.space, SpaceMap(x, prod.space, std::move(a0)),
          SpaceMap(x, prod.space, std::move(a1)), prod.p0};
}

SpaceMap cylinder_map(const SpaceMap& f, std::size_t n) {
  const auto src = cylinder(f.domain(), n).space;
  const auto dst = cylinder(f.codomain(), n).space;
  Assignment a(src.size());
  for (Point x = 0; x < f.domain().size(); ++x)
    for (std::size_t t = 0; t <= n; ++t) a[cyl_point(n, x, t)] = cyl_point(n, f(x), t);
  return SpaceMap(src, dst, std::move(a));
}

Homotopy::Homotopy(const Space& x, std::size_t n, SpaceMap h) : x_(x), n_(n), h_(std::move(h)) {
  if (h_.domain().size() != x.size() * (n + 1) || !(h_.domain() == cylinder(x, n).space))
    throw DomainMismatch("homotopy domain is not X × I_" + std::to_string(n));
  if (!h_.continuous()) throw NotContinuous("homotopy is not continuous");
}

Assignment Homotopy::slice(std::size_t t) const {
  Assignment a(x_.size());
  for (Point p = 0; p < x_.size(); ++p) a[p] = h_(cyl_point(n_, p, t));
  return a;
}

SpaceMap Homotopy::start() const { return SpaceMap(x_, codomain(), slice(0)); }
SpaceMap Homotopy::finish() const { return SpaceMap(x_, codomain(), slice(n_)); }

std::vector<Assignment> Homotopy::chain() const {
  std::vector<Assignment> out;
  for (std::size_t t = 0; t <= n_; ++t) out.push_back(slice(t));
  return out;
}

Homotopy constant_homotopy(const SpaceMap& f, std::size_t n) {
  return homotopy_from_chain(f.domain(), f.codomain(),
                             std::vector<Assignment>(n + 1, f.assignment()));
}

Homotopy homotopy_from_chain(const Space& x, const Space& y,
                             const std::vector<Assignment>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("a chain needs at least two maps");
  const std::size_t n = chain.size() - 1;
  const auto cyl = cylinder(x, n);
  Assignment a(cyl.space.size());
  for (Point p = 0; p < x.size(); ++p)
    for (std::size_t t = 0; t <= n; ++t) a[cyl_point(n, p, t)] = chain[t][p];
  return Homotopy(x, n, SpaceMap(cyl.space, y, std::move(a)));
}

bool one_step_related(const Space& x, const Space& y, const Assignment& f, const Assignment& g) {
  for (Point yy = 0; yy < x.size(); ++yy)
    for (Point xx : x.point_limit_list(yy))
      if (!y.converges(f[yy], g[xx]) || !y.converges(g[yy], f[xx])) return false;
  return true;
}

OneStepCertificate one_step(const SpaceMap& f, const SpaceMap& g) {
  require_same_hom(f, g);
  OneStepCertificate c;
  if (!f.continuous() || !g.continuous()) {
    c.related = false;
    return c;
  }
  const Space& x = f.domain();
  const Space& y = f.codomain();
  for (Point yy = 0; yy < x.size(); ++yy)
    for (Point xx : x.point_limit_list(yy))
      if (!y.converges(f(yy), g(xx)) || !y.converges(g(yy), f(xx))) {
        c.related = false;
        c.violation = std::make_pair(yy, xx);
        return c;
      }
  return c;
}

std::vector<Assignment> one_step_neighbors(const Space& x, const Space& y, const Assignment& f,
                                           std::uint64_t node_budget) {
  MapSearch s(x, y);
  restrict_to_one_step(s, x, y, f);
  return s.all(node_budget);
}

Homotopy concatenate(const Homotopy& f, const Homotopy& g) {
  if (!(f.base() == g.base()) || !(f.codomain() == g.codomain()))
    throw DomainMismatch("homotopies do not share base and codomain");
  if (f.slice(f.length()) != g.slice(0))
    throw EndMismatch("end of the first homotopy differs from the start of the second");
  const Space& x = f.base();
  const std::size_t m = f.length(), n = g.length();
  const auto cm = cylinder(x, m);
  const auto cn = cylinder(x, n);
  const auto po = pushout(cm.i1, cn.i0);
  const SpaceMap alpha = pushout_induced(po, f.map(), g.map());
  const auto total = cylinder(x, m + n);
  Assignment u(total.space.size());
  for (Point p = 0; p < x.size(); ++p)
    for (std::size_t t = 0; t <= m + n; ++t)
      u[cyl_point(m + n, p, t)] =
          t <= m ? po.q0(cyl_point(m, p, t)) : po.q1(cyl_point(n, p, t - m));
  const SpaceMap uu(total.space, po.apex, std::move(u));
  if (!is_isomorphism(uu)) throw std::logic_error("cylinder gluing map is not an isomorphism");
  return Homotopy(x, m + n, compose(alpha, uu));
}

Homotopy reverse(const Homotopy& h) {
  auto c = h.chain();
  std::reverse(c.begin(), c.end());
  return homotopy_from_chain(h.base(), h.codomain(), c);
}

namespace {

PushoutResult glue_intervals(std::size_t m, std::size_t n) {
  const auto a = interval(m), b = interval(n);
  return pushout(a.end1, b.end0);
}

}  // namespace

std::optional<Assignment> interval_gluing_iso(std::size_t m, std::size_t n) {
  const auto po = glue_intervals(m, n);
  const auto target = interval(m + n);
  return find_isomorphism(po.apex, target.space,
                          {{po.q0(0), 0}, {po.q1(static_cast<Point>(n)), static_cast<Point>(m + n)}});
}

GluingReport gluing_check(const IntervalObject& iv, std::size_t max_total) {
  GluingReport r;
  r.length = iv.length;
  const auto po = glue_intervals(iv.length, iv.length);
  r.glued_size = po.apex.size();
  r.interval_size = iv.space.size();
  r.literal_holds =
      find_isomorphism(po.apex, iv.space,
                       {{po.q0(0), 0}, {po.q1(static_cast<Point>(iv.length)),
                                        static_cast<Point>(iv.length)}})
          .has_value();
  for (std::size_t m = 1; m < max_total; ++m)
    for (std::size_t n = 1; m + n <= max_total; ++n)
      r.substitutes.push_back({m, n, interval_gluing_iso(m, n).has_value()});
  return r;
}

HomotopyClasses homotopy_classes(const Space& x, const Space& y, std::uint64_t cap,
                                 std::uint64_t node_budget) {
  HomotopyClasses hc;
  hc.maps = continuous_maps(x, y, cap);
  const std::size_t m = hc.maps.size();
  std::unordered_map<Assignment, std::size_t, AssignmentHash> index;
  for (std::size_t k = 0; k < m; ++k) index.emplace(hc.maps[k], k);
  std::vector<std::size_t> parent(m);
  for (std::size_t k = 0; k < m; ++k) parent[k] = k;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::uint64_t used = 0;
  for (std::size_t k = 0; k < m; ++k) {
    MapSearch s(x, y);
    for (Point w = 0; w < x.size(); ++w) {
      Subset allowed = full_subset(y.size());
      for (Point v : x.neighborhood_list(w)) allowed &= y.point_limits(hc.maps[k][v]);
      for (Point z : x.point_limit_list(w)) allowed &= y.neighborhood(hc.maps[k][z]);
      s.restrict_to(w, allowed);
    }
    s.for_each(
        [&](const Assignment& g) {
          auto a = find(k), b = find(index.at(g));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
          return true;
        },
        remaining(node_budget, used));
    used += s.nodes_used();
  }
  hc.class_of.assign(m, 0);
  std::unordered_map<std::size_t, std::size_t> number;
  for (std::size_t k = 0; k < m; ++k) {
    auto [it, fresh] = number.emplace(find(k), number.size());
    hc.class_of[k] = it->second;
  }
  hc.count = number.size();
  return hc;
}

std::optional<std::vector<Assignment>> are_homotopic(const SpaceMap& f, const SpaceMap& g,
                                                     std::uint64_t node_budget) {
  require_same_hom(f, g);
  if (!f.continuous() || !g.continuous()) return std::nullopt;
  const Space& x = f.domain();
  const Space& y = f.codomain();
  std::unordered_map<Assignment, Assignment, AssignmentHash> parent;
  parent.emplace(f.assignment(), f.assignment());
  std::deque<Assignment> frontier{f.assignment()};
  std::uint64_t used = 0;
  auto path_to = [&](Assignment cur) {
    std::vector<Assignment> chain{cur};
    while (cur != f.assignment()) {
      cur = parent.at(cur);
      chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  if (f.assignment() == g.assignment()) return std::vector<Assignment>{f.assignment()};
  while (!frontier.empty()) {
    Assignment cur = std::move(frontier.front());
    frontier.pop_front();
    MapSearch s(x, y);
    restrict_to_one_step(s, x, y, cur);
    auto next = s.all(remaining(node_budget, used));
    used += s.nodes_used();
    for (auto& nb : next) {
      if (!parent.emplace(nb, cur).second) continue;
      if (nb == g.assignment()) return path_to(nb);
      frontier.push_back(std::move(nb));
    }
  }
  return std::nullopt;
}

std::vector<Assignment> homotopy_component(const Space& x, const Space& y, const Assignment& f,
                                           std::uint64_t node_budget) {
  std::unordered_set<Assignment, AssignmentHash> seen{f};
  std::vector<Assignment> stack{f};
  std::uint64_t used = 0;
  while (!stack.empty()) {
    Assignment cur = std::move(stack.back());
    stack.pop_back();
    MapSearch s(x, y);
    restrict_to_one_step(s, x, y, cur);
    s.for_each(
        [&](const Assignment& g) {
          if (seen.insert(g).second) stack.push_back(g);
          return true;
        },
        remaining(node_budget, used));
    used += s.nodes_used();
  }
  std::vector<Assignment> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EquivalenceWitness> is_homotopy_equivalence(const SpaceMap& f, std::uint64_t cap,
                                                          std::uint64_t node_budget) {
  if (!f.continuous()) return std::nullopt;
  const Space& x = f.domain();
  const Space& y = f.codomain();
  if (saturating_power(x.size(), y.size()) > cap)
    throw ExponentialTooLarge(std::to_string(x.size()) + "^" + std::to_string(y.size()) +
                              " exceeds the cap of " + std::to_string(cap));
  const auto idx = identity_map(x), idy = identity_map(y);
  if (is_isomorphism(f)) {
    Assignment inv(y.size());
    for (Point p = 0; p < x.size(); ++p) inv[f(p)] = p;
    return EquivalenceWitness{SpaceMap(y, x, inv), {idx.assignment()}, {idy.assignment()}};
  }
  const auto comp_x = homotopy_component(x, x, idx.assignment(), node_budget);
  const auto comp_y = homotopy_component(y, y, idy.assignment(), node_budget);
  std::optional<Assignment> found;
  MapSearch s(y, x);
  s.for_each(
      [&](const Assignment& g) {
        Assignment gf(x.size()), fg(y.size());
        for (Point p = 0; p < x.size(); ++p) gf[p] = g[f(p)];
        for (Point p = 0; p < y.size(); ++p) fg[p] = f(g[p]);
        if (std::binary_search(comp_x.begin(), comp_x.end(), gf) &&
            std::binary_search(comp_y.begin(), comp_y.end(), fg)) {
          found = g;
          return false;
        }
        return true;
      },
      node_budget);
  if (!found) return std::nullopt;
  SpaceMap g(y, x, *found);
  auto c1 = are_homotopic(compose(g, f), idx, node_budget);
  auto c2 = are_homotopic(compose(f, g), idy, node_budget);
  return EquivalenceWitness{g, *c1, *c2};
}

RelativeCylinder relative_cylinder(const SpaceMap& i, std::size_t n) {
  if (!is_embedding(i)) throw NotEmbedding("relative cylinder needs an embedding");
  const Space& a = i.codomain();
  const auto cyl = cylinder(a, n);
  Subset in_b(a.size());
  for (Point b = 0; b < i.domain().size(); ++b) in_b.set(i(b));
  std::vector<std::size_t> key(cyl.space.size());
  for (Point p = 0; p < a.size(); ++p)
    for (std::size_t t = 0; t <= n; ++t)
      key[cyl_point(n, p, t)] = in_b.test(p) ? cyl_point(n, p, 0) : cyl_point(n, p, t);
  auto q = quotient_by_key(cyl.space, key);
  const SpaceMap i0 = compose(q.projection, cyl.i0);
  const SpaceMap i1 = compose(q.projection, cyl.i1);
  Assignment pa(q.space.size());
  for (Point p = 0; p < cyl.space.size(); ++p) pa[q.projection(p)] = cyl.p(p);
  const SpaceMap p(q.space, a, std::move(pa));
  auto doubled = pushout(i, i);
  const SpaceMap j = pushout_induced(doubled, i0, i1);
  const SpaceMap fold = pushout_induced(doubled, identity_map(a), identity_map(a));
  const bool fold_factors = compose(p, j).assignment() == fold.assignment();
  return {i, n, q.space, q.projection, i0, i1, p, std::move(doubled), j, fold_factors};
}

bool is_homotopy_rel(const Homotopy& h, const SpaceMap& i) {
  if (!(i.codomain() == h.base())) throw DomainMismatch("i must land in the homotopy base");
  for (Point b = 0; b < i.domain().size(); ++b)
    for (std::size_t t = 1; t <= h.length(); ++t)
      if (h.map()(cyl_point(h.length(), i(b), t)) != h.map()(cyl_point(h.length(), i(b), 0)))
        return false;
  return true;
}

}  // namespace pstop
