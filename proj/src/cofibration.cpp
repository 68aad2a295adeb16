#include "pstop/cofibration.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace pstop {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

RetractProblem solve_retract(const SpaceMap& i, std::size_t n, std::uint64_t node_budget) {
  if (!i.continuous()) throw NotContinuous("cofibration candidate is not continuous");
  if (!is_injective(i.assignment(), i.codomain().size()))
    throw NotEmbedding("cofibration candidate is not injective");
  const auto cyl_b = cylinder(i.domain(), n);
  const auto cyl_a = cylinder(i.codomain(), n);
  auto po = pushout(i, cyl_b.i0);
  SpaceMap j0 = pushout_induced(po, cyl_a.i0, cylinder_map(i, n));
  RetractProblem rp{i, n, po, j0, std::nullopt, 0};
  if (!is_injective(j0.assignment(), j0.codomain().size())) return rp;
  MapSearch s(cyl_a.space, po.apex);
  for (Point p = 0; p < po.apex.size(); ++p) s.fix(j0(p), p);
  auto r = s.first(node_budget);
  rp.nodes = s.nodes_used();
  if (r) rp.retract = SpaceMap(cyl_a.space, po.apex, std::move(*r));
  return rp;
}

CofibrationResult is_cofibration(const SpaceMap& i, std::size_t n, std::size_t max_cyl,
                                 std::uint64_t node_budget) {
  CofibrationResult out;
  for (std::size_t len = n; len <= std::max(n, max_cyl); ++len) {
    auto rp = solve_retract(i, len, node_budget);
    out.tried.push_back(len);
    out.length = len;
    out.nodes += rp.nodes;
    if (rp.retract) {
      out.cofibration = true;
      out.retract = std::move(rp.retract);
      break;
    }
  }
  return out;
}

SpaceMap relative_cylinder_map(const SpaceMap& i, std::size_t n) {
  const auto cyl_b = cylinder(i.domain(), n);
  const auto cyl_a = cylinder(i.codomain(), n);
  const auto p1 = pushout(i, cyl_b.i0);
  const SpaceMap top = compose(p1.q1, cyl_b.i1);
  const auto p2 = pushout(top, i);
  const SpaceMap j1 = pushout_induced(p1, cyl_a.i0, cylinder_map(i, n));
  return pushout_induced(p2, j1, cyl_a.i1);
}

std::optional<Homotopy> hep_solve(const SpaceMap& i, const SpaceMap& f, const Homotopy& g, int k,
                                  std::uint64_t node_budget) {
  if (!(f.domain() == i.codomain()) || !(g.base() == i.domain()) ||
      !(g.codomain() == f.codomain()))
    throw DomainMismatch("extension data do not fit together");
  const std::size_t n = g.length();
  const std::size_t end = k == 0 ? 0 : n;
  const Assignment fi = compose(f, i).assignment();
  if (g.slice(end) != fi)
    throw IncompatibleData("the homotopy at end " + std::to_string(k) + " is not f ∘ i");
  const Space& a = i.codomain();
  const auto cyl = cylinder(a, n);
  MapSearch s(cyl.space, f.codomain());
  for (Point p = 0; p < a.size(); ++p) s.fix(cyl_point(n, p, end), f(p));
  for (Point b = 0; b < i.domain().size(); ++b)
    for (std::size_t t = 0; t <= n; ++t)
      s.fix(cyl_point(n, i(b), t), g.map()(cyl_point(n, b, t)));
  auto h = s.first(node_budget);
  if (!h) return std::nullopt;
  return Homotopy(a, n, SpaceMap(cyl.space, f.codomain(), std::move(*h)));
}

Interchange interchange(const Space& x, std::size_t n) {
  const auto ix = cylinder(x, n);
  const auto iix = cylinder(ix.space, n);
  Assignment t(iix.space.size());
  for (Point p = 0; p < x.size(); ++p)
    for (std::size_t s = 0; s <= n; ++s)
      for (std::size_t u = 0; u <= n; ++u)
        t[cyl_point(n, cyl_point(n, p, s), u)] = cyl_point(n, cyl_point(n, p, u), s);
  return {iix.space, SpaceMap(iix.space, iix.space, std::move(t))};
}

InterchangeCheck check_interchange(const Space& x, std::size_t n) {
  const auto ix = cylinder(x, n);
  const auto iix = cylinder(ix.space, n);
  const auto t = interchange(x, n).t;
  InterchangeCheck c{};
  c.continuous = t.continuous();
  c.involution = compose(t, t).assignment() == identity_map(iix.space).assignment();
  c.t_ik = c.t_iik = true;
  for (const SpaceMap* ik : {&ix.i0, &ix.i1}) {
    const SpaceMap i_ik = cylinder_map(*ik, n);                 // I(i_k(X))
    const SpaceMap& ik_ix = (ik == &ix.i0) ? iix.i0 : iix.i1;  // i_k(IX)
    c.t_ik = c.t_ik && compose(t, ik_ix).assignment() == i_ik.assignment();
    c.t_iik = c.t_iik && compose(t, i_ik).assignment() == ik_ix.assignment();
  }
  return c;
}

Factorization factorize(const SpaceMap& f, std::size_t n) {
  const auto cyl = cylinder(f.domain(), n);
  const auto po = pushout(cyl.i1, f);
  SpaceMap i = compose(po.q0, cyl.i0);
  SpaceMap g = pushout_induced(po, compose(f, cyl.p), identity_map(f.codomain()));
  return {f, n, po.apex, std::move(i), std::move(g)};
}

Verdict FactorizationReport::verdict() const {
  if (!commutes || cofibration == Verdict::Fail || equivalence == Verdict::Fail)
    return Verdict::Fail;
  if (cofibration == Verdict::Inconclusive || equivalence == Verdict::Inconclusive)
    return Verdict::Inconclusive;
  return Verdict::Pass;
}

Verdict weak_equivalence_verdict(const SpaceMap& f, std::uint64_t cap, std::uint64_t budget) {
  try {
    return is_homotopy_equivalence(f, cap, budget) ? Verdict::Pass : Verdict::Fail;
  } catch (const SearchSpaceTooLarge&) {
    return Verdict::Inconclusive;
  } catch (const ExponentialTooLarge&) {
    return Verdict::Inconclusive;
  }
}

namespace {

Verdict cofibration_verdict(const SpaceMap& i, std::size_t n, std::size_t max_cyl,
                            std::uint64_t budget) {
  try {
    return is_cofibration(i, n, max_cyl, budget).cofibration ? Verdict::Pass : Verdict::Fail;
  } catch (const SearchSpaceTooLarge&) {
    return Verdict::Inconclusive;
  }
}

}  // namespace

FactorizationReport verify_factorization(const Factorization& fz, std::size_t max_cyl,
                                         std::uint64_t cap, std::uint64_t budget) {
  FactorizationReport r;
  r.commutes = compose(fz.g, fz.i).assignment() == fz.f.assignment();
  r.cofibration = cofibration_verdict(fz.i, fz.length, max_cyl, budget);
  r.equivalence = weak_equivalence_verdict(fz.g, cap, budget);
  return r;
}

std::optional<MapRetraction> is_retract_of(const SpaceMap& alpha, const SpaceMap& beta,
                                           std::uint64_t budget) {
  const Space& a = alpha.domain();
  const Space& b = alpha.codomain();
  const Space& c = beta.domain();
  const Space& d = beta.codomain();
  std::optional<MapRetraction> out;
  MapSearch s_search(a, c);
  s_search.for_each(
      [&](const Assignment& s) {
        if (!is_injective(s, c.size())) return true;
        MapSearch r_search(c, a);
        for (Point p = 0; p < a.size(); ++p) r_search.fix(s[p], p);
        r_search.for_each(
            [&](const Assignment& r) {
              // s' is pinned on the image of α.
              MapSearch s2_search(b, d);
              Assignment pinned(b.size(), static_cast<Point>(-1));
              for (Point p = 0; p < a.size(); ++p) {
                const Point v = beta(s[p]);
                if (pinned[alpha(p)] != static_cast<Point>(-1) && pinned[alpha(p)] != v)
                  return true;
                pinned[alpha(p)] = v;
                s2_search.fix(alpha(p), v);
              }
              s2_search.for_each(
                  [&](const Assignment& s2) {
                    if (!is_injective(s2, d.size())) return true;
                    MapSearch r2_search(d, b);
                    Assignment fixed(d.size(), static_cast<Point>(-1));
                    auto pin = [&](Point at, Point v) {
                      if (fixed[at] != static_cast<Point>(-1) && fixed[at] != v) return false;
                      fixed[at] = v;
                      r2_search.fix(at, v);
                      return true;
                    };
                    for (Point q = 0; q < b.size(); ++q)
                      if (!pin(s2[q], q)) return true;
                    for (Point q = 0; q < c.size(); ++q)
                      if (!pin(beta(q), alpha(r[q]))) return true;
                    if (auto r2 = r2_search.first(budget)) {
                      out = MapRetraction{s, r, s2, *r2};
                      return false;
                    }
                    return true;
                  },
                  budget);
              return !out;
            },
            budget);
        return !out;
      },
      budget);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "i-category") return Suite::ICategory;
  if (name == "cofibration-category") return Suite::CofibrationCategory;
  return std::nullopt;
}

const char* to_string(Suite s) {
  return s == Suite::ICategory ? "i-category" : "cofibration-category";
}

namespace {

Verdict combine(const std::vector<Verdict>& vs) {
  bool inconclusive = false;
  for (Verdict v : vs) {
    if (v == Verdict::Fail) return Verdict::Fail;
    if (v == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

Verdict from_bool(bool b) { return b ? Verdict::Pass : Verdict::Fail; }

struct Named {
  std::string name;
  Space space;
};

struct Inclusion {
  std::string name;  // "space{members}"
  std::string space;
  json subset;
  SpaceMap map;
  bool cofibration;
};

class SuiteRunner {
 public:
  SuiteRunner(const std::vector<std::pair<std::string, Space>>& sample, const SuiteOptions& opt)
      : opt_(opt), rng_(opt.seed) {
    for (const auto& [name, s] : sample) {
      if (s.kind() != Space::Kind::PointLimit || s.size() > opt.max_space_size) continue;
      spaces_.push_back({name, s});
    }
    for (const auto& sp : spaces_) {
      const std::size_t n = sp.space.size();
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        const Subset u = from_mask(n, m);
        auto sub = subspace(sp.space, u);
        json members = json::array();
        for (Point p : pstop::members(u)) members.push_back(sp.space.label(p));
        const bool cof = cofibration_verdict(sub.inclusion, opt.length, opt.max_cyl,
                                             opt.node_budget) == Verdict::Pass;
        inclusions_.push_back(
            {sp.name + members.dump(), sp.name, members, sub.inclusion, cof});
      }
    }
  }

  const std::vector<Named>& spaces() const { return spaces_; }

  AxiomResult cylinder_axiom() {
    AxiomResult r{"cylinder", {}};
    const Space empty;
    const auto ce = cylinder(empty, opt_.length);
    r.instances.push_back({"I(empty) = empty", from_bool(ce.space.size() == 0), json::object()});
    for (const auto& sp : spaces_) {
      const auto c = cylinder(sp.space, opt_.length);
      const auto id = identity_map(sp.space).assignment();
      const bool ok = c.i0.continuous() && c.i1.continuous() && c.p.continuous() &&
                      compose(c.p, c.i0).assignment() == id &&
                      compose(c.p, c.i1).assignment() == id;
      r.instances.push_back({sp.name + ": p i_k = 1", from_bool(ok), {{"space", sp.name}}});
    }
    for (const auto& [x, y] : pairs()) {
      for (const auto& a : sample_maps(x->space, y->space)) {
        const SpaceMap f(x->space, y->space, a);
        const auto cx = cylinder(x->space, opt_.length), cy = cylinder(y->space, opt_.length);
        const SpaceMap fi = cylinder_map(f, opt_.length);
        const bool ok = compose(fi, cx.i0).assignment() == compose(cy.i0, f).assignment() &&
                        compose(fi, cx.i1).assignment() == compose(cy.i1, f).assignment() &&
                        compose(cy.p, fi).assignment() == compose(f, cx.p).assignment();
        r.instances.push_back({x->name + " -> " + y->name + ": naturality", from_bool(ok),
                               map_payload(x->name, y->name, f)});
      }
    }
    return r;
  }

  AxiomResult pushout_axiom() {
    AxiomResult r{"pushout", {}};
    for (const auto& inc : cofibrations()) {
      for (const auto& y : spaces_) {
        for (const auto& a : sample_maps(inc.map.domain(), y.space)) {
          const SpaceMap f(inc.map.domain(), y.space, a);
          const auto po = pushout(inc.map, f);
          const Verdict cof = cofibration_verdict(po.q1, opt_.length, opt_.max_cyl, opt_.node_budget);
          // Canonical comparison IA ∪_{IB} IY → I(A ∪_B Y).
          const auto ipo = pushout(cylinder_map(inc.map, opt_.length), cylinder_map(f, opt_.length));
          const SpaceMap cmp = pushout_induced(ipo, cylinder_map(po.q0, opt_.length),
                                               cylinder_map(po.q1, opt_.length));
          const Verdict preserved = from_bool(is_isomorphism(cmp));
          json payload = inclusion_payload(inc);
          payload["target"] = y.name;
          payload["f"] = a;
          r.instances.push_back({inc.name + " along a map into " + y.name,
                                 combine({cof, preserved}), payload});
        }
      }
    }
    return r;
  }

  AxiomResult cofibration_axiom() {
    AxiomResult r{"cofibration", {}};
    for (const auto& sp : spaces_) {
      // (a) isomorphisms: the identity and the first non-identity automorphism.
      std::vector<Assignment> autos{identity_map(sp.space).assignment()};
      MapSearch s(sp.space, sp.space);
      s.for_each([&](const Assignment& a) {
        if (a != autos[0] && is_isomorphism(SpaceMap(sp.space, sp.space, a))) {
          autos.push_back(a);
          return false;
        }
        return true;
      }, opt_.node_budget);
      for (const auto& a : autos)
        r.instances.push_back(
            {sp.name + ": isomorphism is a cofibration",
             cofibration_verdict(SpaceMap(sp.space, sp.space, a), opt_.length, opt_.max_cyl,
                                 opt_.node_budget),
             {{"space", sp.name}, {"map", a}}});
      // (b) ∅ → X.
      const SpaceMap from_empty(Space(), sp.space, {});
      r.instances.push_back({sp.name + ": empty -> X is a cofibration",
                             cofibration_verdict(from_empty, opt_.length, opt_.max_cyl,
                                                 opt_.node_budget),
                             {{"space", sp.name}}});
    }
    // (c) composition along chains U ⊂ V ⊂ X of cofibrations.
    for (const auto& outer : cofibrations()) {
      for (const auto& inner : cofibrations()) {
        if (inner.space != outer.space) continue;
        const auto inner_pts = inner.map.assignment();
        const auto outer_pts = outer.map.assignment();
        if (!std::includes(outer_pts.begin(), outer_pts.end(), inner_pts.begin(), inner_pts.end()))
          continue;
        // inner as a map into the subspace carried by outer.
        Assignment a;
        for (Point p : inner_pts)
          a.push_back(static_cast<Point>(
              std::lower_bound(outer_pts.begin(), outer_pts.end(), p) - outer_pts.begin()));
        const SpaceMap i(inner.map.domain(), outer.map.domain(), a);
        const Verdict vi = cofibration_verdict(i, opt_.length, opt_.max_cyl, opt_.node_budget);
        if (vi != Verdict::Pass) continue;
        json payload{{"space", inner.space}, {"inner", inner.subset}, {"outer", outer.subset}};
        r.instances.push_back({inner.name + " in " + outer.name + ": composite is a cofibration",
                               cofibration_verdict(compose(outer.map, i), opt_.length,
                                                   opt_.max_cyl, opt_.node_budget),
                               payload});
      }
    }
    // (d) homotopy extension.
    for (const auto& inc : cofibrations()) {
      for (const auto& z : spaces_) {
        for (const auto& fa : sample_maps(inc.map.codomain(), z.space)) {
          const SpaceMap f(inc.map.codomain(), z.space, fa);
          for (const auto& g : sample_homotopies(inc.map, f)) {
            Verdict v;
            try {
              v = from_bool(hep_solve(inc.map, f, g, 0, opt_.node_budget).has_value());
            } catch (const SearchSpaceTooLarge&) {
              v = Verdict::Inconclusive;
            }
            json payload = inclusion_payload(inc);
            payload["target"] = z.name;
            payload["f"] = fa;
            payload["G"] = g.map().assignment();
            r.instances.push_back({inc.name + ": extension into " + z.name, v, payload});
          }
        }
      }
    }
    return r;
  }

  AxiomResult interchange_axiom() {
    AxiomResult r{"interchange", {}};
    for (const auto& sp : spaces_) {
      const auto c = check_interchange(sp.space, opt_.length);
      r.instances.push_back({sp.name + ": T i_k = I i_k, T I(i_k) = i_k, T T = 1",
                             from_bool(c.all()),
                             {{"space", sp.name},
                              {"continuous", c.continuous},
                              {"involution", c.involution},
                              {"T_ik", c.t_ik},
                              {"T_Iik", c.t_iik}}});
    }
    return r;
  }

  AxiomResult relative_cylinder_axiom() {
    AxiomResult r{"relative-cylinder", {}};
    for (const auto& inc : cofibrations()) {
      const SpaceMap j = relative_cylinder_map(inc.map, opt_.length);
      r.instances.push_back({inc.name + ": j is a cofibration",
                             cofibration_verdict(j, opt_.length, opt_.max_cyl, opt_.node_budget),
                             inclusion_payload(inc)});
    }
    return r;
  }

  AxiomResult composition_axiom() {
    AxiomResult r{"composition", {}};
    for (const auto& sp : spaces_) {
      const SpaceMap id = identity_map(sp.space);
      r.instances.push_back(
          {sp.name + ": identity is a cofibration and a weak equivalence",
           combine({cofibration_verdict(id, opt_.length, opt_.max_cyl, opt_.node_budget),
                    we(id)}),
           {{"space", sp.name}}});
    }
    for (std::size_t k = 0; k < opt_.factorizations && !spaces_.empty(); ++k) {
      const auto& x = pick(spaces_);
      const auto& y = pick(spaces_);
      const auto& z = pick(spaces_);
      auto fa = sample_maps(x.space, y.space, 1);
      auto ga = sample_maps(y.space, z.space, 1);
      if (fa.empty() || ga.empty()) continue;
      const SpaceMap f(x.space, y.space, fa[0]), g(y.space, z.space, ga[0]);
      const Verdict vf = we(f), vg = we(g), vgf = we(compose(g, f));
      Verdict v = Verdict::Pass;
      if (vf == Verdict::Inconclusive || vg == Verdict::Inconclusive ||
          vgf == Verdict::Inconclusive) {
        v = Verdict::Inconclusive;
      } else {
        const int passes = (vf == Verdict::Pass) + (vg == Verdict::Pass) + (vgf == Verdict::Pass);
        v = from_bool(passes != 2);
      }
      r.instances.push_back({x.name + " -> " + y.name + " -> " + z.name + ": two out of three", v,
                             {{"spaces", {x.name, y.name, z.name}}, {"f", fa[0]}, {"g", ga[0]}}});
    }
    return r;
  }

  AxiomResult cof_pushout_axiom() {
    AxiomResult r{"pushout", {}};
    const auto cofs = cofibrations();
    for (std::size_t k = 0; k < opt_.squares && !cofs.empty() && !spaces_.empty(); ++k) {
      const auto& inc = pick(cofs);
      const auto& y = pick(spaces_);
      auto fa = sample_maps(inc.map.domain(), y.space, 1);
      if (fa.empty()) continue;
      const SpaceMap f(inc.map.domain(), y.space, fa[0]);
      const auto po = pushout(inc.map, f);
      std::vector<Verdict> parts{
          cofibration_verdict(po.q1, opt_.length, opt_.max_cyl, opt_.node_budget)};
      const Verdict wf = we(f);
      if (wf == Verdict::Pass) parts.push_back(we(po.q0));
      if (wf == Verdict::Inconclusive) parts.push_back(Verdict::Inconclusive);
      const Verdict wi = we(inc.map);
      if (wi == Verdict::Pass) parts.push_back(we(po.q1));
      if (wi == Verdict::Inconclusive) parts.push_back(Verdict::Inconclusive);
      json payload = inclusion_payload(inc);
      payload["target"] = y.name;
      payload["f"] = fa[0];
      r.instances.push_back({inc.name + " along a map into " + y.name, combine(parts), payload});
    }
    return r;
  }

  AxiomResult factorization_axiom() {
    AxiomResult r{"factorization", {}};
    for (std::size_t k = 0; k < opt_.factorizations && !spaces_.empty(); ++k) {
      const auto& x = pick(spaces_);
      const auto& y = pick(spaces_);
      auto fa = sample_maps(x.space, y.space, 1);
      if (fa.empty()) continue;
      const SpaceMap f(x.space, y.space, fa[0]);
      const auto fz = factorize(f, opt_.length);
      const auto rep = verify_factorization(fz, opt_.max_cyl, opt_.exponential_cap, opt_.node_budget);
      json payload = map_payload(x.name, y.name, f);
      payload["commutes"] = rep.commutes;
      payload["cofibration"] = to_string(rep.cofibration);
      payload["equivalence"] = to_string(rep.equivalence);
      r.instances.push_back(
          {x.name + " -> " + y.name + ": mapping cylinder factorization", rep.verdict(), payload});
    }
    return r;
  }

  AxiomResult fibrant_models_axiom() {
    AxiomResult r{"fibrant-models", {}};
    for (const auto& sp : spaces_) {
      const SpaceMap id = identity_map(sp.space);
      r.instances.push_back(
          {sp.name + ": 1 is a trivial cofibration",
           combine({cofibration_verdict(id, opt_.length, opt_.max_cyl, opt_.node_budget), we(id)}),
           {{"space", sp.name}}});
    }
    for (const auto& inc : cofibrations()) {
      if (we(inc.map) != Verdict::Pass) continue;
      MapSearch s(inc.map.codomain(), inc.map.domain());
      for (Point p = 0; p < inc.map.domain().size(); ++p) s.fix(inc.map(p), p);
      r.instances.push_back({inc.name + ": trivial cofibration admits a retraction",
                             from_bool(s.first(opt_.node_budget).has_value()),
                             inclusion_payload(inc)});
    }
    return r;
  }

 private:
  std::vector<Inclusion> cofibrations() const {
    std::vector<Inclusion> out;
    for (const auto& inc : inclusions_)
      if (inc.cofibration) out.push_back(inc);
    return out;
  }

  std::vector<std::pair<const Named*, const Named*>> pairs() const {
    std::vector<std::pair<const Named*, const Named*>> out;
    for (const auto& x : spaces_)
      for (const auto& y : spaces_) out.emplace_back(&x, &y);
    return out;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[rng_() % v.size()];
  }

  std::vector<Assignment> sample_maps(const Space& x, const Space& y, std::size_t k = 0) {
    if (k == 0) k = opt_.maps_per_pair;
    std::vector<Assignment> all;
    MapSearch s(x, y);
    s.for_each([&](const Assignment& a) {
      all.push_back(a);
      return all.size() < 4096;
    }, opt_.node_budget);
    std::vector<Assignment> out;
    while (out.size() < k && !all.empty()) {
      const std::size_t idx = rng_() % all.size();
      out.push_back(all[idx]);
      all.erase(all.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  }

  std::vector<Homotopy> sample_homotopies(const SpaceMap& i, const SpaceMap& f) {
    const std::size_t n = opt_.length;
    const Space& b = i.domain();
    const auto cyl = cylinder(b, n);
    std::vector<Assignment> all;
    MapSearch s(cyl.space, f.codomain());
    for (Point p = 0; p < b.size(); ++p) s.fix(cyl_point(n, p, 0), f(i(p)));
    s.for_each([&](const Assignment& a) {
      all.push_back(a);
      return all.size() < 4096;
    }, opt_.node_budget);
    std::vector<Homotopy> out;
    while (out.size() < opt_.maps_per_pair && !all.empty()) {
      const std::size_t idx = rng_() % all.size();
      out.emplace_back(b, n, SpaceMap(cyl.space, f.codomain(), all[idx]));
      all.erase(all.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  }

  Verdict we(const SpaceMap& f) const {
    return weak_equivalence_verdict(f, opt_.exponential_cap, opt_.node_budget);
  }

  static json inclusion_payload(const Inclusion& inc) {
    return {{"space", inc.space}, {"subset", inc.subset}};
  }

  static json map_payload(const std::string& x, const std::string& y, const SpaceMap& f) {
    return {{"domain", x}, {"codomain", y}, {"assignment", f.assignment()}};
  }

  SuiteOptions opt_;
  std::mt19937_64 rng_;
  std::vector<Named> spaces_;
  std::vector<Inclusion> inclusions_;
};

}  // namespace

Verdict AxiomResult::verdict() const {
  std::vector<Verdict> vs;
  for (const auto& inst : instances) vs.push_back(inst.verdict);
  return combine(vs);
}

Verdict AxiomReport::verdict() const {
  std::vector<Verdict> vs;
  for (const auto& a : axioms) vs.push_back(a.verdict());
  return combine(vs);
}

json AxiomReport::to_json() const {
  json axs = json::array();
  for (const auto& a : axioms) {
    std::size_t pass = 0, fail = 0, inc = 0;
    json flagged = json::array();
    for (const auto& inst : a.instances) {
      if (inst.verdict == Verdict::Pass) {
        ++pass;
        continue;
      }
      (inst.verdict == Verdict::Fail ? fail : inc)++;
      flagged.push_back({{"description", inst.description},
                         {"verdict", to_string(inst.verdict)},
                         {"payload", inst.payload}});
    }
    axs.push_back({{"id", a.id},
                   {"verdict", to_string(a.verdict())},
                   {"instances", a.instances.size()},
                   {"passed", pass},
                   {"failed", fail},
                   {"inconclusive", inc},
                   {"counterexamples", flagged}});
  }
  return {{"suite", to_string(suite)},
          {"verdict", to_string(verdict())},
          {"sample", sample},
          {"limits",
           {{"cylinderLength", options.length},
            {"maxCylinderLength", std::max(options.length, options.max_cyl)},
            {"seed", options.seed},
            {"mapsPerPair", options.maps_per_pair},
            {"factorizations", options.factorizations},
            {"squares", options.squares},
            {"maxSpaceSize", options.max_space_size},
            {"exponentialCap", options.exponential_cap},
            {"nodeBudget", options.node_budget}}},
          {"axioms", axs}};
}

AxiomReport verify_axioms(const std::vector<std::pair<std::string, Space>>& sample, Suite suite,
                          const SuiteOptions& options) {
  SuiteRunner run(sample, options);
  AxiomReport rep{suite, options, {}, {}};
  for (const auto& sp : run.spaces()) rep.sample.push_back(sp.name);
  if (suite == Suite::ICategory) {
    rep.axioms.push_back(run.cylinder_axiom());
    rep.axioms.push_back(run.pushout_axiom());
    rep.axioms.push_back(run.cofibration_axiom());
    rep.axioms.push_back(run.interchange_axiom());
    rep.axioms.push_back(run.relative_cylinder_axiom());
  } else {
    rep.axioms.push_back(run.composition_axiom());
    rep.axioms.push_back(run.cof_pushout_axiom());
    rep.axioms.push_back(run.factorization_axiom());
    rep.axioms.push_back(run.fibrant_models_axiom());
  }
  return rep;
}

}  // namespace pstop
