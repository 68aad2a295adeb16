#include "pstop/space.hpp"

#include <algorithm>
#include <unordered_map>

namespace pstop {

Subset empty_subset(std::size_t n) { return Subset(n); }

Subset full_subset(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

Subset make_subset(std::size_t n, std::initializer_list<Point> pts) {
  Subset s(n);
  for (Point p : pts) s.set(p);
  return s;
}

Subset make_subset(std::size_t n, const std::vector<Point>& pts) {
  Subset s(n);
  for (Point p : pts) s.set(p);
  return s;
}

std::vector<Point> members(const Subset& s) {
  std::vector<Point> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    out.push_back(static_cast<Point>(i));
  return out;
}

std::uint32_t to_mask(const Subset& s) {
  std::uint32_t m = 0;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    m |= (1u << i);
  return m;
}

Subset from_mask(std::size_t n, std::uint32_t mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) s.set(i);
  return s;
}

PrincipalFilter::PrincipalFilter(std::size_t n, Subset gen)
    : carrier_size(n), generator(std::move(gen)) {
  if (generator.size() != n) throw UnknownPoint("filter generator sized to another carrier");
  if (generator.none()) throw UnknownFilter("a filter generator must be non-empty");
}

PrincipalFilter PrincipalFilter::point(std::size_t n, Point x) {
  return PrincipalFilter(n, make_subset(n, {x}));
}

// ---------------------------------------------------------------------------

struct Space::Data {
  Kind kind = Kind::PointLimit;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Point> index;
  std::vector<Subset> point_limits;
  std::vector<Subset> neighborhoods;
  std::vector<std::vector<Point>> limit_lists;
  std::vector<std::vector<Point>> neighborhood_lists;
  std::vector<Subset> by_mask;  // subset-limit kind only
};

namespace {

std::shared_ptr<Space::Data> build_common(std::vector<std::string> labels) {
  auto d = std::make_shared<Space::Data>();
  d->labels = std::move(labels);
  for (std::size_t i = 0; i < d->labels.size(); ++i) {
    auto [it, fresh] = d->index.emplace(d->labels[i], static_cast<Point>(i));
    if (!fresh) throw UnknownPoint("duplicate point identifier '" + d->labels[i] + "'");
  }
  return d;
}

void finish(Space::Data& d) {
  const std::size_t n = d.labels.size();
  d.neighborhoods.assign(n, Subset(n));
  d.limit_lists.assign(n, {});
  d.neighborhood_lists.assign(n, {});
  for (std::size_t y = 0; y < n; ++y) {
    d.limit_lists[y] = members(d.point_limits[y]);
    for (Point x : d.limit_lists[y]) d.neighborhoods[x].set(y);
  }
  for (std::size_t x = 0; x < n; ++x) d.neighborhood_lists[x] = members(d.neighborhoods[x]);
}

}  // namespace

Space::Space() : d_(std::make_shared<Data>()) {}
Space::Space(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Space Space::point_limit(std::vector<std::string> labels, std::vector<Subset> limits) {
  auto d = build_common(std::move(labels));
  const std::size_t n = d->labels.size();
  if (limits.size() != n) throw UnknownPoint("limit table does not cover the carrier");
  for (std::size_t y = 0; y < n; ++y) {
    if (limits[y].size() != n) throw UnknownPoint("limit set sized to another carrier");
    if (!limits[y].test(y)) throw CenteringViolation(d->labels[y]);
  }
  d->kind = Kind::PointLimit;
  d->point_limits = std::move(limits);
  finish(*d);
  return Space(std::move(d));
}

Space Space::subset_limit(std::vector<std::string> labels, std::vector<Subset> by_mask) {
  auto d = build_common(std::move(labels));
  const std::size_t n = d->labels.size();
  if (n > kMaxSubsetLimitPoints)
    throw KindMismatch("subset-limit spaces are limited to 16 points");
  if (by_mask.size() != (std::size_t{1} << n))
    throw UnknownFilter("subset-limit table must list every non-empty subset");
  by_mask[0] = Subset(n);
  for (std::size_t m = 1; m < by_mask.size(); ++m)
    if (by_mask[m].size() != n) throw UnknownPoint("limit set sized to another carrier");
  d->point_limits.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    const Subset& l = by_mask[std::size_t{1} << y];
    if (!l.test(y)) throw CenteringViolation(d->labels[y]);
    d->point_limits[y] = l;
  }
  d->kind = Kind::SubsetLimit;
  d->by_mask = std::move(by_mask);
  finish(*d);
  return Space(std::move(d));
}

std::size_t Space::size() const noexcept { return d_->labels.size(); }
Space::Kind Space::kind() const noexcept { return d_->kind; }
const std::vector<std::string>& Space::labels() const noexcept { return d_->labels; }
const std::string& Space::label(Point p) const { return d_->labels.at(p); }

std::optional<Point> Space::find(std::string_view label) const {
  auto it = d_->index.find(std::string(label));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Point Space::index_of(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw UnknownPoint("'" + std::string(label) + "' is not in the carrier");
}

const Subset& Space::point_limits(Point y) const { return d_->point_limits[y]; }
const Subset& Space::neighborhood(Point x) const { return d_->neighborhoods[x]; }
const std::vector<Point>& Space::point_limit_list(Point y) const { return d_->limit_lists[y]; }
const std::vector<Point>& Space::neighborhood_list(Point x) const {
  return d_->neighborhood_lists[x];
}

Subset Space::filter_limits(const Subset& gen) const {
  if (gen.size() != size()) throw UnknownPoint("filter generator sized to another carrier");
  if (gen.none()) throw UnknownFilter("empty generator");
  if (d_->kind == Kind::SubsetLimit) return d_->by_mask[to_mask(gen)];
  Subset out = full_subset(size());
  for (auto i = gen.find_first(); i != Subset::npos; i = gen.find_next(i))
    out &= d_->point_limits[i];
  return out;
}

Subset Space::filter_limits(const PrincipalFilter& f) const {
  if (f.carrier_size != size()) throw UnknownFilter("filter lives on another carrier");
  return filter_limits(f.generator);
}

bool operator==(const Space& a, const Space& b) {
  if (a.d_ == b.d_) return true;
  if (a.labels() != b.labels()) return false;
  if (a.kind() == b.kind() && a.kind() == Space::Kind::PointLimit)
    return a.d_->point_limits == b.d_->point_limits;
  const std::size_t n = a.size();
  if (n > Space::kMaxSubsetLimitPoints) return false;
  for (std::uint32_t m = 1; m < (1u << n); ++m)
    if (a.filter_limits(from_mask(n, m)) != b.filter_limits(from_mask(n, m))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Space make_space(const std::vector<std::string>& points,
                 const std::vector<std::vector<std::string>>& lims) {
  const std::size_t n = points.size();
  if (lims.size() != n) throw UnknownPoint("limit table does not cover the carrier");
  std::unordered_map<std::string, Point> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(points[i], static_cast<Point>(i));
  std::vector<Subset> sets(n, Subset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (const auto& l : lims[y]) {
      auto it = idx.find(l);
      if (it == idx.end()) throw UnknownPoint("limit '" + l + "' of '" + points[y] + "'");
      sets[y].set(it->second);
    }
  return Space::point_limit(points, std::move(sets));
}

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Space point_space(std::string label) {
  return Space::point_limit({std::move(label)}, {full_subset(1)});
}

Space discrete_space(std::size_t n) {
  std::vector<Subset> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(make_subset(n, {static_cast<Point>(i)}));
  return Space::point_limit(numbered_labels(n), std::move(l));
}

Space indiscrete_space(std::size_t n) {
  return Space::point_limit(numbered_labels(n), std::vector<Subset>(n, full_subset(n)));
}

StructureKind classify_exhaustive(const Space& s) {
  const std::size_t n = s.size();
  if (n > Space::kMaxSubsetLimitPoints)
    throw KindMismatch("exhaustive classification is limited to 16 points");
  StructureKind k;
  const std::uint32_t top = 1u << n;
  std::vector<Subset> lim(top);
  for (std::uint32_t m = 1; m < top; ++m) lim[m] = s.filter_limits(from_mask(n, m));

  bool centered = true;
  for (std::size_t x = 0; x < n; ++x) centered = centered && lim[1u << x].test(x);
  // A ⊆ B means λ_B ⊆ λ_A, so lim λ_B ⊆ lim λ_A.
  bool monotone = true;
  for (std::uint32_t b = 1; b < top && monotone; ++b)
    for (std::uint32_t a = b; a; a = (a - 1) & b)
      if (!lim[b].is_subset_of(lim[a])) { monotone = false; break; }
  k.is_convergence = centered && monotone;

  bool limit = k.is_convergence;
  for (std::uint32_t a = 1; a < top && limit; ++a)
    for (std::uint32_t b = a; b < top; ++b)
      if (!(lim[a] & lim[b]).is_subset_of(lim[a | b])) { limit = false; break; }
  k.is_limit = limit;

  bool pst = k.is_limit;
  for (std::uint32_t a = 1; a < top && pst; ++a) {
    Subset meet = full_subset(n);
    for (std::size_t x = 0; x < n; ++x)
      if (a & (1u << x)) meet &= lim[1u << x];
    pst = (meet == lim[a]);
  }
  k.is_pseudotopological = pst;
  return k;
}

StructureKind classify(const Space& s) {
  if (s.kind() == Space::Kind::PointLimit) {
    // Centering is enforced at construction and the intersection rule gives
    // monotonicity, the limit axiom and the pseudotopological identity.
    return {true, true, true};
  }
  return classify_exhaustive(s);
}

Space pseudotopological_modification(const Space& s) {
  std::vector<Subset> l;
  l.reserve(s.size());
  for (Point y = 0; y < s.size(); ++y) l.push_back(s.point_limits(y));
  return Space::point_limit(s.labels(), std::move(l));
}

Space to_subset_limit(const Space& s) {
  const std::size_t n = s.size();
  if (n > Space::kMaxSubsetLimitPoints)
    throw KindMismatch("subset-limit spaces are limited to 16 points");
  std::vector<Subset> by_mask(std::size_t{1} << n, Subset(n));
  for (std::uint32_t m = 1; m < (1u << n); ++m) by_mask[m] = s.filter_limits(from_mask(n, m));
  return Space::subset_limit(s.labels(), std::move(by_mask));
}

Subset closure_of(const Space& s, const Subset& a) {
  Subset out(s.size());
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) out |= s.point_limits(i);
  return out;
}

PrincipalFilter neighborhood_filter(const Space& s, Point x) {
  return PrincipalFilter(s.size(), s.neighborhood(x));
}

// ---------------------------------------------------------------------------

bool is_continuous_assignment(const Space& dom, const Space& cod, const Assignment& a) {
  for (Point y = 0; y < dom.size(); ++y) {
    const Subset& target = cod.point_limits(a[y]);
    for (Point x : dom.point_limit_list(y))
      if (!target.test(a[x])) return false;
  }
  return true;
}

ContinuityCertificate check_continuity(const Space& dom, const Space& cod, const Assignment& a) {
  ContinuityCertificate c;
  const std::size_t n = dom.size();
  if (dom.kind() == Space::Kind::PointLimit) {
    for (Point x = 0; x < n; ++x)
      for (Point y : dom.neighborhood_list(x))
        if (!cod.converges(a[y], a[x])) {
          c.continuous = false;
          c.violating_generator = make_subset(n, {y});
          c.violating_limit = x;
          return c;
        }
    if (cod.kind() == Space::Kind::PointLimit) return c;
    // λ_A → x with f(A) = B exactly when B ⊆ f(V(x)).
    for (Point x = 0; x < n; ++x) {
      Subset reach(cod.size());
      for (Point y : dom.neighborhood_list(x)) reach.set(a[y]);
      const std::uint32_t r = to_mask(reach);
      for (std::uint32_t b = r; b != 0; b = (b - 1) & r) {
        if (cod.filter_limits(from_mask(cod.size(), b)).test(a[x])) continue;
        c.continuous = false;
        c.violating_generator = Subset(n);
        for (Point y : dom.neighborhood_list(x))
          if ((b >> a[y]) & 1u) c.violating_generator.set(y);
        c.violating_limit = x;
        return c;
      }
    }
    return c;
  }
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    Subset gen = from_mask(n, m);
    Subset image(cod.size());
    for (auto i = gen.find_first(); i != Subset::npos; i = gen.find_next(i)) image.set(a[i]);
    const Subset target = cod.filter_limits(image);
    const Subset lim = dom.filter_limits(gen);
    for (auto x = lim.find_first(); x != Subset::npos; x = lim.find_next(x))
      if (!target.test(a[x])) {
        c.continuous = false;
        c.violating_generator = gen;
        c.violating_limit = static_cast<Point>(x);
        return c;
      }
  }
  return c;
}

SpaceMap::SpaceMap(Space domain, Space codomain, Assignment assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)), a_(std::move(assignment)) {
  if (a_.size() != dom_.size()) throw UnknownPoint("assignment is not total on the domain");
  for (Point v : a_)
    if (v >= cod_.size()) throw UnknownPoint("assignment leaves the codomain");
  cert_ = check_continuity(dom_, cod_, a_);
}

ContinuityCertificate is_continuous(const SpaceMap& f) { return f.certificate(); }

SpaceMap identity_map(const Space& x) {
  Assignment a(x.size());
  for (Point i = 0; i < x.size(); ++i) a[i] = i;
  return SpaceMap(x, x, std::move(a));
}

SpaceMap constant_map(const Space& x, const Space& y, Point value) {
  return SpaceMap(x, y, Assignment(x.size(), value));
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.codomain() == g.domain())) throw DomainMismatch("compose: codomain/domain differ");
  Assignment a(f.domain().size());
  for (Point x = 0; x < a.size(); ++x) a[x] = g(f(x));
  return SpaceMap(f.domain(), g.codomain(), std::move(a));
}

SpaceMap map_from_labels(const Space& dom, const Space& cod,
                         const std::vector<std::pair<std::string, std::string>>& pairs) {
  Assignment a(dom.size(), static_cast<Point>(-1));
  for (const auto& [from, to] : pairs) a[dom.index_of(from)] = cod.index_of(to);
  for (Point x = 0; x < a.size(); ++x)
    if (a[x] == static_cast<Point>(-1))
      throw UnknownPoint("no image given for '" + dom.label(x) + "'");
  return SpaceMap(dom, cod, std::move(a));
}

bool is_injective(const Assignment& a, std::size_t codomain_size) {
  Subset seen(codomain_size);
  for (Point v : a) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

bool is_embedding(const SpaceMap& f) {
  if (!f.continuous() || !is_injective(f.assignment(), f.codomain().size())) return false;
  const Space& d = f.domain();
  for (Point y = 0; y < d.size(); ++y)
    for (Point x = 0; x < d.size(); ++x)
      if (d.converges(y, x) != f.codomain().converges(f(y), f(x))) return false;
  return true;
}

bool is_isomorphism(const SpaceMap& f) {
  return f.domain().size() == f.codomain().size() && is_embedding(f);
}

}  // namespace pstop
