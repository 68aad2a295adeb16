#include "pstop/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pstop/search.hpp"

namespace pstop {

namespace {

void require_point_limit(const Space& s, const char* op) {
  if (s.kind() != Space::Kind::PointLimit)
    throw KindMismatch(std::string(op) + " needs point-limit operands");
}

std::vector<std::string> uniquify(std::vector<std::string> labels) {
  std::set<std::string> used;
  for (auto& l : labels) {
    while (!used.insert(l).second) l += "'";
  }
  return labels;
}

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
};

}  // namespace

ProductResult product(const Space& x, const Space& y) {
  require_point_limit(x, "product");
  require_point_limit(y, "product");
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b) labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
  std::vector<Subset> lim(n, Subset(n));
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b) {
      Subset& l = lim[pair_index(ny, a, b)];
      for (Point a2 : x.point_limit_list(a))
        for (Point b2 : y.point_limit_list(b)) l.set(pair_index(ny, a2, b2));
    }
  Space s = Space::point_limit(uniquify(std::move(labels)), std::move(lim));
  Assignment p0(n), p1(n);
  for (Point k = 0; k < n; ++k) {
    p0[k] = static_cast<Point>(k / ny);
    p1[k] = static_cast<Point>(k % ny);
  }
  return {s, SpaceMap(s, x, std::move(p0)), SpaceMap(s, y, std::move(p1))};
}

SpaceMap product_map(const SpaceMap& f, const SpaceMap& g) {
  const auto src = product(f.domain(), g.domain()).space;
  const auto dst = product(f.codomain(), g.codomain()).space;
  const std::size_t ny = g.domain().size(), nw = g.codomain().size();
  Assignment a(src.size());
  for (Point p = 0; p < f.domain().size(); ++p)
    for (Point q = 0; q < ny; ++q) a[pair_index(ny, p, q)] = pair_index(nw, f(p), g(q));
  return SpaceMap(src, dst, std::move(a));
}

SpaceMap pairing(const SpaceMap& f, const SpaceMap& g, const Space& xy) {
  if (!(f.domain() == g.domain())) throw DomainMismatch("pairing needs a common domain");
  const std::size_t ny = g.codomain().size();
  Assignment a(f.domain().size());
  for (Point w = 0; w < a.size(); ++w) a[w] = pair_index(ny, f(w), g(w));
  return SpaceMap(f.domain(), xy, std::move(a));
}

CoproductResult coproduct(const Space& x, const Space& y) {
  require_point_limit(x, "coproduct");
  require_point_limit(y, "coproduct");
  const std::size_t nx = x.size(), n = nx + y.size();
  std::vector<std::string> labels;
  std::vector<Subset> lim(n, Subset(n));
  for (Point a = 0; a < nx; ++a) {
    labels.push_back("0:" + x.label(a));
    for (Point b : x.point_limit_list(a)) lim[a].set(b);
  }
  for (Point a = 0; a < y.size(); ++a) {
    labels.push_back("1:" + y.label(a));
    for (Point b : y.point_limit_list(a)) lim[nx + a].set(nx + b);
  }
  Space s = Space::point_limit(std::move(labels), std::move(lim));
  Assignment in0(nx), in1(y.size());
  std::iota(in0.begin(), in0.end(), Point{0});
  std::iota(in1.begin(), in1.end(), static_cast<Point>(nx));
  return {s, SpaceMap(x, s, std::move(in0)), SpaceMap(y, s, std::move(in1))};
}

SubspaceResult subspace(const Space& x, const Subset& u) {
  if (u.size() != x.size()) throw UnknownPoint("subset is not sized to the carrier");
  const auto pts = members(u);
  const std::size_t m = pts.size();
  std::vector<Point> pos(x.size(), static_cast<Point>(-1));
  for (Point i = 0; i < m; ++i) pos[pts[i]] = i;
  std::vector<std::string> labels;
  for (Point p : pts) labels.push_back(x.label(p));
  Space s;
  if (x.kind() == Space::Kind::PointLimit) {
    std::vector<Subset> lim(m, Subset(m));
    for (Point i = 0; i < m; ++i)
      for (Point b : x.point_limit_list(pts[i]))
        if (pos[b] != static_cast<Point>(-1)) lim[i].set(pos[b]);
    s = Space::point_limit(std::move(labels), std::move(lim));
  } else {
    std::vector<Subset> by_mask(std::size_t{1} << m, Subset(m));
    for (std::uint32_t mask = 1; mask < by_mask.size(); ++mask) {
      Subset gen(x.size());
      for (Point i = 0; i < m; ++i)
        if (mask & (1u << i)) gen.set(pts[i]);
      const Subset l = x.filter_limits(gen);
      for (Point i = 0; i < m; ++i)
        if (l.test(pts[i])) by_mask[mask].set(i);
    }
    s = Space::subset_limit(std::move(labels), std::move(by_mask));
  }
  return {s, SpaceMap(s, x, Assignment(pts.begin(), pts.end()))};
}

QuotientResult quotient(const Space& x, const std::vector<std::vector<Point>>& classes) {
  require_point_limit(x, "quotient");
  const std::size_t n = x.size();
  std::vector<std::size_t> key(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw NotAPartition("empty class");
    for (Point p : classes[c]) {
      if (p >= n) throw NotAPartition("class member outside the carrier");
      if (key[p] != static_cast<std::size_t>(-1))
        throw NotAPartition("'" + x.label(p) + "' lies in two classes");
      key[p] = c;
    }
  }
  for (Point p = 0; p < n; ++p)
    if (key[p] == static_cast<std::size_t>(-1))
      throw NotAPartition("'" + x.label(p) + "' lies in no class");
  return quotient_by_key(x, key);
}

QuotientResult quotient_by_key(const Space& x, const std::vector<std::size_t>& class_of) {
  require_point_limit(x, "quotient");
  const std::size_t n = x.size();
  if (class_of.size() != n) throw NotAPartition("class map is not total");
  std::unordered_map<std::size_t, Point> renumber;
  Assignment proj(n);
  std::vector<std::vector<Point>> members_of;
  for (Point p = 0; p < n; ++p) {
    auto [it, fresh] = renumber.emplace(class_of[p], static_cast<Point>(members_of.size()));
    if (fresh) members_of.emplace_back();
    proj[p] = it->second;
    members_of[it->second].push_back(p);
  }
  const std::size_t m = members_of.size();
  std::vector<std::string> labels;
  std::vector<Subset> lim(m, Subset(m));
  for (Point c = 0; c < m; ++c) {
    const auto& mem = members_of[c];
    if (mem.size() == 1) {
      labels.push_back(x.label(mem[0]));
    } else {
      std::string l = "{";
      for (std::size_t i = 0; i < mem.size(); ++i) l += (i ? "," : "") + x.label(mem[i]);
      labels.push_back(l + "}");
    }
    for (Point a : mem)
      for (Point b : x.point_limit_list(a)) lim[c].set(proj[b]);
  }
  Space s = Space::point_limit(uniquify(std::move(labels)), std::move(lim));
  return {s, SpaceMap(x, s, std::move(proj))};
}

PushoutResult pushout(const SpaceMap& i, const SpaceMap& f) {
  if (!(i.domain() == f.domain())) throw DomainMismatch("pushout legs need a common domain");
  const Space& a = i.codomain();
  const Space& y = f.codomain();
  const auto cp = coproduct(a, y);
  const std::size_t na = a.size();
  UnionFind uf(cp.space.size());
  for (Point b = 0; b < i.domain().size(); ++b) uf.unite(i(b), na + f(b));
  std::vector<std::size_t> key(cp.space.size());
  for (std::size_t p = 0; p < key.size(); ++p) key[p] = uf.find(p);
  auto q = quotient_by_key(cp.space, key);
  const auto& cls = q.projection.assignment();
  Assignment q0(cls.begin(), cls.begin() + na), q1(cls.begin() + na, cls.end());
  return {q.space, SpaceMap(a, q.space, std::move(q0)), SpaceMap(y, q.space, std::move(q1)), cls};
}

SpaceMap pushout_induced(const PushoutResult& po, const SpaceMap& u, const SpaceMap& v) {
  if (!(u.domain() == po.q0.domain()) || !(v.domain() == po.q1.domain()) ||
      !(u.codomain() == v.codomain()))
    throw DomainMismatch("cocone does not match the pushout");
  const std::size_t na = u.domain().size();
  Assignment a(po.apex.size(), static_cast<Point>(-1));
  auto put = [&](Point cls, Point value) {
    if (a[cls] != static_cast<Point>(-1) && a[cls] != value)
      throw IncompatibleData("cocone legs disagree on the glued class '" +
                             po.apex.label(cls) + "'");
    a[cls] = value;
  };
  for (Point p = 0; p < na; ++p) put(po.class_map[p], u(p));
  for (Point p = 0; p < v.domain().size(); ++p) put(po.class_map[na + p], v(p));
  return SpaceMap(po.apex, u.codomain(), std::move(a));
}

std::size_t FunctionSpace::Hash::operator()(const Assignment& a) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point p : a) h = (h ^ p) * 1099511628211ull;
  return h;
}

FunctionSpace::FunctionSpace(Space x, Space y, std::uint64_t cap)
    : x_(std::move(x)), y_(std::move(y)) {
  require_point_limit(x_, "function space");
  require_point_limit(y_, "function space");
  maps_ = continuous_maps(x_, y_, cap);
  const std::size_t m = maps_.size();
  std::vector<std::string> labels;
  for (Point k = 0; k < m; ++k) {
    index_.emplace(maps_[k], k);
    std::string l = "<";
    for (std::size_t i = 0; i < maps_[k].size(); ++i) l += (i ? "," : "") + y_.label(maps_[k][i]);
    labels.push_back(l + ">");
  }
  // f ∈ lim ġ iff f(x) ∈ allowed_g(x) := ⋂_{y : ẏ → x} lim g(y).
  const std::size_t nx = x_.size();
  std::vector<Subset> lim(m, Subset(m));
  std::vector<Subset> allowed(nx);
  for (Point g = 0; g < m; ++g) {
    for (Point xx = 0; xx < nx; ++xx) {
      allowed[xx] = full_subset(y_.size());
      for (Point yy : x_.neighborhood_list(xx)) allowed[xx] &= y_.point_limits(maps_[g][yy]);
    }
    for (Point f = 0; f < m; ++f) {
      bool ok = true;
      for (Point xx = 0; xx < nx && ok; ++xx) ok = allowed[xx].test(maps_[f][xx]);
      if (ok) lim[g].set(f);
    }
  }
  space_ = Space::point_limit(uniquify(std::move(labels)), std::move(lim));
}

std::optional<Point> FunctionSpace::index_of(const Assignment& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FunctionSpace function_space(const Space& x, const Space& y, std::uint64_t cap) {
  return FunctionSpace(x, y, cap);
}

SpaceMap evaluation(const FunctionSpace& fs) {
  const auto prod = product(fs.space(), fs.domain()).space;
  const std::size_t nx = fs.domain().size();
  Assignment a(prod.size());
  for (Point h = 0; h < fs.maps().size(); ++h)
    for (Point x = 0; x < nx; ++x) a[pair_index(nx, h, x)] = fs.map(h)[x];
  return SpaceMap(prod, fs.codomain(), std::move(a));
}

SpaceMap curry(const SpaceMap& f, const Space& x, const Space& y, const FunctionSpace& yz) {
  if (!f.continuous()) throw NotContinuous("curry needs a continuous map");
  if (!(yz.domain() == y) || !(yz.codomain() == f.codomain()) ||
      f.domain().size() != x.size() * y.size())
    throw DomainMismatch("curry: f must map X × Y into the codomain of 𝒞(Y, Z)");
  const std::size_t ny = y.size();
  Assignment a(x.size());
  for (Point p = 0; p < x.size(); ++p) {
    Assignment slice(ny);
    for (Point q = 0; q < ny; ++q) slice[q] = f(pair_index(ny, p, q));
    auto idx = yz.index_of(slice);
    if (!idx) throw NotContinuous("slice at '" + x.label(p) + "' is not continuous");
    a[p] = *idx;
  }
  return SpaceMap(x, yz.space(), std::move(a));
}

SpaceMap uncurry(const SpaceMap& g, const FunctionSpace& yz) {
  if (!(g.codomain() == yz.space())) throw DomainMismatch("uncurry: g must map into 𝒞(Y, Z)");
  const auto prod = product(g.domain(), yz.domain()).space;
  const std::size_t ny = yz.domain().size();
  Assignment a(prod.size());
  for (Point p = 0; p < g.domain().size(); ++p)
    for (Point q = 0; q < ny; ++q) a[pair_index(ny, p, q)] = yz.map(g(p))[q];
  return SpaceMap(prod, yz.codomain(), std::move(a));
}

}  // namespace pstop
