#include "pstop/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace pstop {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

void subset_to_words(const Subset& s, std::uint64_t* out, std::size_t words) {
  std::fill(out, out + words, 0);
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    out[i / 64] |= (std::uint64_t{1} << (i % 64));
}

std::size_t popcount(const std::uint64_t* w, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

void budget_exceeded(std::uint64_t budget) {
  throw SearchSpaceTooLarge("node budget of " + std::to_string(budget) + " exceeded");
}

}  // namespace

MapSearch::MapSearch(const Space& dom, const Space& cod)
    : dom_(dom), cod_(cod), words_(word_count(cod.size())) {
  const std::size_t n = dom.size(), m = cod.size();
  initial_.assign(n * words_, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < m; ++z) initial_[x * words_ + z / 64] |= std::uint64_t{1} << (z % 64);
  cod_limits_.assign(m * words_, 0);
  cod_nbhd_.assign(m * words_, 0);
  for (Point z = 0; z < m; ++z) {
    subset_to_words(cod.point_limits(z), &cod_limits_[z * words_], words_);
    subset_to_words(cod.neighborhood(z), &cod_nbhd_[z * words_], words_);
  }
}

void MapSearch::restrict_to(Point x, const Subset& allowed) {
  std::vector<std::uint64_t> w(words_);
  subset_to_words(allowed, w.data(), words_);
  for (std::size_t i = 0; i < words_; ++i) initial_[x * words_ + i] &= w[i];
}

void MapSearch::fix(Point x, Point value) {
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t keep = (i == value / 64) ? (std::uint64_t{1} << (value % 64)) : 0;
    initial_[x * words_ + i] &= keep;
  }
}

bool MapSearch::recurse(std::vector<std::uint64_t>& cand, Assignment& a, std::size_t assigned,
                        const std::function<bool(const Assignment&)>& visit,
                        std::uint64_t& count) {
  const std::size_t n = dom_.size();
  if (assigned == n) {
    ++count;
    return visit(a);
  }
  // Fewest candidates first.
  std::size_t best = n, best_count = std::numeric_limits<std::size_t>::max();
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x] != static_cast<Point>(-1)) continue;
    std::size_t c = popcount(&cand[x * words_], words_);
    if (c < best_count) {
      best = x;
      best_count = c;
      if (c <= 1) break;
    }
  }
  if (best_count == 0) return true;
  const Point x = static_cast<Point>(best);
  std::vector<std::uint64_t> saved(cand);
  for (std::size_t wi = 0; wi < words_; ++wi) {
    std::uint64_t bits = saved[x * words_ + wi];
    while (bits) {
      const Point z = static_cast<Point>(wi * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      if (++nodes_ > budget_) budget_exceeded(budget_);
      cand = saved;
      bool dead = false;
      const std::uint64_t* nb = &cod_nbhd_[z * words_];
      const std::uint64_t* lim = &cod_limits_[z * words_];
      for (Point y : dom_.neighborhood_list(x)) {
        if (a[y] != static_cast<Point>(-1) || y == x) continue;
        std::uint64_t any = 0;
        for (std::size_t i = 0; i < words_; ++i) any |= (cand[y * words_ + i] &= nb[i]);
        if (!any) { dead = true; break; }
      }
      if (dead) continue;
      for (Point y : dom_.point_limit_list(x)) {
        if (a[y] != static_cast<Point>(-1) || y == x) continue;
        std::uint64_t any = 0;
        for (std::size_t i = 0; i < words_; ++i) any |= (cand[y * words_ + i] &= lim[i]);
        if (!any) { dead = true; break; }
      }
      if (dead) continue;
      a[x] = z;
      const bool go_on = recurse(cand, a, assigned + 1, visit, count);
      a[x] = static_cast<Point>(-1);
      if (!go_on) return false;
    }
  }
  return true;
}

std::uint64_t MapSearch::for_each(const std::function<bool(const Assignment&)>& visit,
                                  std::uint64_t node_budget) {
  budget_ = node_budget;
  nodes_ = 0;
  const std::size_t n = dom_.size();
  std::uint64_t count = 0;
  if (n == 0) {
    Assignment empty;
    visit(empty);
    return 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (popcount(&initial_[x * words_], words_) == 0) return 0;
  std::vector<std::uint64_t> cand(initial_);
  Assignment a(n, static_cast<Point>(-1));
  recurse(cand, a, 0, visit, count);
  return count;
}

std::optional<Assignment> MapSearch::first(std::uint64_t node_budget) {
  std::optional<Assignment> out;
  for_each([&](const Assignment& a) { out = a; return false; }, node_budget);
  return out;
}

std::vector<Assignment> MapSearch::all(std::uint64_t node_budget) {
  std::vector<Assignment> out;
  for_each([&](const Assignment& a) { out.push_back(a); return true; }, node_budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::vector<Assignment> continuous_maps(const Space& dom, const Space& cod,
                                        std::uint64_t cap) {
  const std::uint64_t size = saturating_power(cod.size(), dom.size());
  if (size > cap)
    throw ExponentialTooLarge(std::to_string(cod.size()) + "^" + std::to_string(dom.size()) +
                              " exceeds the cap of " + std::to_string(cap));
  MapSearch s(dom, cod);
  return s.all();
}

std::uint64_t count_continuous_maps(const Space& dom, const Space& cod,
                                    std::uint64_t node_budget) {
  MapSearch s(dom, cod);
  return s.for_each([](const Assignment&) { return true; }, node_budget);
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const Space& a;
  const Space& b;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Subset> cand;
  Assignment map;
  Subset used;

  bool run(std::size_t assigned) {
    const std::size_t n = a.size();
    if (assigned == n) return true;
    std::size_t best = n, best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t x = 0; x < n; ++x) {
      if (map[x] != static_cast<Point>(-1)) continue;
      std::size_t c = (cand[x] - used).count();
      if (c < best_count) { best = x; best_count = c; }
    }
    if (best_count == 0) return false;
    const Point x = static_cast<Point>(best);
    const Subset options = cand[x] - used;
    const std::vector<Subset> saved = cand;
    for (auto zi = options.find_first(); zi != Subset::npos; zi = options.find_next(zi)) {
      const Point z = static_cast<Point>(zi);
      if (++nodes > budget) budget_exceeded(budget);
      cand = saved;
      bool dead = false;
      for (Point y = 0; y < n && !dead; ++y) {
        if (map[y] != static_cast<Point>(-1) || y == x) continue;
        // ẋ → y  iff  ż → h(y);  ẏ → x  iff  h(y)˙ → z.
        Subset keep = a.converges(x, y) ? b.point_limits(z) : ~b.point_limits(z);
        keep &= a.converges(y, x) ? b.neighborhood(z) : ~b.neighborhood(z);
        cand[y] &= keep;
        if ((cand[y] - used).none()) dead = true;
      }
      if (dead) continue;
      map[x] = z;
      used.set(z);
      if (run(assigned + 1)) return true;
      used.reset(z);
      map[x] = static_cast<Point>(-1);
    }
    return false;
  }
};

}  // namespace

std::optional<Assignment> find_isomorphism(const Space& a, const Space& b,
                                           const std::vector<std::pair<Point, Point>>& fixed,
                                           std::uint64_t node_budget) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (a.kind() != Space::Kind::PointLimit || b.kind() != Space::Kind::PointLimit)
    throw KindMismatch("isomorphism search needs point-limit spaces");
  IsoSearch s{a, b, node_budget, 0, {}, {}, {}};
  s.cand.assign(n, full_subset(n));
  s.map.assign(n, static_cast<Point>(-1));
  s.used = Subset(n);
  // Degree signatures are isomorphism invariants.
  for (Point x = 0; x < n; ++x)
    for (Point z = 0; z < n; ++z)
      if (a.point_limits(x).count() != b.point_limits(z).count() ||
          a.neighborhood(x).count() != b.neighborhood(z).count())
        s.cand[x].reset(z);
  for (auto [x, z] : fixed) {
    Subset only = make_subset(n, {z});
    s.cand[x] &= only;
  }
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

}  // namespace pstop
