#include "conic36/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace conic36 {

namespace {

struct ImageHash {
  size_t operator()(const std::vector<std::uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

PermGroup PermGroup::close(std::vector<Perm> generators) {
  if (generators.empty())
    throw std::invalid_argument("closure needs at least one generator");
  const int deg = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != deg)
      throw std::invalid_argument("generators have mismatched degrees");

  // Tagged closure: when all generators carry tags, the identity gets tag 0
  // and products accumulate tags mod 3; a revisit with a different tag is a
  // construction bug.
  bool tagged = std::all_of(generators.begin(), generators.end(),
                            [](const Perm& g) { return g.tag() >= 0; });

  std::unordered_set<std::vector<std::uint16_t>, ImageHash> seen;
  std::vector<Perm> elems;
  std::deque<size_t> frontier;
  std::map<std::vector<std::uint16_t>, int> tagOf;

  Perm id = Perm::identity(deg, tagged ? 0 : -1);
  seen.insert(id.images());
  elems.push_back(id);
  frontier.push_back(0);
  if (tagged) tagOf[id.images()] = 0;

  while (!frontier.empty()) {
    size_t cur = frontier.front();
    frontier.pop_front();
    Perm p = elems[cur];
    for (const auto& g : generators) {
      Perm q = g.after(p);
      if (seen.insert(q.images()).second) {
        elems.push_back(q);
        frontier.push_back(elems.size() - 1);
        if (tagged) tagOf[q.images()] = q.tag();
      } else if (tagged) {
        auto it = tagOf.find(q.images());
        if (it != tagOf.end() && it->second != q.tag())
          throw std::runtime_error("tag mismatch during closure");
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  PermGroup g;
  g.degree_ = deg;
  g.generators_ = std::move(generators);
  g.elements_ = std::move(elems);
  return g;
}

PermGroup PermGroup::fromElements(std::vector<Perm> elements) {
  if (elements.empty())
    throw std::invalid_argument("a group needs at least the identity");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int deg = elements[0].degree();

  // Greedy generating set: add elements until the closure has full size.
  std::vector<Perm> gens;
  std::vector<Perm> closed;
  for (const auto& e : elements) {
    if (e.isIdentity()) continue;
    if (closed.size() == elements.size()) break;
    if (!gens.empty() && std::binary_search(closed.begin(), closed.end(), e)) continue;
    gens.push_back(e);
    closed = close(gens).elements();
  }
  if (gens.empty()) {
    gens.push_back(Perm::identity(deg, elements[0].tag() >= 0 ? 0 : -1));
    closed = elements;
  }
  if (closed.size() != elements.size() ||
      !std::equal(closed.begin(), closed.end(), elements.begin()))
    throw std::invalid_argument("element list is not a closed group");

  PermGroup g;
  g.degree_ = deg;
  g.generators_ = std::move(gens);
  g.elements_ = std::move(elements);
  return g;
}

PermGroup PermGroup::trivial(int degree) {
  return close({Perm::identity(degree)});
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::isSubgroupOf(const PermGroup& g) const {
  for (const auto& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

bool PermGroup::isTransitive() const {
  return static_cast<int>(orbitOf(*this, 0).size()) == degree_;
}

bool PermGroup::isAbelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a.after(b) != b.after(a)) return false;
  return true;
}

bool PermGroup::isCyclic() const {
  const auto n = order();
  for (const auto& e : elements_)
    if (static_cast<std::uint64_t>(e.order()) == n) return true;
  return false;
}

std::map<int, int> PermGroup::elementOrderStats() const {
  std::map<int, int> stats;
  for (const auto& e : elements_) ++stats[e.order()];
  return stats;
}

PermGroup PermGroup::center() const {
  std::vector<Perm> z;
  for (const auto& e : elements_) {
    bool central = true;
    for (const auto& g : generators_)
      if (e.after(g) != g.after(e)) {
        central = false;
        break;
      }
    if (central) z.push_back(e);
  }
  return fromElements(std::move(z));
}

std::vector<int> orbitOf(const PermGroup& g, int x) {
  std::vector<bool> in(static_cast<size_t>(g.degree()), false);
  std::vector<int> orb{x};
  in[static_cast<size_t>(x)] = true;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const auto& gen : g.generators()) {
      int y = gen[orb[i]];
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> orbits(const PermGroup& g, const std::vector<int>& domain) {
  std::set<int> dom(domain.begin(), domain.end());
  std::vector<std::vector<int>> parts;
  std::set<int> placed;
  for (int x : dom) {
    if (placed.count(x)) continue;
    std::vector<int> orb = orbitOf(g, x);
    for (int y : orb) {
      if (!dom.count(y))
        throw std::invalid_argument("domain subset is not invariant under the group");
      placed.insert(y);
    }
    parts.push_back(std::move(orb));
  }
  return parts;
}

PermGroup stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw std::invalid_argument("point out of range");
  std::vector<Perm> fix;
  for (const auto& e : g.elements())
    if (e[x] == x) fix.push_back(e);
  return PermGroup::fromElements(std::move(fix));
}

PermGroup setStabilizer(const PermGroup& g, const std::vector<int>& block) {
  std::vector<bool> in(static_cast<size_t>(g.degree()), false);
  for (int x : block) {
    if (x < 0 || x >= g.degree()) throw std::invalid_argument("block point out of range");
    in[static_cast<size_t>(x)] = true;
  }
  std::vector<Perm> fix;
  for (const auto& e : g.elements()) {
    bool ok = true;
    for (int x : block)
      if (!in[e[x]]) {
        ok = false;
        break;
      }
    if (ok) fix.push_back(e);
  }
  return PermGroup::fromElements(std::move(fix));
}

PermGroup centralizer(const PermGroup& g, const Perm& p) {
  if (!g.contains(p))
    throw std::invalid_argument("centralizer argument is not a group member");
  std::vector<Perm> cen;
  for (const auto& e : g.elements())
    if (e.after(p) == p.after(e)) cen.push_back(e);
  return PermGroup::fromElements(std::move(cen));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.isSubgroupOf(g))
    throw std::invalid_argument("normalizer argument is not a subgroup");
  std::vector<Perm> nor;
  for (const auto& e : g.elements()) {
    bool ok = true;
    for (const auto& k : h.generators())
      if (!h.contains(k.conjugatedBy(e))) {
        ok = false;
        break;
      }
    if (ok) nor.push_back(e);
  }
  return PermGroup::fromElements(std::move(nor));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

PrimitivityResult isPrimitive(const PermGroup& g) {
  if (!g.isTransitive())
    throw std::invalid_argument("primitivity is defined for transitive groups only");
  const int n = g.degree();
  if (n == 1) return {true, {}};

  for (int i = 1; i < n; ++i) {
    // Smallest G-invariant partition in which 0 and i share a block.
    UnionFind uf(n);
    uf.unite(0, i);
    std::deque<std::pair<int, int>> queue{{0, i}};
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (const auto& gen : g.generators()) {
        int ga = gen[a], gb = gen[b];
        if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
      }
    }
    std::vector<std::vector<int>> classes(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) classes[static_cast<size_t>(uf.find(x))].push_back(x);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const std::vector<int>& c) { return c.empty(); }),
                  classes.end());
    size_t blockSize = 0;
    for (const auto& c : classes)
      if (std::find(c.begin(), c.end(), 0) != c.end()) blockSize = c.size();
    if (blockSize < static_cast<size_t>(n))
      return {false, classes};
  }
  return {true, {}};
}

std::vector<Perm> conjugacyClassesOfPrimeOrder(const PermGroup& g, int p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be a prime");
  if (g.order() % static_cast<std::uint64_t>(p) != 0)
    throw std::invalid_argument("p does not divide the group order");

  // Subgroups of order p, each keyed by its sorted element list.
  std::set<std::vector<Perm>> subgroups;
  for (const auto& e : g.elements()) {
    if (e.order() != p) continue;
    std::vector<Perm> sub{Perm::identity(g.degree())};
    Perm q = e;
    while (!q.isIdentity()) {
      sub.push_back(q);
      q = e.after(q);
    }
    std::sort(sub.begin(), sub.end());
    subgroups.insert(std::move(sub));
  }

  std::vector<Perm> reps;
  std::set<std::vector<Perm>> classified;
  for (const auto& sub : subgroups) {
    if (classified.count(sub)) continue;
    // The identity is lexicographically least in any subgroup, so index 1
    // holds the least nontrivial element.
    Perm best = sub[1];
    for (const auto& x : g.elements()) {
      std::vector<Perm> conj;
      conj.reserve(sub.size());
      for (const auto& s : sub) conj.push_back(s.conjugatedBy(x));
      std::sort(conj.begin(), conj.end());
      if (conj[1] < best) best = conj[1];
      classified.insert(std::move(conj));
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

} // namespace conic36
