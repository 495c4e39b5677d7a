#pragma once

#include "conic36/perm.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace conic36 {

/// A fully materialized permutation group: all elements, sorted
/// lexicographically by image sequence. Intended for groups of order up
/// to a few thousand; every query is an exact scan or binary search.
class PermGroup {
public:
  /// Breadth-first closure of the generators. Throws on degree mismatch.
  static PermGroup close(std::vector<Perm> generators);
  /// Wrap an element list that is already a group; sorts it and extracts
  /// a small generating set greedily. Throws if the list is not closed.
  static PermGroup fromElements(std::vector<Perm> elements);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  bool isSubgroupOf(const PermGroup& g) const;

  bool isTransitive() const;
  bool isAbelian() const;
  bool isCyclic() const;
  /// Multiset of element orders, order -> count.
  std::map<int, int> elementOrderStats() const;
  PermGroup center() const;

private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// Orbit of x under the group generators.
std::vector<int> orbitOf(const PermGroup& g, int x);

/// Partition of `domain` into orbits. Throws if `domain` is not invariant.
/// Orbits are sorted internally and ordered by least member.
std::vector<std::vector<int>> orbits(const PermGroup& g, const std::vector<int>& domain);

PermGroup stabilizer(const PermGroup& g, int x);
PermGroup setStabilizer(const PermGroup& g, const std::vector<int>& block);

/// Centralizer of p in g; throws if p is not a member of g.
PermGroup centralizer(const PermGroup& g, const Perm& p);
/// Normalizer of h in g; throws if h is not a subgroup of g.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

struct PrimitivityResult {
  bool primitive = false;
  std::vector<std::vector<int>> blocks; // witness block system when imprimitive
};
/// Minimal-block test from every point pair. Throws if g is intransitive.
PrimitivityResult isPrimitive(const PermGroup& g);

/// Representatives of the conjugacy classes of subgroups of prime order p,
/// one Perm per class (the lexicographically least order-p element of the
/// class). Throws unless p is a prime dividing |g|.
std::vector<Perm> conjugacyClassesOfPrimeOrder(const PermGroup& g, int p);

} // namespace conic36
