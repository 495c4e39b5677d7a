#include "conic36/design.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conic36 {

Design Design::fromBlocks(int v, std::vector<std::vector<int>> blocks) {
  if (v < 1) throw std::invalid_argument("design needs at least one point");
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int x : b)
      if (x < 0 || x >= v) throw std::invalid_argument("block point out of range");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("block contains a repeated point");
  }
  std::sort(blocks.begin(), blocks.end());
  Design d;
  d.v = v;
  d.blocks = std::move(blocks);
  return d;
}

Design orbitDesign(const PermGroup& g, const std::vector<int>& base) {
  std::vector<int> seed = base;
  std::sort(seed.begin(), seed.end());
  for (int x : seed)
    if (x < 0 || x >= g.degree()) throw std::invalid_argument("base block point out of range");

  std::set<std::vector<int>> blocks{seed};
  std::vector<std::vector<int>> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& blk : frontier)
      for (const auto& gen : g.generators()) {
        std::vector<int> img;
        img.reserve(blk.size());
        for (int x : blk) img.push_back(gen[x]);
        std::sort(img.begin(), img.end());
        if (blocks.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return Design::fromBlocks(g.degree(), {blocks.begin(), blocks.end()});
}

Verify2Result verify2Design(Design& d) {
  Verify2Result res;
  if (d.blocks.empty()) {
    res.reason = "no blocks";
    return res;
  }
  if (std::adjacent_find(d.blocks.begin(), d.blocks.end()) != d.blocks.end()) {
    res.reason = "repeated block";
    return res;
  }
  const size_t k = d.blocks.front().size();
  for (const auto& b : d.blocks)
    if (b.size() != k) {
      res.reason = "blocks of unequal size";
      return res;
    }

  // Pair coverage over all v(v-1)/2 pairs, plus per-point replication.
  std::vector<std::vector<long long>> pairCount(
      static_cast<size_t>(d.v), std::vector<long long>(static_cast<size_t>(d.v), 0));
  std::vector<long long> repl(static_cast<size_t>(d.v), 0);
  for (const auto& b : d.blocks) {
    for (size_t i = 0; i < b.size(); ++i) {
      ++repl[static_cast<size_t>(b[i])];
      for (size_t j = i + 1; j < b.size(); ++j)
        ++pairCount[static_cast<size_t>(b[i])][static_cast<size_t>(b[j])];
    }
  }
  const long long lambda = pairCount[0][1];
  for (int x = 0; x < d.v; ++x)
    for (int y = x + 1; y < d.v; ++y)
      if (pairCount[static_cast<size_t>(x)][static_cast<size_t>(y)] != lambda) {
        res.reason = "pair coverage is not constant";
        res.witnessPair = {x, y};
        res.witnessCount = static_cast<int>(pairCount[static_cast<size_t>(x)][static_cast<size_t>(y)]);
        return res;
      }
  const long long r = repl[0];
  for (int x = 0; x < d.v; ++x)
    if (repl[static_cast<size_t>(x)] != r) {
      res.reason = "replication number is not constant";
      res.witnessPoint = x;
      res.witnessCount = static_cast<int>(repl[static_cast<size_t>(x)]);
      return res;
    }
  if (lambda == 0) {
    res.reason = "pair coverage is not constant";
    res.witnessPair = {0, 1};
    res.witnessCount = 0;
    return res;
  }

  DesignParams p;
  p.v = d.v;
  p.b = static_cast<long long>(d.blocks.size());
  p.k = static_cast<long long>(k);
  p.r = r;
  p.lambda = lambda;
  if (p.b * p.k != p.v * p.r) {
    res.reason = "bk != vr";
    return res;
  }
  if (p.r * (p.k - 1) != p.lambda * (p.v - 1)) {
    res.reason = "r(k-1) != lambda(v-1)";
    return res;
  }
  d.params = p;
  res.ok = true;
  res.params = p;
  return res;
}

namespace {

// Index of each block for orbit computations on blocks.
std::map<std::vector<int>, int> blockIndex(const Design& d) {
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < d.blocks.size(); ++i) idx[d.blocks[i]] = static_cast<int>(i);
  return idx;
}

std::vector<int> applyToBlock(const Perm& g, const std::vector<int>& blk) {
  std::vector<int> img;
  img.reserve(blk.size());
  for (int x : blk) img.push_back(g[x]);
  std::sort(img.begin(), img.end());
  return img;
}

void requireInvariance(const PermGroup& g, const Design& d,
                       const std::map<std::vector<int>, int>& idx) {
  for (const auto& gen : g.generators())
    for (const auto& blk : d.blocks)
      if (!idx.count(applyToBlock(gen, blk)))
        throw std::invalid_argument("group does not preserve the block set");
}

} // namespace

bool verifyFlagTransitive(const PermGroup& g, const Design& d) {
  if (g.degree() != d.v)
    throw std::invalid_argument("group degree does not match the point count");
  auto idx = blockIndex(d);
  requireInvariance(g, d, idx);

  // Flag-transitive iff block-transitive and G_B transitive on B.
  std::set<int> blockOrbit{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int bi : frontier)
      for (const auto& gen : g.generators()) {
        int bj = idx.at(applyToBlock(gen, d.blocks[static_cast<size_t>(bi)]));
        if (blockOrbit.insert(bj).second) next.push_back(bj);
      }
    frontier = std::move(next);
  }
  if (blockOrbit.size() != d.blocks.size()) return false;

  PermGroup gb = setStabilizer(g, d.blocks.front());
  return orbitOf(gb, d.blocks.front().front()).size() == d.blocks.front().size();
}

std::vector<TacticalRecord> tacticalDecomposition(const PermGroup& gx, const Design& d, int x) {
  if (gx.degree() != d.v)
    throw std::invalid_argument("group degree does not match the point count");
  for (const auto& gen : gx.generators())
    if (gen[x] != x) throw std::invalid_argument("group does not fix the base point");
  auto idx = blockIndex(d);
  requireInvariance(gx, d, idx);

  // Point orbits away from x.
  std::vector<int> rest;
  for (int y = 0; y < d.v; ++y)
    if (y != x) rest.push_back(y);
  auto pointOrbits = orbits(gx, rest);

  // Orbits on the blocks through x.
  std::vector<int> through;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    if (std::binary_search(d.blocks[i].begin(), d.blocks[i].end(), x))
      through.push_back(static_cast<int>(i));
  std::set<int> seen;
  std::vector<std::vector<int>> blockOrbits;
  for (int bi : through) {
    if (seen.count(bi)) continue;
    std::set<int> orb{bi};
    std::vector<int> frontier{bi};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int q : frontier)
        for (const auto& gen : gx.generators()) {
          int bj = idx.at(applyToBlock(gen, d.blocks[static_cast<size_t>(q)]));
          if (orb.insert(bj).second) next.push_back(bj);
        }
      frontier = std::move(next);
    }
    for (int q : orb) seen.insert(q);
    blockOrbits.emplace_back(orb.begin(), orb.end());
  }

  std::vector<TacticalRecord> records;
  for (const auto& delta : pointOrbits) {
    for (const auto& bo : blockOrbits) {
      TacticalRecord rec;
      rec.pointOrbit = delta;
      rec.blockOrbit = bo;
      rec.vPrime = static_cast<int>(delta.size());
      rec.bPrime = static_cast<int>(bo.size());
      // k' = |B ∩ delta|, constant over the block orbit.
      int kP = -1;
      for (int bi : bo) {
        int cnt = 0;
        for (int y : d.blocks[static_cast<size_t>(bi)])
          if (std::binary_search(delta.begin(), delta.end(), y)) ++cnt;
        if (kP < 0) kP = cnt;
        else if (kP != cnt)
          throw std::runtime_error("tactical decomposition: block degree not constant");
      }
      // r' = number of blocks of the orbit through y, constant over delta.
      int rP = -1;
      for (int y : delta) {
        int cnt = 0;
        for (int bi : bo)
          if (std::binary_search(d.blocks[static_cast<size_t>(bi)].begin(),
                                 d.blocks[static_cast<size_t>(bi)].end(), y))
            ++cnt;
        if (rP < 0) rP = cnt;
        else if (rP != cnt)
          throw std::runtime_error("tactical decomposition: point degree not constant");
      }
      rec.kPrime = kP;
      rec.rPrime = rP;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string exportText(const Design& d) {
  std::ostringstream os;
  const size_t k = d.blocks.empty() ? 0 : d.blocks.front().size();
  os << d.v << ' ' << d.blocks.size() << ' ' << k << '\n';
  for (const auto& b : d.blocks) {
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) os << ' ';
      os << b[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string exportJson(const Design& d, const std::string& groupTag,
                       const std::vector<int>& baseBlock) {
  nlohmann::ordered_json j;
  j["v"] = d.v;
  if (d.params) {
    j["params"] = {{"v", d.params->v},
                   {"b", d.params->b},
                   {"r", d.params->r},
                   {"k", d.params->k},
                   {"lambda", d.params->lambda}};
  }
  j["provenance"] = {{"group", groupTag}, {"base_block", baseBlock}};
  j["blocks"] = d.blocks;
  return j.dump(2) + "\n";
}

} // namespace conic36
