#pragma once

#include "conic36/perm_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conic36 {

struct DesignParams {
  long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
  bool operator==(const DesignParams&) const = default;
};

/// Point set [0, v) plus a list of blocks. Blocks are stored sorted, and
/// the block list itself is sorted; duplicates are kept as given so that
/// verification can reject them explicitly.
struct Design {
  int v = 0;
  std::vector<std::vector<int>> blocks;
  std::optional<DesignParams> params;

  static Design fromBlocks(int v, std::vector<std::vector<int>> blocks);
};

/// Blocks = the G-orbit of `base` under the setwise action.
Design orbitDesign(const PermGroup& g, const std::vector<int>& base);

struct Verify2Result {
  bool ok = false;
  DesignParams params{};
  std::string reason;
  std::optional<std::pair<int, int>> witnessPair; // non-constant lambda
  int witnessCount = 0;
  std::optional<int> witnessPoint; // non-constant replication
};

/// Exhaustive pair-coverage check; fills d.params on success.
Verify2Result verify2Design(Design& d);

/// True iff g acts transitively on the flags of d. Throws when some
/// generator does not preserve the block set, or on a degree mismatch.
bool verifyFlagTransitive(const PermGroup& g, const Design& d);

struct TacticalRecord {
  std::vector<int> pointOrbit;  // a Gx-orbit not containing x
  std::vector<int> blockOrbit;  // indices into d.blocks, all incident with x
  int vPrime = 0, bPrime = 0, kPrime = 0, rPrime = 0;
};

/// Decomposition records for each (point orbit, orbit of blocks through x)
/// pair; the constancy of the intersection numbers is asserted.
std::vector<TacticalRecord> tacticalDecomposition(const PermGroup& gx, const Design& d, int x);

/// Plain-text export: "v b k" then one block per line.
std::string exportText(const Design& d);
/// Structured export with provenance (base block and group tag).
std::string exportJson(const Design& d, const std::string& groupTag,
                       const std::vector<int>& baseBlock);

} // namespace conic36
