#pragma once

#include "conic36/geometry.hpp"
#include "conic36/perm.hpp"
#include "conic36/perm_group.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace conic36 {

/// Semilinear map of PG(1,8): t -> (a*t^(2^e) + b) / (c*t^(2^e) + d) on the
/// conic parameter, with the Moebius quadruple normalized so its first
/// nonzero entry is 1. Parameter values are 0..7 for field elements and 8
/// for the point at infinity.
struct SemilinearMap {
  std::array<Fe, 4> moebius{1, 0, 0, 1}; // (a, b, c, d), ad - bc != 0
  int frobExp = 0;                       // e in {0, 1, 2}

  static SemilinearMap make(Fe a, Fe b, Fe c, Fe d, int e);
  int applyParam(int t) const;
  /// (*this) o other: apply other first. The Frobenius part twists the
  /// Moebius part of `other`.
  SemilinearMap after(const SemilinearMap& other) const;
  /// Induced permutation of the 9 conic parameters, tagged with frobExp.
  Perm paramPerm() const;
};

/// One labeled orbit of a subgroup acting on the 36 secants.
struct LabeledOrbit {
  std::string label;        // e.g. "(P P^g)^{C_G(gamma)}"
  std::vector<int> members; // sorted secant slots
};

struct UredOrbitReport {
  std::vector<LabeledOrbit> cgGammaOrbits;
  std::vector<LabeledOrbit> cgEtaOrbits;
  std::vector<LabeledOrbit> kOrbits;
};

/// The group G isomorphic to PGammaL(2,8) acting on the 36 secants, with
/// the distinguished elements and subgroups located deterministically:
/// gamma is the pure Frobenius map; eta is the least order-3 element of
/// C_G(gamma) inside the derived subgroup; sigma is the least involution
/// of C_G(gamma). CGeta is the order-6 subgroup C_G(gamma) ∩ G' = <eta,
/// sigma>; it is the "C_G(eta)" of the orbit reports.
struct ReeModel {
  ConicModel conic;
  PermGroup G;      // degree 36
  PermGroup Gder;   // derived subgroup, order 504
  PermGroup Gconic; // the equivalent degree-9 action on conic points
  Perm eta, gamma, sigma;                // degree 36
  Perm etaConic, gammaConic, sigmaConic; // degree 9
  PermGroup K;       // <gamma, sigma>, cyclic of order 6
  PermGroup CGgamma; // centralizer of gamma, order 18
  PermGroup CGeta;   // C_G(gamma) ∩ G' = <eta, sigma>, order 6
  int F = -1, W = -1, Wsigma = -1, P = -1; // conic-point indices
  std::array<std::vector<int>, 4> baseBlocks; // B1..B4 as sorted secant slots

  static ReeModel build(const ConicModel& conic);

  /// Degree-9 conic action of a member of G.
  Perm conicPartOf(const Perm& g36) const;
  /// Human-readable name of a conic-point index: F, W, W^s, P, P^g, ...
  std::string paramName(int param) const;
  /// Label "(X Y)^{group}" for the secant orbit with this representative.
  std::string secantName(int slot) const;

  UredOrbitReport uredOrbits() const;

private:
  std::unordered_map<std::string, size_t> liftIndex_;
  std::vector<Perm> conicElems_; // parallel to the lifted element order
  std::array<std::string, 9> paramNames_;
};

} // namespace conic36
