#pragma once

#include "conic36/field.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace conic36 {

using Coord = std::array<Fe, 3>;

/// Point of PG(2,8), normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  Coord coords{};
  int index = -1;
};

/// Line of PG(2,8) as a dual triple with the same normalization.
struct ProjLine {
  Coord coeffs{};
  int index = -1;
  std::vector<int> incidentPoints; // 9 sorted point indices
};

/// The projective plane PG(2,8): 73 points, 73 lines, incidence by the
/// dot-product-zero rule. Indices are assigned by lexicographic order of
/// normalized coordinate triples, so they are stable across runs.
class Plane {
public:
  static Plane build();

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<ProjLine>& lines() const { return lines_; }

  /// Index of the point with these (not necessarily normalized) coordinates.
  int pointIndex(const Coord& raw) const;
  int lineIndex(const Coord& raw) const;

  bool incident(int point, int line) const { return inc_[point][line]; }
  /// The unique line through two distinct points.
  int lineThrough(int p, int q) const;
  /// The unique common point of two distinct lines.
  int meet(int l1, int l2) const;
  const std::vector<int>& linesThrough(int p) const { return pointLines_[p]; }

  Coord normalize(Coord c) const;

  /// One line per ProjLine: line index followed by its 9 point indices.
  std::string incidenceDump() const;

private:
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<std::array<bool, 73>> inc_;
  std::vector<std::vector<int>> pointLines_;
  std::vector<std::array<int, 73>> joinTable_;
  std::vector<std::array<int, 73>> meetTable_;
};

/// The conic x1^2 = x0*x2 with its nucleus and the classification of all
/// lines as secant / tangent / external.
///
/// Conic points are listed in parameter order: position t < 8 holds the
/// point (1, t, t^2) and position 8 holds (0, 0, 1). "Conic-point index"
/// always means a position in this list.
struct ConicModel {
  std::vector<int> conicPoints;  // 9 point ids, parameter order
  int nucleus = -1;              // point id of (0, 1, 0)
  std::vector<int> secants;      // 36 sorted line ids
  std::vector<int> tangents;     // 9 sorted line ids
  std::vector<int> externals;    // 28 sorted line ids
  std::vector<std::pair<int, int>> secantToPair; // secant slot -> conic-point index pair (i < j)

  static ConicModel build(const Plane& plane);

  /// Secant slot (0..35) through two conic points given by conic-point index.
  int secantOfParams(int i, int j) const;
  /// Secant slot through two conic points given by global point id.
  /// Throws on equal points or points not on the conic.
  int secantThrough(int p, int q) const;
  /// Conic-point index of a global point id, or -1 when not on the conic.
  int paramOfPoint(int pointId) const;
  /// Global line id of a secant slot.
  int secantLineId(int slot) const { return secants[static_cast<size_t>(slot)]; }

private:
  std::array<std::array<int, 9>, 9> pairTable_{};
  std::array<int, 73> pointToParam_{};
};

} // namespace conic36
