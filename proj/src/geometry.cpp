#include "conic36/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conic36 {

namespace {

std::vector<Coord> allNormalizedTriples(const Field& f) {
  std::set<Coord> seen;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Coord raw{static_cast<Fe>(a), static_cast<Fe>(b), static_cast<Fe>(c)};
        Fe lead = raw[0] ? raw[0] : (raw[1] ? raw[1] : raw[2]);
        Fe s = f.inv(lead);
        Coord n{f.mul(raw[0], s), f.mul(raw[1], s), f.mul(raw[2], s)};
        seen.insert(n);
      }
  return std::vector<Coord>(seen.begin(), seen.end()); // set iterates in sorted order
}

Fe dot(const Field& f, const Coord& a, const Coord& b) {
  Fe s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

} // namespace

Coord Plane::normalize(Coord c) const {
  const Field& f = gf8();
  if (c[0] == 0 && c[1] == 0 && c[2] == 0)
    throw std::invalid_argument("zero triple is not projective");
  Fe lead = c[0] ? c[0] : (c[1] ? c[1] : c[2]);
  Fe s = f.inv(lead);
  return {f.mul(c[0], s), f.mul(c[1], s), f.mul(c[2], s)};
}

Plane Plane::build() {
  const Field& f = gf8();
  Plane pl;
  auto triples = allNormalizedTriples(f);
  if (triples.size() != 73) throw std::runtime_error("PG(2,8) point count mismatch");

  pl.points_.resize(73);
  pl.lines_.resize(73);
  for (int i = 0; i < 73; ++i) {
    pl.points_[i] = ProjPoint{triples[i], i};
    pl.lines_[i] = ProjLine{triples[i], i, {}};
  }

  pl.inc_.assign(73, {});
  pl.pointLines_.assign(73, {});
  for (int l = 0; l < 73; ++l) {
    for (int p = 0; p < 73; ++p) {
      if (dot(f, pl.lines_[l].coeffs, pl.points_[p].coords) == 0) {
        pl.inc_[p][l] = true;
        pl.lines_[l].incidentPoints.push_back(p);
        pl.pointLines_[p].push_back(l);
      }
    }
    if (pl.lines_[l].incidentPoints.size() != 9)
      throw std::runtime_error("line does not have 9 points");
  }
  for (int p = 0; p < 73; ++p)
    if (pl.pointLines_[p].size() != 9)
      throw std::runtime_error("point does not lie on 9 lines");

  pl.joinTable_.assign(73, {});
  pl.meetTable_.assign(73, {});
  for (auto& row : pl.joinTable_) row.fill(-1);
  for (auto& row : pl.meetTable_) row.fill(-1);
  for (int l = 0; l < 73; ++l) {
    const auto& pts = pl.lines_[l].incidentPoints;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        pl.joinTable_[pts[i]][pts[j]] = l;
        pl.joinTable_[pts[j]][pts[i]] = l;
      }
  }
  for (int p = 0; p < 73; ++p) {
    const auto& lns = pl.pointLines_[p];
    for (size_t i = 0; i < lns.size(); ++i)
      for (size_t j = i + 1; j < lns.size(); ++j) {
        pl.meetTable_[lns[i]][lns[j]] = p;
        pl.meetTable_[lns[j]][lns[i]] = p;
      }
  }
  return pl;
}

int Plane::pointIndex(const Coord& raw) const {
  Coord n = normalize(raw);
  auto it = std::lower_bound(points_.begin(), points_.end(), n,
                             [](const ProjPoint& p, const Coord& c) { return p.coords < c; });
  if (it == points_.end() || it->coords != n)
    throw std::runtime_error("point lookup failed");
  return it->index;
}

int Plane::lineIndex(const Coord& raw) const {
  Coord n = normalize(raw);
  auto it = std::lower_bound(lines_.begin(), lines_.end(), n,
                             [](const ProjLine& l, const Coord& c) { return l.coeffs < c; });
  if (it == lines_.end() || it->coeffs != n)
    throw std::runtime_error("line lookup failed");
  return it->index;
}

int Plane::lineThrough(int p, int q) const {
  if (p == q) throw std::invalid_argument("lineThrough needs distinct points");
  return joinTable_[p][q];
}

int Plane::meet(int l1, int l2) const {
  if (l1 == l2) throw std::invalid_argument("meet needs distinct lines");
  return meetTable_[l1][l2];
}

std::string Plane::incidenceDump() const {
  std::ostringstream os;
  for (const auto& l : lines_) {
    os << l.index;
    for (int p : l.incidentPoints) os << ' ' << p;
    os << '\n';
  }
  return os.str();
}

ConicModel ConicModel::build(const Plane& plane) {
  const Field& f = gf8();
  ConicModel c;
  c.conicPoints.reserve(9);
  for (int t = 0; t < 8; ++t) {
    Fe ft = static_cast<Fe>(t);
    c.conicPoints.push_back(plane.pointIndex({1, ft, f.mul(ft, ft)}));
  }
  c.conicPoints.push_back(plane.pointIndex({0, 0, 1}));
  c.nucleus = plane.pointIndex({0, 1, 0});

  c.pointToParam_.fill(-1);
  for (int i = 0; i < 9; ++i) c.pointToParam_[c.conicPoints[i]] = i;

  for (const auto& line : plane.lines()) {
    int hits = 0;
    for (int p : line.incidentPoints)
      if (c.pointToParam_[p] >= 0) ++hits;
    if (hits == 0) c.externals.push_back(line.index);
    else if (hits == 1) c.tangents.push_back(line.index);
    else if (hits == 2) c.secants.push_back(line.index);
    else throw std::runtime_error("line meets conic in more than 2 points");
  }
  if (c.secants.size() != 36 || c.tangents.size() != 9 || c.externals.size() != 28)
    throw std::runtime_error("conic line classification counts are wrong");

  for (auto& row : c.pairTable_) row.fill(-1);
  c.secantToPair.resize(36);
  for (int slot = 0; slot < 36; ++slot) {
    const auto& line = plane.lines()[c.secants[slot]];
    std::vector<int> params;
    for (int p : line.incidentPoints)
      if (c.pointToParam_[p] >= 0) params.push_back(c.pointToParam_[p]);
    int i = std::min(params[0], params[1]);
    int j = std::max(params[0], params[1]);
    c.secantToPair[slot] = {i, j};
    c.pairTable_[i][j] = slot;
    c.pairTable_[j][i] = slot;
  }
  return c;
}

int ConicModel::secantOfParams(int i, int j) const {
  if (i == j) throw std::invalid_argument("secant needs two distinct conic points");
  if (i < 0 || i > 8 || j < 0 || j > 8)
    throw std::invalid_argument("conic-point index out of range");
  return pairTable_[i][j];
}

int ConicModel::secantThrough(int p, int q) const {
  if (p == q) throw std::invalid_argument("secantThrough: the two points coincide");
  int i = paramOfPoint(p);
  int j = paramOfPoint(q);
  if (i < 0 || j < 0)
    throw std::invalid_argument("secantThrough: point is not on the conic");
  return pairTable_[i][j];
}

int ConicModel::paramOfPoint(int pointId) const {
  if (pointId < 0 || pointId >= 73) return -1;
  return pointToParam_[pointId];
}

} // namespace conic36
