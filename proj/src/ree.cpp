#include "conic36/ree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conic36 {

namespace {

constexpr int kInfinity = 8;

std::string imageKey(const Perm& p) {
  std::string key(static_cast<size_t>(p.degree()), '\0');
  for (int i = 0; i < p.degree(); ++i) key[static_cast<size_t>(i)] = static_cast<char>(p[i]);
  return key;
}

Perm liftToSecants(const ConicModel& conic, const Perm& p9) {
  std::vector<std::uint16_t> img(36);
  for (int s = 0; s < 36; ++s) {
    auto [i, j] = conic.secantToPair[static_cast<size_t>(s)];
    img[static_cast<size_t>(s)] =
        static_cast<std::uint16_t>(conic.secantOfParams(p9[i], p9[j]));
  }
  return Perm(std::move(img), p9.tag());
}

void require(bool cond, const char* what) {
  if (!cond) throw std::runtime_error(std::string("ReeModel construction check failed: ") + what);
}

} // namespace

SemilinearMap SemilinearMap::make(Fe a, Fe b, Fe c, Fe d, int e) {
  const Field& f = gf8();
  Fe det = f.add(f.mul(a, d), f.mul(b, c));
  if (det == 0) throw std::invalid_argument("Moebius quadruple is singular");
  if (e < 0 || e > 2) throw std::invalid_argument("Frobenius exponent out of range");
  Fe lead = a ? a : (b ? b : (c ? c : d));
  Fe s = f.inv(lead);
  SemilinearMap m;
  m.moebius = {f.mul(a, s), f.mul(b, s), f.mul(c, s), f.mul(d, s)};
  m.frobExp = e;
  return m;
}

int SemilinearMap::applyParam(int t) const {
  const Field& f = gf8();
  auto [a, b, c, d] = moebius;
  if (t == kInfinity) {
    if (c == 0) return kInfinity;
    return f.mul(a, f.inv(c));
  }
  Fe s = static_cast<Fe>(t);
  for (int i = 0; i < frobExp; ++i) s = f.frobenius(s);
  Fe num = f.add(f.mul(a, s), b);
  Fe den = f.add(f.mul(c, s), d);
  if (den == 0) return kInfinity;
  return f.mul(num, f.inv(den));
}

SemilinearMap SemilinearMap::after(const SemilinearMap& other) const {
  const Field& f = gf8();
  // Twist the right factor's matrix by this map's Frobenius power.
  std::array<Fe, 4> m = other.moebius;
  for (int i = 0; i < frobExp; ++i)
    for (auto& x : m) x = f.frobenius(x);
  auto [a1, b1, c1, d1] = moebius;
  auto [a2, b2, c2, d2] = m;
  Fe a = f.add(f.mul(a1, a2), f.mul(b1, c2));
  Fe b = f.add(f.mul(a1, b2), f.mul(b1, d2));
  Fe c = f.add(f.mul(c1, a2), f.mul(d1, c2));
  Fe d = f.add(f.mul(c1, b2), f.mul(d1, d2));
  return make(a, b, c, d, (frobExp + other.frobExp) % 3);
}

Perm SemilinearMap::paramPerm() const {
  std::vector<std::uint16_t> img(9);
  for (int t = 0; t < 9; ++t) img[static_cast<size_t>(t)] = static_cast<std::uint16_t>(applyParam(t));
  return Perm(std::move(img), frobExp);
}

ReeModel ReeModel::build(const ConicModel& conic) {
  ReeModel m;
  m.conic = conic;

  const std::vector<SemilinearMap> gens = {
      SemilinearMap::make(1, 1, 0, 1, 0), // t -> t + 1
      SemilinearMap::make(2, 0, 0, 1, 0), // t -> w*t, w primitive
      SemilinearMap::make(0, 1, 1, 0, 0), // t -> 1/t
      SemilinearMap::make(1, 0, 0, 1, 1), // Frobenius
  };
  std::vector<Perm> gens9, gens36;
  for (const auto& g : gens) {
    gens9.push_back(g.paramPerm());
    gens36.push_back(liftToSecants(conic, gens9.back()));
  }

  m.Gconic = PermGroup::close(gens9);
  m.G = PermGroup::close(gens36);
  require(m.Gconic.order() == 1512, "|G| on conic points must be 1512");
  require(m.G.order() == 1512, "|G| on secants must be 1512");

  // Lifting conic permutations through the pair map is a homomorphism; the
  // lift of the degree-9 closure must be exactly the degree-36 closure.
  std::set<Perm> lifted;
  for (const auto& e : m.Gconic.elements()) {
    Perm l = liftToSecants(conic, e);
    m.liftIndex_[imageKey(l)] = m.conicElems_.size();
    m.conicElems_.push_back(e);
    lifted.insert(std::move(l));
  }
  require(lifted.size() == 1512, "conic action must lift injectively");
  require(std::equal(lifted.begin(), lifted.end(), m.G.elements().begin()),
          "lifted conic closure must equal the secant closure");

  require(m.G.isTransitive(), "G must be transitive on the secants");
  require(isPrimitive(m.G).primitive, "G must be primitive on the secants");

  m.Gder = PermGroup::close({gens36[0], gens36[1], gens36[2]});
  require(m.Gder.order() == 504, "|G'| must be 504");
  for (const auto& e : m.G.elements())
    require((e.tag() == 0) == m.Gder.contains(e),
            "derived subgroup must be the Frobenius-exponent-0 part");

  m.gamma = gens36[3];
  m.gammaConic = gens9[3];
  require(m.gamma.order() == 3, "gamma must have order 3");
  require(!m.Gder.contains(m.gamma), "gamma must lie outside G'");

  m.CGgamma = centralizer(m.G, m.gamma);
  require(m.CGgamma.order() == 18, "|C_G(gamma)| must be 18");

  // eta: least order-3 element of C_G(gamma) inside G'.
  // sigma: least involution of C_G(gamma).
  bool haveEta = false, haveSigma = false;
  for (const auto& e : m.CGgamma.elements()) {
    if (!haveEta && e.order() == 3 && m.Gder.contains(e)) {
      m.eta = e;
      haveEta = true;
    }
    if (!haveSigma && e.order() == 2) {
      m.sigma = e;
      haveSigma = true;
    }
    if (haveEta && haveSigma) break;
  }
  require(haveEta, "C_G(gamma) must contain an order-3 element of G'");
  require(haveSigma, "C_G(gamma) must contain an involution");
  m.etaConic = m.conicPartOf(m.eta);
  m.sigmaConic = m.conicPartOf(m.sigma);

  std::vector<Perm> cgEtaElems;
  for (const auto& e : m.CGgamma.elements())
    if (m.Gder.contains(e)) cgEtaElems.push_back(e);
  m.CGeta = PermGroup::fromElements(std::move(cgEtaElems));
  require(m.CGeta.order() == 6, "C_G(gamma) ∩ G' must have order 6");
  require(!m.CGeta.isAbelian(), "C_G(gamma) ∩ G' must be nonabelian (S3)");
  PermGroup etaSigma = PermGroup::close({m.eta, m.sigma});
  require(etaSigma.order() == m.CGeta.order() && etaSigma.isSubgroupOf(m.CGeta),
          "C_G(gamma) ∩ G' must equal <eta, sigma>");

  // C_G(gamma) = <gamma> x CGeta: commuting factors with trivial
  // intersection whose product covers everything.
  {
    std::set<Perm> product;
    Perm gpow = Perm::identity(36, 0);
    for (int i = 0; i < 3; ++i) {
      for (const auto& s : m.CGeta.elements()) product.insert(gpow.after(s));
      gpow = m.gamma.after(gpow);
    }
    require(product.size() == 18, "C_G(gamma) must factor as <gamma> x (C_G(gamma) ∩ G')");
  }

  m.K = PermGroup::close({m.gamma, m.sigma});
  require(m.K.order() == 6 && m.K.isCyclic(), "K = <gamma, sigma> must be Z6");
  {
    PermGroup nk = normalizer(m.G, m.K);
    require(nk.order() == m.K.order(), "K must be self-normalizing in G");
  }

  // Distinguished conic points.
  std::vector<int> gammaFixed;
  for (int t = 0; t < 9; ++t)
    if (m.gammaConic[t] == t) gammaFixed.push_back(t);
  require(gammaFixed.size() == 3, "gamma must fix exactly 3 conic points");
  std::vector<int> kFixed, swapped;
  for (int t : gammaFixed) {
    if (m.sigmaConic[t] == t) kFixed.push_back(t);
    else swapped.push_back(t);
  }
  require(kFixed.size() == 1 && swapped.size() == 2,
          "sigma must fix one gamma-fixed conic point and swap the other two");
  m.F = kFixed[0];
  m.W = std::min(swapped[0], swapped[1]);
  m.Wsigma = m.sigmaConic[m.W];
  require(m.Wsigma == std::max(swapped[0], swapped[1]), "W^sigma must be sigma(W)");
  for (int t = 0; t < 9; ++t)
    if (t != m.F && t != m.W && t != m.Wsigma) {
      m.P = t;
      break;
    }

  // eta acts semiregularly: no fixed conic point, no fixed secant.
  for (int t = 0; t < 9; ++t) require(m.etaConic[t] != t, "eta must fix no conic point");
  for (int s = 0; s < 36; ++s) require(m.eta[s] != s, "eta must fix no secant");

  // Conic orbits: {F, W, W^sigma} is one C_G(gamma)-orbit, the other six
  // points are a single K-orbit (and a C_G(gamma)-orbit).
  {
    auto conicGroupOf = [&](const PermGroup& g36) {
      std::vector<Perm> conicElems;
      for (const auto& e : g36.elements()) conicElems.push_back(m.conicPartOf(e));
      return PermGroup::fromElements(std::move(conicElems));
    };
    PermGroup cgConic = conicGroupOf(m.CGgamma);
    PermGroup kConic = conicGroupOf(m.K);
    std::vector<int> fws{m.F, m.W, m.Wsigma};
    std::sort(fws.begin(), fws.end());
    require(orbitOf(cgConic, m.F) == fws, "{F, W, W^sigma} must be a C_G(gamma)-orbit");
    std::vector<int> rest;
    for (int t = 0; t < 9; ++t)
      if (!std::binary_search(fws.begin(), fws.end(), t)) rest.push_back(t);
    require(orbitOf(kConic, m.P) == rest, "the other six conic points must be one K-orbit");
    require(orbitOf(cgConic, m.P) == rest,
            "the other six conic points must be one C_G(gamma)-orbit");
  }

  // G is 3-transitive on the conic: the orbit of one ordered distinct
  // triple has size 9*8*7 = 504.
  {
    std::set<std::array<int, 3>> orb{{0, 1, 2}};
    std::vector<std::array<int, 3>> frontier{{0, 1, 2}};
    while (!frontier.empty()) {
      std::vector<std::array<int, 3>> next;
      for (const auto& t : frontier)
        for (const auto& g : m.Gconic.generators()) {
          std::array<int, 3> u{g[t[0]], g[t[1]], g[t[2]]};
          if (orb.insert(u).second) next.push_back(u);
        }
      frontier = std::move(next);
    }
    require(orb.size() == 504, "G must be 3-transitive on the conic");
  }

  // Names for the 9 conic points, in paper-style notation.
  {
    for (auto& s : m.paramNames_) s.clear();
    m.paramNames_[static_cast<size_t>(m.F)] = "F";
    m.paramNames_[static_cast<size_t>(m.W)] = "W";
    m.paramNames_[static_cast<size_t>(m.Wsigma)] = "W^s";
    int pg = m.gammaConic[m.P];
    int pg2 = m.gammaConic[pg];
    int ps = m.sigmaConic[m.P];
    int psg = m.gammaConic[ps];
    int psg2 = m.gammaConic[psg];
    m.paramNames_[static_cast<size_t>(m.P)] = "P";
    m.paramNames_[static_cast<size_t>(pg)] = "P^g";
    m.paramNames_[static_cast<size_t>(pg2)] = "P^g2";
    m.paramNames_[static_cast<size_t>(ps)] = "P^s";
    m.paramNames_[static_cast<size_t>(psg)] = "P^sg";
    m.paramNames_[static_cast<size_t>(psg2)] = "P^sg2";
    for (const auto& s : m.paramNames_) require(!s.empty(), "conic point naming must cover all 9");
  }

  // Base blocks B1..B4.
  {
    int pg = m.gammaConic[m.P];
    int ps = m.sigmaConic[m.P];
    int l1 = conic.secantOfParams(m.P, pg);
    int l2 = conic.secantOfParams(pg, ps);
    int l3 = conic.secantOfParams(m.P, m.W);
    int l4 = conic.secantOfParams(ps, m.W);
    m.baseBlocks[0] = orbitOf(m.CGgamma, l1);
    m.baseBlocks[1] = orbitOf(m.K, l2);
    m.baseBlocks[2] = orbitOf(m.K, l3);
    m.baseBlocks[3] = orbitOf(m.K, l4);
    for (const auto& b : m.baseBlocks)
      require(b.size() == 6, "every base block must have 6 secants");
    require(setStabilizer(m.G, m.baseBlocks[0]).order() == 18, "|G_{B1}| must be 18");
    for (int i = 1; i < 4; ++i)
      require(setStabilizer(m.G, m.baseBlocks[static_cast<size_t>(i)]).order() == 6,
              "|G_{Bi}| must be 6 for i > 1");
  }

  return m;
}

Perm ReeModel::conicPartOf(const Perm& g36) const {
  auto it = liftIndex_.find(imageKey(g36));
  if (it == liftIndex_.end())
    throw std::invalid_argument("permutation is not a member of G");
  return conicElems_[it->second];
}

std::string ReeModel::paramName(int param) const {
  return paramNames_[static_cast<size_t>(param)];
}

std::string ReeModel::secantName(int slot) const {
  auto [i, j] = conic.secantToPair[static_cast<size_t>(slot)];
  return "(" + paramName(i) + " " + paramName(j) + ")";
}

UredOrbitReport ReeModel::uredOrbits() const {
  UredOrbitReport rep;
  std::vector<int> all(36);
  for (int i = 0; i < 36; ++i) all[static_cast<size_t>(i)] = i;

  auto labeled = [&](const PermGroup& g, const std::string& tag) {
    std::vector<LabeledOrbit> out;
    for (auto& orb : orbits(g, all)) {
      LabeledOrbit lo;
      lo.label = secantName(orb.front()) + "^{" + tag + "}";
      lo.members = std::move(orb);
      out.push_back(std::move(lo));
    }
    return out;
  };
  rep.cgGammaOrbits = labeled(CGgamma, "C_G(gamma)");
  rep.cgEtaOrbits = labeled(CGeta, "C_G(eta)");
  rep.kOrbits = labeled(K, "K");

  auto lengths = [](const std::vector<LabeledOrbit>& v) {
    std::multiset<size_t> ls;
    for (const auto& o : v) ls.insert(o.members.size());
    return ls;
  };
  if (lengths(rep.cgGammaOrbits) != std::multiset<size_t>{3, 6, 9, 18})
    throw std::runtime_error("C_G(gamma) orbit lengths must be {3,6,9,18}");
  if (lengths(rep.kOrbits) != std::multiset<size_t>{1, 2, 3, 6, 6, 6, 6, 6})
    throw std::runtime_error("K orbit lengths must be {1,2,3,6,6,6,6,6}");
  size_t sixes = 0;
  for (const auto& o : rep.cgEtaOrbits)
    if (o.members.size() == 6) ++sixes;
  if (sixes != 4)
    throw std::runtime_error("C_G(eta) must have exactly four orbits of length 6");

  // The three named length-6 orbits coincide.
  int pg = gammaConic[P];
  int l1 = conic.secantOfParams(P, pg);
  std::vector<int> a = orbitOf(CGgamma, l1);
  std::vector<int> b = orbitOf(CGeta, l1);
  std::vector<int> c = orbitOf(K, l1);
  if (a != b || b != c)
    throw std::runtime_error("the three distinguished length-6 orbits must coincide");

  return rep;
}

} // namespace conic36
