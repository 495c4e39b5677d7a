#include "conic36/field.hpp"

#include <stdexcept>

namespace conic36 {

namespace {

// Carryless product of two GF(2) polynomials.
unsigned polyMul(unsigned a, unsigned b) {
  unsigned r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

int polyDegree(unsigned p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Remainder of a modulo m over GF(2).
unsigned polyMod(unsigned a, unsigned m) {
  const int dm = polyDegree(m);
  for (int d = polyDegree(a); d >= dm; d = polyDegree(a))
    a ^= m << (d - dm);
  return a;
}

bool irreducible(unsigned m) {
  const int dm = polyDegree(m);
  if (dm < 1) return false;
  for (unsigned q = 2; polyDegree(q) < dm; ++q)
    if (polyMod(m, q) == 0 && polyDegree(q) >= 1) return false;
  return true;
}

} // namespace

Field::Field(int degree, unsigned modulus) : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > 8)
    throw std::invalid_argument("field degree out of supported range");
  if (polyDegree(modulus) != degree)
    throw std::invalid_argument("modulus degree does not match field degree");
  if (!irreducible(modulus))
    throw std::invalid_argument("modulus is not irreducible over GF(2)");

  const int n = order();
  log_.assign(n, -1);
  // Find a generator of the multiplicative group and fill the tables.
  for (Fe g = 2; g < n; ++g) {
    exp_.clear();
    log_.assign(n, -1);
    unsigned x = 1;
    bool ok = true;
    for (int i = 0; i < n - 1; ++i) {
      if (log_[x] != -1) { // cycle shorter than n-1
        ok = false;
        break;
      }
      exp_.push_back(static_cast<Fe>(x));
      log_[x] = i;
      x = polyMod(polyMul(x, g), modulus);
    }
    if (ok && x == 1) break;
  }
  if (static_cast<int>(exp_.size()) != n - 1)
    throw std::runtime_error("failed to build antilog table");
}

Fe Field::mul(Fe a, Fe b) const {
  if (a == 0 || b == 0) return 0;
  const int n1 = order() - 1;
  return exp_[(log_[a] + log_[b]) % n1];
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  const int n1 = order() - 1;
  return exp_[(n1 - log_[a]) % n1];
}

Fe Field::pow(Fe a, int e) const {
  if (a == 0) return e == 0 ? Fe{1} : Fe{0};
  const int n1 = order() - 1;
  int k = ((log_[a] * e) % n1 + n1) % n1;
  return exp_[k];
}

const Field& gf8() {
  static const Field f(3, 0b1011); // x^3 + x + 1
  return f;
}

} // namespace conic36
