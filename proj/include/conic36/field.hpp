#pragma once

#include <cstdint>
#include <vector>

namespace conic36 {

/// Field element of GF(2^m): polynomial over GF(2) of degree < m,
/// coefficient of x^i stored in bit i.
using Fe = std::uint8_t;

/// GF(2^m) for small m, multiplication via log/antilog tables.
///
/// The constructor verifies that the modulus is irreducible (trial
/// division) and that the antilog table enumerates every nonzero
/// element exactly once.
class Field {
public:
  Field(int degree, unsigned modulus);

  int degree() const { return degree_; }
  unsigned modulus() const { return modulus_; }
  int order() const { return 1 << degree_; }

  Fe add(Fe a, Fe b) const { return static_cast<Fe>(a ^ b); }
  Fe mul(Fe a, Fe b) const;
  /// Multiplicative inverse; throws std::domain_error on a = 0.
  Fe inv(Fe a) const;
  /// The field automorphism a -> a^2.
  Fe frobenius(Fe a) const { return mul(a, a); }
  Fe pow(Fe a, int e) const;

private:
  int degree_;
  unsigned modulus_;
  std::vector<Fe> exp_;  // exp_[i] = g^i for a fixed generator g
  std::vector<int> log_; // log_[a], defined for a != 0
};

/// The GF(8) instance (modulus x^3 + x + 1) used by all geometry.
const Field& gf8();

} // namespace conic36
