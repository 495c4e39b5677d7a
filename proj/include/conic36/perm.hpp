#pragma once

#include <cstdint>
#include <vector>

namespace conic36 {

/// Dense permutation of [0, degree). Ordering and equality compare image
/// sequences only; the optional tag (a Frobenius exponent in {0,1,2})
/// rides along through composition and inversion when both operands
/// carry one.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images, int tag = -1);
  static Perm identity(int degree, int tag = -1);

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint16_t operator[](int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<std::uint16_t>& images() const { return img_; }
  int tag() const { return tag_; }
  Perm withTag(int tag) const { return Perm(img_, tag); }

  /// (*this) o other: apply other first.
  Perm after(const Perm& other) const;
  Perm inverse() const;
  /// Conjugate x * (*this) * x^-1.
  Perm conjugatedBy(const Perm& x) const;

  bool isIdentity() const;
  int order() const;
  /// All cycles, including fixed points as singletons, each cycle starting
  /// at its least member, cycles sorted by least member.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
  std::vector<std::uint16_t> img_;
  int tag_ = -1;
};

} // namespace conic36
