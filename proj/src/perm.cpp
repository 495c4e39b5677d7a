#include "conic36/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace conic36 {

Perm::Perm(std::vector<std::uint16_t> images, int tag)
    : img_(std::move(images)), tag_(static_cast<int8_t>(tag)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree, int tag) {
  std::vector<std::uint16_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img), tag);
}

Perm Perm::after(const Perm& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("composition of permutations of different degree");
  std::vector<std::uint16_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
  int tag = (tag_ >= 0 && other.tag_ >= 0) ? (tag_ + other.tag_) % 3 : -1;
  Perm r;
  r.img_ = std::move(img);
  r.tag_ = static_cast<int8_t>(tag);
  return r;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<std::uint16_t>(i);
  int tag = tag_ >= 0 ? (3 - tag_) % 3 : -1;
  Perm r;
  r.img_ = std::move(img);
  r.tag_ = static_cast<int8_t>(tag);
  return r;
}

Perm Perm::conjugatedBy(const Perm& x) const {
  return x.after(*this).after(x.inverse());
}

bool Perm::isIdentity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::order() const {
  int o = 1;
  Perm q = *this;
  while (!q.isIdentity()) {
    q = after(q);
    ++o;
  }
  return o;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc{static_cast<int>(i)};
    seen[i] = true;
    for (int j = img_[i]; j != static_cast<int>(i); j = img_[j]) {
      cyc.push_back(j);
      seen[j] = true;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

} // namespace conic36
