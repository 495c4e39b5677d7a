#include "conic36/perm_io.hpp"

#include <sstream>
#include <stdexcept>

namespace conic36 {

std::string writeGenerators(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators to write");
  std::ostringstream os;
  os << gens[0].degree() << '\n';
  for (const auto& g : gens) {
    for (int i = 0; i < g.degree(); ++i) {
      if (i) os << ' ';
      os << g[i];
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Perm> readGenerators(std::istream& in) {
  int degree = 0;
  if (!(in >> degree) || degree < 1)
    throw std::invalid_argument("generator file: bad degree line");
  std::vector<Perm> gens;
  while (true) {
    std::vector<std::uint16_t> img;
    img.reserve(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) {
      int v;
      if (!(in >> v)) {
        if (i == 0) return gens; // clean end of file
        throw std::invalid_argument("generator file: truncated permutation");
      }
      if (v < 0 || v >= degree)
        throw std::invalid_argument("generator file: image out of range");
      img.push_back(static_cast<std::uint16_t>(v));
    }
    gens.emplace_back(std::move(img));
  }
}

std::vector<Perm> readGeneratorsFromString(const std::string& text) {
  std::istringstream is(text);
  return readGenerators(is);
}

} // namespace conic36
