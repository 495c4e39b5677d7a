#pragma once

#include "conic36/perm.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace conic36 {

/// Text format for generator lists: the degree on the first line, then one
/// permutation per line as a space-separated image sequence.
std::string writeGenerators(const std::vector<Perm>& gens);
std::vector<Perm> readGenerators(std::istream& in);
std::vector<Perm> readGeneratorsFromString(const std::string& text);

} // namespace conic36
