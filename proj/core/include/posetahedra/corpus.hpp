#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posetahedra/poset.hpp"

namespace posetahedra::corpus {

/// 1 < 2 < ... < n.
Poset chain(std::size_t n);
/// Bottom element 0 below leaves 1..n.
Poset claw(std::size_t leaves);
/// Covers (1,3), (2,3), (2,4).
Poset n4();
/// Covers (1,2), (1,3), (2,4), (3,4), (4,5).
Poset w5();
/// Covers (1,2), (3,4), (5,6), (1,4), (3,6), (5,2): three pairwise compatible
/// tubes {1,2}, {3,4}, {5,6} whose union is not a tubing.
Poset h6();

struct Entry {
  std::string name;
  Poset poset;
};

/// Desk corpus: C2..C6, K2..K5, N4, W5, H6.
std::vector<Entry> desk();

}  // namespace posetahedra::corpus
