#include "posetahedra/corpus.hpp"

namespace posetahedra::corpus {

Poset chain(std::size_t n) {
  std::vector<IdPair> rel;
  for (std::size_t i = 1; i < n; ++i) rel.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(i + 1));
  return Poset::from_relations(rel);
}

Poset claw(std::size_t leaves) {
  std::vector<IdPair> rel;
  for (std::size_t i = 1; i <= leaves; ++i) rel.emplace_back(0, static_cast<ElementId>(i));
  return Poset::from_relations(rel);
}

Poset n4() {
  const std::vector<IdPair> rel{{1, 3}, {2, 3}, {2, 4}};
  return Poset::from_relations(rel);
}

Poset w5() {
  const std::vector<IdPair> rel{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  return Poset::from_relations(rel);
}

Poset h6() {
  const std::vector<IdPair> rel{{1, 2}, {3, 4}, {5, 6}, {1, 4}, {3, 6}, {5, 2}};
  return Poset::from_relations(rel);
}

std::vector<Entry> desk() {
  std::vector<Entry> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"C" + std::to_string(n), chain(n)});
  for (std::size_t n = 2; n <= 5; ++n) out.push_back({"K" + std::to_string(n), claw(n)});
  out.push_back({"N4", n4()});
  out.push_back({"W5", w5()});
  out.push_back({"H6", h6()});
  return out;
}

}  // namespace posetahedra::corpus
