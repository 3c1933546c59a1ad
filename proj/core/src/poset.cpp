#include "posetahedra/poset.hpp"

#include <algorithm>
#include <string>

#include "posetahedra/errors.hpp"

namespace posetahedra {

Poset Poset::from_relations(std::span<const IdPair> relations) {
  Poset p;
  for (const auto& [a, b] : relations) {
    if (a == b) throw CycleError("relation " + std::to_string(a) + " < " + std::to_string(a));
    p.ids_.push_back(a);
    p.ids_.push_back(b);
  }
  std::sort(p.ids_.begin(), p.ids_.end());
  p.ids_.erase(std::unique(p.ids_.begin(), p.ids_.end()), p.ids_.end());
  const std::size_t n = p.ids_.size();
  if (n < 2) throw TooSmallError("a poset needs at least 2 elements, got " + std::to_string(n));
  if (n > kMaxElements) {
    throw TooLargeError("at most " + std::to_string(kMaxElements) + " elements are supported, got " +
                        std::to_string(n));
  }

  std::vector<ElementSet> direct(n);
  for (const auto& [a, b] : relations) {
    direct[p.index_of(a)] = direct[p.index_of(a)].with(p.index_of(b));
  }

  // Transitive closure by DFS from each element.
  p.above_.assign(n, ElementSet{});
  for (std::size_t s = 0; s < n; ++s) {
    ElementSet seen;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      (direct[v] - seen).for_each([&](std::size_t w) {
        seen = seen.with(w);
        stack.push_back(w);
      });
    }
    if (seen.contains(s)) {
      throw CycleError("relations contain a cycle through element " + std::to_string(p.ids_[s]));
    }
    p.above_[s] = seen;
  }
  p.below_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) {
    p.above_[i].for_each([&](std::size_t j) { p.below_[j] = p.below_[j].with(i); });
  }

  p.neighbors_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) {
    p.above_[i].for_each([&](std::size_t j) {
      bool redundant = false;
      p.above_[i].for_each([&](std::size_t k) { redundant = redundant || p.above_[k].contains(j); });
      if (!redundant) {
        p.covers_.emplace_back(i, j);
        p.neighbors_[i] = p.neighbors_[i].with(j);
        p.neighbors_[j] = p.neighbors_[j].with(i);
      }
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  if (!is_connected(p, p.all())) throw DisconnectedError("Hasse diagram is not connected");
  return p;
}

std::optional<std::size_t> Poset::find(ElementId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Poset::index_of(ElementId id) const {
  auto found = find(id);
  if (!found) throw IndexError("unknown element id " + std::to_string(id));
  return *found;
}

std::vector<IdPair> Poset::cover_ids() const {
  std::vector<IdPair> out;
  out.reserve(covers_.size());
  for (const auto& [i, j] : covers_) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

ElementSet Poset::set_of(std::span<const ElementId> ids) const {
  ElementSet s;
  for (ElementId id : ids) s = s.with(index_of(id));
  return s;
}

std::vector<ElementId> Poset::ids_of(ElementSet s) const {
  std::vector<ElementId> out;
  s.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
  return out;
}

bool is_convex(const Poset& p, ElementSet s) {
  // Elements strictly between two members must be members.
  ElementSet above_any, below_any;
  s.for_each([&](std::size_t i) {
    above_any |= p.strictly_above(i);
    below_any |= p.strictly_below(i);
  });
  return ((above_any & below_any) - s).empty();
}

bool is_connected(const Poset& p, ElementSet s) {
  if (s.empty()) return true;
  ElementSet seen = ElementSet::singleton(s.lowest());
  ElementSet frontier = seen;
  while (!frontier.empty()) {
    ElementSet next;
    frontier.for_each([&](std::size_t v) { next |= p.hasse_neighbors(v) & s; });
    frontier = next - seen;
    seen |= next;
  }
  return seen == s;
}

bool is_tube_set(const Poset& p, ElementSet s) {
  return !s.empty() && s.subset_of(p.all()) && is_convex(p, s) && is_connected(p, s);
}

std::vector<ElementSet> connected_components(const Poset& p, ElementSet s) {
  std::vector<ElementSet> out;
  ElementSet rest = s;
  while (!rest.empty()) {
    ElementSet comp = ElementSet::singleton(rest.lowest());
    ElementSet frontier = comp;
    while (!frontier.empty()) {
      ElementSet next;
      frontier.for_each([&](std::size_t v) { next |= p.hasse_neighbors(v) & rest; });
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<IdealFilterSplit> ideal_filter_splits(const Poset& p) {
  // Order ideals, grown one minimal outside element at a time.
  std::vector<IdealFilterSplit> out;
  std::vector<ElementSet> stack{ElementSet{}};
  std::vector<ElementSet> seen;
  const ElementSet all = p.all();
  while (!stack.empty()) {
    ElementSet ideal = stack.back();
    stack.pop_back();
    if (!ideal.empty() && ideal != all && is_connected(p, ideal) && is_connected(p, all - ideal)) {
      out.push_back({ideal, all - ideal});
    }
    (all - ideal).for_each([&](std::size_t v) {
      if (!p.strictly_below(v).subset_of(ideal)) return;
      ElementSet grown = ideal.with(v);
      auto it = std::lower_bound(seen.begin(), seen.end(), grown);
      if (it != seen.end() && *it == grown) return;
      seen.insert(it, grown);
      stack.push_back(grown);
    });
  }
  std::sort(out.begin(), out.end(),
            [](const IdealFilterSplit& a, const IdealFilterSplit& b) { return canonical_less(a.ideal, b.ideal); });
  return out;
}

Quotient quotient_poset(const Poset& p, std::span<const ElementSet> partition) {
  return quotient_poset(p, p.all(), partition);
}

Quotient quotient_poset(const Poset& p, ElementSet within, std::span<const ElementSet> partition) {
  if (partition.size() < 2) throw NotAPartitionError("a quotient needs at least 2 blocks");
  ElementSet covered;
  for (ElementSet block : partition) {
    if (block.empty() || covered.intersects(block) || !block.subset_of(within)) {
      throw NotAPartitionError("blocks are empty, overlap, or leave the ground set");
    }
    covered |= block;
  }
  if (covered != within) throw NotAPartitionError("blocks do not cover the ground set");
  for (ElementSet block : partition) {
    if (!is_tube_set(p, block)) {
      auto members = p.ids_of(block);
      std::string text;
      for (auto id : members) text += (text.empty() ? "" : ",") + std::to_string(id);
      throw NotATubingError("block {" + text + "} is not a tube");
    }
  }

  std::vector<ElementSet> blocks(partition.begin(), partition.end());
  std::sort(blocks.begin(), blocks.end(), [](ElementSet a, ElementSet b) { return a.lowest() < b.lowest(); });
  auto block_of = [&](std::size_t v) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].contains(v)) return b;
    }
    return blocks.size();
  };
  std::vector<IdPair> relations;
  for (const auto& [i, j] : p.covers()) {
    if (!within.contains(i) || !within.contains(j)) continue;
    std::size_t a = block_of(i), b = block_of(j);
    if (a != b) relations.emplace_back(p.id(blocks[a].lowest()), p.id(blocks[b].lowest()));
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  Quotient q;
  try {
    q.poset = Poset::from_relations(relations);
  } catch (const CycleError&) {
    throw NotATubingError("the blocks form a directed cycle");
  } catch (const TooSmallError&) {
    throw NotAPartitionError("quotient has fewer than 2 related blocks");
  }
  if (q.poset.size() != blocks.size()) throw NotAPartitionError("quotient is not connected");
  q.blocks = std::move(blocks);
  return q;
}

Poset induced_subposet(const Poset& p, ElementSet s) {
  std::vector<IdPair> relations;
  for (const auto& [i, j] : p.covers()) {
    if (s.contains(i) && s.contains(j)) relations.emplace_back(p.id(i), p.id(j));
  }
  // Convex subsets keep their covers; for non-convex ones add implied order.
  s.for_each([&](std::size_t i) {
    (p.strictly_above(i) & s).for_each([&](std::size_t j) { relations.emplace_back(p.id(i), p.id(j)); });
  });
  return Poset::from_relations(relations);
}

Coordinates::Coordinates(ElementSet support, RationalVector values)
    : support_(support), values_(std::move(values)) {
  if (values_.size() != support_.size()) {
    throw PreconditionError("coordinate count " + std::to_string(values_.size()) + " does not match support size " +
                            std::to_string(support_.size()));
  }
}

const Rational& Coordinates::at(std::size_t i) const {
  if (!support_.contains(i)) throw IndexError("missing coordinate for element index " + std::to_string(i));
  std::size_t pos = ElementSet(support_.bits() & ((std::uint64_t{1} << i) - 1)).size();
  return values_[pos];
}

Coordinates Coordinates::restrict(ElementSet sub) const {
  RationalVector out;
  out.reserve(sub.size());
  sub.for_each([&](std::size_t i) { out.push_back(at(i)); });
  return Coordinates(sub, std::move(out));
}

Rational OrderFunctional::operator()(const Poset& p, const Coordinates& x) const {
  return kind == Kind::kAlpha ? posetahedra::alpha(p, tube, x) : posetahedra::average(tube, x);
}

RationalVector OrderFunctional::coefficients(const Poset& p) const {
  RationalVector c(p.size(), Rational(0));
  if (kind == Kind::kAverage) {
    Rational w(1, static_cast<long>(tube.size()));
    tube.for_each([&](std::size_t i) { c[i] = w; });
    return c;
  }
  for (const auto& [i, j] : p.covers()) {
    if (tube.contains(i) && tube.contains(j)) {
      c[j] += 1;
      c[i] -= 1;
    }
  }
  return c;
}

Rational alpha(const Poset& p, ElementSet tau, const Coordinates& x) {
  Rational s = 0;
  for (const auto& [i, j] : p.covers()) {
    if (tau.contains(i) && tau.contains(j)) s += x.at(j) - x.at(i);
  }
  return s;
}

Rational average(ElementSet tau, const Coordinates& x) {
  if (tau.empty()) throw PreconditionError("average over an empty set");
  Rational s = 0;
  tau.for_each([&](std::size_t i) { s += x.at(i); });
  return s / static_cast<long>(tau.size());
}

Coordinates proj_sigma0(ElementSet tau, const Coordinates& x) {
  Rational avg = average(tau, x);
  RationalVector out;
  out.reserve(tau.size());
  tau.for_each([&](std::size_t i) { out.push_back(x.at(i) - avg); });
  return Coordinates(tau, std::move(out));
}

Coordinates res(const Poset& p, ElementSet tau, const Coordinates& x) {
  Rational a = alpha(p, tau, x);
  if (a == 0) throw DegenerateError("alpha vanishes on the tube; restriction is undefined");
  Coordinates out = proj_sigma0(tau, x);
  for (auto& v : out.values()) v /= a;
  return out;
}

}  // namespace posetahedra
