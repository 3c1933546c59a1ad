#include "posetahedra/tubings.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "posetahedra/errors.hpp"

namespace posetahedra {

namespace {

std::string describe(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + std::to_string(p.id(i));
    first = false;
  });
  return out + "}";
}

bool tubing_less(const Tubing& a, const Tubing& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
}

// Search for a directed cycle; returns it in traversal order.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> color(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    color[v] = 1;
    stack.push_back(v);
    for (std::size_t w : adj[v]) {
      if (color[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (color[w] == 0 && visit(w)) return true;
    }
    stack.pop_back();
    color[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0 && visit(v)) return cycle;
  }
  return {};
}

}  // namespace

Tube make_tube(const Poset& p, std::span<const ElementId> ids) {
  ElementSet s;
  for (ElementId id : ids) {
    auto idx = p.find(id);
    if (!idx) throw NotATubeError("unknown element id " + std::to_string(id));
    s = s.with(*idx);
  }
  if (s.empty()) throw NotATubeError("a tube must be nonempty");
  if (!is_convex(p, s)) throw NotATubeError(describe(p, s) + " is not convex");
  if (!is_connected(p, s)) throw NotATubeError(describe(p, s) + " is not connected");
  return s;
}

void sort_canonical(std::vector<Tube>& tubes) { std::sort(tubes.begin(), tubes.end(), CanonicalLess{}); }

std::vector<Tube> enumerate_tubes(const Poset& p, bool proper_only) {
  // Every connected set is reachable from a singleton by adding neighbours.
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> frontier;
  for (std::size_t i = 0; i < p.size(); ++i) {
    frontier.push_back(ElementSet::singleton(i));
    seen.insert(frontier.back().bits());
  }
  std::vector<Tube> out;
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet s : frontier) {
      if (is_convex(p, s) && (!proper_only || is_proper(p, s))) out.push_back(s);
      ElementSet boundary;
      s.for_each([&](std::size_t v) { boundary |= p.hasse_neighbors(v); });
      (boundary - s).for_each([&](std::size_t v) {
        ElementSet grown = s.with(v);
        if (seen.insert(grown.bits()).second) next.push_back(grown);
      });
    }
    frontier = std::move(next);
  }
  sort_canonical(out);
  return out;
}

bool is_proper(const Poset& p, Tube t) { return t.size() > 1 && t.size() < p.size(); }

bool nested_or_disjoint(Tube a, Tube b) { return a.subset_of(b) || b.subset_of(a) || !a.intersects(b); }

bool d_edge(const Poset& p, Tube a, Tube b) {
  if (a.intersects(b)) return false;
  bool found = false;
  a.for_each([&](std::size_t i) { found = found || p.strictly_above(i).intersects(b); });
  return found;
}

std::vector<std::vector<std::size_t>> d_graph(const Poset& p, std::span<const Tube> tubes) {
  std::vector<std::vector<std::size_t>> adj(tubes.size());
  for (std::size_t a = 0; a < tubes.size(); ++a) {
    for (std::size_t b = 0; b < tubes.size(); ++b) {
      if (a != b && d_edge(p, tubes[a], tubes[b])) adj[a].push_back(b);
    }
  }
  return adj;
}

TubingCheck check_tubing(const Poset& p, std::span<const Tube> tubes) {
  TubingCheck result;
  for (std::size_t a = 0; a < tubes.size(); ++a) {
    for (std::size_t b = a + 1; b < tubes.size(); ++b) {
      if (!nested_or_disjoint(tubes[a], tubes[b])) {
        result.ok = false;
        result.crossing = std::make_pair(tubes[a], tubes[b]);
        return result;
      }
    }
  }
  auto cycle = find_cycle(d_graph(p, tubes));
  if (!cycle.empty()) {
    result.ok = false;
    auto smallest = std::min_element(cycle.begin(), cycle.end(),
                                     [&](std::size_t x, std::size_t y) { return canonical_less(tubes[x], tubes[y]); });
    std::rotate(cycle.begin(), smallest, cycle.end());
    for (std::size_t i : cycle) result.cycle.push_back(tubes[i]);
  }
  return result;
}

bool is_tubing(const Poset& p, std::span<const Tube> tubes) { return check_tubing(p, tubes).ok; }

Tubing make_tubing(const Poset& p, std::vector<Tube> tubes) {
  for (Tube t : tubes) {
    if (!is_tube_set(p, t)) throw NotATubeError(describe(p, t) + " is not a tube");
  }
  sort_canonical(tubes);
  if (std::adjacent_find(tubes.begin(), tubes.end()) != tubes.end()) throw NotATubingError("repeated tube");
  auto check = check_tubing(p, tubes);
  if (check.crossing) {
    throw NotATubingError(describe(p, check.crossing->first) + " and " + describe(p, check.crossing->second) +
                          " are neither nested nor disjoint");
  }
  if (!check.ok) {
    std::string path;
    for (Tube t : check.cycle) path += describe(p, t) + " -> ";
    throw NotATubingError("D_T has a cycle " + path + describe(p, check.cycle.front()));
  }
  return tubes;
}

std::vector<Tubing> enumerate_proper_tubings(const Poset& p, bool max_only) {
  const std::vector<Tube> tubes = enumerate_tubes(p, true);
  const std::size_t m = tubes.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m));
  std::vector<std::vector<bool>> edge(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      compatible[a][b] = nested_or_disjoint(tubes[a], tubes[b]);
      edge[a][b] = d_edge(p, tubes[a], tubes[b]);
    }
  }

  std::vector<Tubing> out;
  std::vector<std::size_t> chosen;
  // Adding t closes a cycle iff t reaches, through chosen tubes, a tube with
  // an edge back into t.
  auto closes_cycle = [&](std::size_t t) {
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{t};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : chosen) {
        if (!edge[v][w] || seen[w]) continue;
        if (edge[w][t]) return true;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    return false;
  };
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (!max_only || chosen.size() + 2 == p.size()) {
      Tubing t;
      for (std::size_t i : chosen) t.push_back(tubes[i]);
      out.push_back(std::move(t));
    }
    for (std::size_t c = start; c < m; ++c) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t s) { return compatible[s][c]; });
      if (!ok || closes_cycle(c)) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  for (auto& t : out) sort_canonical(t);
  std::sort(out.begin(), out.end(), tubing_less);
  return out;
}

std::vector<Tubing> enumerate_tubing_partitions(const Poset& p, ElementSet within) {
  std::vector<Tube> candidates;
  for (Tube t : enumerate_tubes(p, false)) {
    if (t.subset_of(within)) candidates.push_back(t);
  }
  std::vector<Tubing> out;
  Tubing current;
  std::function<void(ElementSet)> fill = [&](ElementSet rest) {
    if (rest.empty()) {
      if (is_tubing(p, current)) {
        Tubing t = current;
        sort_canonical(t);
        out.push_back(std::move(t));
      }
      return;
    }
    std::size_t v = rest.lowest();
    for (Tube t : candidates) {
      if (!t.contains(v) || !t.subset_of(rest)) continue;
      current.push_back(t);
      fill(rest - t);
      current.pop_back();
    }
  };
  fill(within);
  std::sort(out.begin(), out.end(), tubing_less);
  return out;
}

bool is_tubing_partition(const Poset& p, ElementSet within, std::span<const Tube> tubes) {
  ElementSet covered;
  for (Tube t : tubes) {
    if (!is_tube_set(p, t) || covered.intersects(t)) return false;
    covered |= t;
  }
  return covered == within && is_tubing(p, tubes);
}

TubingTree::TubingTree(const Poset& p, std::span<const Tube> tubing) {
  nodes_.assign(tubing.begin(), tubing.end());
  nodes_.push_back(p.all());
  for (std::size_t i = 0; i < p.size(); ++i) nodes_.push_back(ElementSet::singleton(i));
  sort_canonical(nodes_);
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i]] = i;
  parent_.assign(nodes_.size(), nodes_.size());
  children_.assign(nodes_.size(), {});
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (nodes_[i].subset_of(nodes_[j])) {
        parent_[i] = j;
        children_[j].push_back(nodes_[i]);
        break;
      }
    }
  }
}

std::size_t TubingTree::node(Tube t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw PreconditionError("tube is not a node of the tubing tree");
  return it->second;
}

Tube TubingTree::parent(Tube t) const {
  std::size_t i = node(t);
  if (parent_[i] == nodes_.size()) throw PreconditionError("the root has no parent");
  return nodes_[parent_[i]];
}

const std::vector<Tube>& TubingTree::children(Tube t) const { return children_[node(t)]; }

Tube TubingTree::smallest_containing(ElementSet s) const {
  for (Tube t : nodes_) {
    if (s.subset_of(t)) return t;
  }
  throw PreconditionError("set is not inside the ground set");
}

std::vector<Tube> TubingTree::inner_nodes() const {
  std::vector<Tube> out;
  for (Tube t : nodes_) {
    if (t.size() > 1) out.push_back(t);
  }
  return out;
}

std::size_t PlaneTree::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t leaves) {
  std::vector<std::vector<PlaneTree>> by_size(leaves + 1);
  if (leaves == 0) return {};
  by_size[1].push_back(PlaneTree{});
  for (std::size_t n = 2; n <= leaves; ++n) {
    // Root children: a composition of n into at least two parts.
    std::vector<PlaneTree> forest;
    std::function<void(std::size_t)> compose = [&](std::size_t rest) {
      if (rest == 0) {
        if (forest.size() >= 2) by_size[n].push_back(PlaneTree{forest});
        return;
      }
      for (std::size_t part = 1; part <= rest; ++part) {
        if (part == n) continue;
        for (const auto& sub : by_size[part]) {
          forest.push_back(sub);
          compose(rest - part);
          forest.pop_back();
        }
      }
    };
    compose(n);
  }
  return by_size[leaves];
}

Tubing tubing_from_plane_tree(const Poset& chain, const PlaneTree& tree) {
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!chain.less(i, i + 1)) throw PreconditionError("tubing_from_plane_tree expects a chain");
  }
  if (tree.leaf_count() != n) {
    throw MalformedTreeError("tree has " + std::to_string(tree.leaf_count()) + " leaves, chain has " +
                             std::to_string(n) + " elements");
  }
  Tubing out;
  std::function<std::size_t(const PlaneTree&, std::size_t, bool)> walk = [&](const PlaneTree& node, std::size_t first,
                                                                            bool is_root) -> std::size_t {
    if (node.children.empty()) return first + 1;
    if (node.children.size() < 2) throw MalformedTreeError("internal node with a single child");
    std::size_t next = first;
    for (const auto& c : node.children) next = walk(c, next, false);
    if (!is_root) out.push_back(ElementSet::first(next) - ElementSet::first(first));
    return next;
  };
  walk(tree, 0, true);
  return make_tubing(chain, std::move(out));
}

std::vector<std::vector<std::vector<ElementId>>> enumerate_ordered_set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<ElementId>>> out;
  std::vector<std::vector<ElementId>> blocks;
  std::function<void(ElementSet)> choose = [&](ElementSet rest) {
    if (rest.empty()) {
      out.push_back(blocks);
      return;
    }
    // Nonempty subsets of `rest` as the next block.
    for (std::uint64_t sub = rest.bits(); sub != 0; sub = (sub - 1) & rest.bits()) {
      std::vector<ElementId> block;
      ElementSet(sub).for_each([&](std::size_t i) { block.push_back(static_cast<ElementId>(i + 1)); });
      blocks.push_back(std::move(block));
      choose(rest - ElementSet(sub));
      blocks.pop_back();
    }
  };
  choose(ElementSet::first(n));
  std::sort(out.begin(), out.end());
  return out;
}

Tubing tubing_from_ordered_set_partition(const Poset& claw, const std::vector<std::vector<ElementId>>& blocks) {
  std::optional<std::size_t> bottom;
  for (std::size_t i = 0; i < claw.size(); ++i) {
    if (claw.strictly_above(i) == claw.all().without(i)) bottom = i;
  }
  if (!bottom) throw PreconditionError("poset is not a claw: no bottom element");
  const ElementSet leaves = claw.all().without(*bottom);
  leaves.for_each([&](std::size_t v) {
    if (!claw.strictly_above(v).empty()) throw PreconditionError("poset is not a claw: leaves are comparable");
  });

  ElementSet covered;
  std::vector<ElementSet> sets;
  for (const auto& block : blocks) {
    if (block.empty()) throw NotAPartitionError("empty block");
    ElementSet s;
    for (ElementId id : block) {
      auto idx = claw.find(id);
      if (!idx || !leaves.contains(*idx)) throw NotAPartitionError("block element " + std::to_string(id) + " is not a leaf");
      if (s.contains(*idx) || covered.contains(*idx)) throw NotAPartitionError("element " + std::to_string(id) + " repeated");
      s = s.with(*idx);
    }
    covered |= s;
    sets.push_back(s);
  }
  if (covered != leaves) throw NotAPartitionError("blocks do not cover the leaves");

  Tubing out;
  ElementSet tube = ElementSet::singleton(*bottom);
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    tube |= sets[i];
    out.push_back(tube);
  }
  return make_tubing(claw, std::move(out));
}

}  // namespace posetahedra
