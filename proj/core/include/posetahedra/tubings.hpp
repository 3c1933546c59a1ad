#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "posetahedra/element_set.hpp"
#include "posetahedra/poset.hpp"

namespace posetahedra {

/// A tube is a nonempty convex connected subset. Tubes are plain element
/// sets; constructors that accept user input validate them.
using Tube = ElementSet;
/// Tubes in canonical order (size, then lexicographic).
using Tubing = std::vector<Tube>;

/// Throws NotATubeError if `ids` is not a tube of `p`.
Tube make_tube(const Poset& p, std::span<const ElementId> ids);
void sort_canonical(std::vector<Tube>& tubes);

std::vector<Tube> enumerate_tubes(const Poset& p, bool proper_only);
bool is_proper(const Poset& p, Tube t);

bool nested_or_disjoint(Tube a, Tube b);
/// Edge a -> b of D_T: disjoint, and some i in a lies below some j in b.
bool d_edge(const Poset& p, Tube a, Tube b);
/// Adjacency lists of D_T, indexed like `tubes`.
std::vector<std::vector<std::size_t>> d_graph(const Poset& p, std::span<const Tube> tubes);

struct TubingCheck {
  bool ok = true;
  std::optional<std::pair<Tube, Tube>> crossing;
  /// Directed cycle of D_T, starting at its canonically smallest tube.
  std::vector<Tube> cycle;
  explicit operator bool() const { return ok; }
};

TubingCheck check_tubing(const Poset& p, std::span<const Tube> tubes);
bool is_tubing(const Poset& p, std::span<const Tube> tubes);
/// Validates tubes and the tubing conditions, returns the canonical form.
Tubing make_tubing(const Poset& p, std::vector<Tube> tubes);

/// Proper tubings in canonical order: by size, then lexicographic on tube
/// lists. With `max_only`, only those of size |P| - 2.
std::vector<Tubing> enumerate_proper_tubings(const Poset& p, bool max_only);

/// Tubings of `within` whose tubes partition it (including {within}).
std::vector<Tubing> enumerate_tubing_partitions(const Poset& p, ElementSet within);
bool is_tubing_partition(const Poset& p, ElementSet within, std::span<const Tube> tubes);

/// The rooted tree on T + {P} + singletons.
class TubingTree {
 public:
  TubingTree(const Poset& p, std::span<const Tube> tubing);

  /// All nodes in canonical order; the root P comes last.
  const std::vector<Tube>& nodes() const { return nodes_; }
  Tube root() const { return nodes_.back(); }
  bool contains(Tube t) const { return index_.count(t) != 0; }
  /// Throws PreconditionError for the root or a non-node.
  Tube parent(Tube t) const;
  /// Maximal nodes strictly inside t; they partition t.
  const std::vector<Tube>& children(Tube t) const;
  /// Smallest node containing `s`.
  Tube smallest_containing(ElementSet s) const;
  /// T + {P}, in canonical order.
  std::vector<Tube> inner_nodes() const;

 private:
  std::size_t node(Tube t) const;

  std::vector<Tube> nodes_;
  std::map<Tube, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<Tube>> children_;
};

/// Plane rooted tree; a node without children is a leaf.
struct PlaneTree {
  std::vector<PlaneTree> children;
  std::size_t leaf_count() const;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// All plane trees with `leaves` leaves whose internal nodes have at least two
/// children.
std::vector<PlaneTree> enumerate_plane_trees(std::size_t leaves);

/// Reads the tubing of the chain `chain` off a plane tree: each non-root
/// internal node contributes the interval of its descendant leaves. Throws
/// MalformedTreeError.
Tubing tubing_from_plane_tree(const Poset& chain, const PlaneTree& tree);

/// Ordered set partitions of {1..n}.
std::vector<std::vector<std::vector<ElementId>>> enumerate_ordered_set_partitions(std::size_t n);

/// tau_i = {bottom} + B_1 + ... + B_i for i < k, on a claw whose leaves are
/// partitioned by `blocks`. Throws NotAPartitionError.
Tubing tubing_from_ordered_set_partition(const Poset& claw, const std::vector<std::vector<ElementId>>& blocks);

}  // namespace posetahedra
