#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "posetahedra/element_set.hpp"
#include "posetahedra/rational.hpp"

namespace posetahedra {

using ElementId = std::int64_t;
using IdPair = std::pair<ElementId, ElementId>;

/// Finite connected poset given by its Hasse diagram.
///
/// Elements are stored in ascending id order; all set-valued queries use
/// ElementSet over those indices. Immutable after construction.
class Poset {
 public:
  /// Builds the poset generated by `relations` (i, j) meaning i < j.
  /// Redundant relations are reduced away.
  static Poset from_relations(std::span<const IdPair> relations);

  std::size_t size() const { return ids_.size(); }
  ElementSet all() const { return ElementSet::first(size()); }
  const std::vector<ElementId>& ids() const { return ids_; }
  ElementId id(std::size_t index) const { return ids_.at(index); }
  std::optional<std::size_t> find(ElementId id) const;
  /// Throws IndexError for unknown ids.
  std::size_t index_of(ElementId id) const;

  bool less(std::size_t i, std::size_t j) const { return above_[i].contains(j); }
  bool leq(std::size_t i, std::size_t j) const { return i == j || less(i, j); }
  ElementSet strictly_above(std::size_t i) const { return above_[i]; }
  ElementSet strictly_below(std::size_t i) const { return below_[i]; }
  /// Neighbours of i in the undirected Hasse diagram.
  ElementSet hasse_neighbors(std::size_t i) const { return neighbors_[i]; }

  /// Cover relations as index pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::vector<IdPair> cover_ids() const;

  ElementSet set_of(std::span<const ElementId> ids) const;
  std::vector<ElementId> ids_of(ElementSet s) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.ids_ == b.ids_ && a.covers_ == b.covers_; }

 private:
  std::vector<ElementId> ids_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> neighbors_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

bool is_convex(const Poset& p, ElementSet s);
bool is_connected(const Poset& p, ElementSet s);
/// Nonempty, convex and connected.
bool is_tube_set(const Poset& p, ElementSet s);

/// Components of `s` in the induced Hasse graph.
std::vector<ElementSet> connected_components(const Poset& p, ElementSet s);

struct IdealFilterSplit {
  ElementSet ideal;
  ElementSet filter;
  friend bool operator==(const IdealFilterSplit&, const IdealFilterSplit&) = default;
};

/// Splits P = I + F with I a connected order ideal and F a connected order
/// filter, both nonempty. Sorted by ideal in canonical order.
std::vector<IdealFilterSplit> ideal_filter_splits(const Poset& p);

struct Quotient {
  Poset poset;
  /// Block of P represented by each quotient element (by quotient index).
  std::vector<ElementSet> blocks;
};

/// Quotient of `p` by a tubing partition of `within` (default: all of P).
/// Each block is represented by its smallest id. Throws NotAPartitionError or
/// NotATubingError.
Quotient quotient_poset(const Poset& p, std::span<const ElementSet> partition);
Quotient quotient_poset(const Poset& p, ElementSet within, std::span<const ElementSet> partition);

/// Induced subposet on a connected subset; ids are preserved.
Poset induced_subposet(const Poset& p, ElementSet s);

/// Coordinate vector indexed by a set of elements, in ascending index order.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(ElementSet support, RationalVector values);

  ElementSet support() const { return support_; }
  const RationalVector& values() const { return values_; }
  RationalVector& values() { return values_; }
  std::size_t size() const { return values_.size(); }
  /// Coordinate of element index i; throws IndexError if absent.
  const Rational& at(std::size_t i) const;
  /// Restriction to a subset of the support.
  Coordinates restrict(ElementSet sub) const;

  friend bool operator==(const Coordinates&, const Coordinates&) = default;

 private:
  ElementSet support_;
  RationalVector values_;
};

/// Linear functionals on coordinate vectors used to normalize order polytopes.
struct OrderFunctional {
  enum class Kind { kAlpha, kAverage };
  Kind kind = Kind::kAlpha;
  ElementSet tube;

  static OrderFunctional alpha(ElementSet tube) { return {Kind::kAlpha, tube}; }
  static OrderFunctional average(ElementSet tube) { return {Kind::kAverage, tube}; }

  Rational operator()(const Poset& p, const Coordinates& x) const;
  /// Coefficients over all of P (zero outside the tube).
  RationalVector coefficients(const Poset& p) const;
};

/// Sum of x_j - x_i over covers i < j inside tau.
Rational alpha(const Poset& p, ElementSet tau, const Coordinates& x);
Rational average(ElementSet tau, const Coordinates& x);
Coordinates proj_sigma0(ElementSet tau, const Coordinates& x);
/// proj_sigma0 scaled by 1/alpha; throws DegenerateError when alpha is zero.
Coordinates res(const Poset& p, ElementSet tau, const Coordinates& x);

}  // namespace posetahedra
