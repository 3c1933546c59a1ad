#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetahedra/face_lattice.hpp"
#include "posetahedra/polytope.hpp"
#include "posetahedra/poset.hpp"
#include "posetahedra/rational.hpp"
#include "posetahedra/realization.hpp"

namespace posetahedra {

/// A relation class i + dn < j + dn of an affine poset, stored by residues
/// (0-based) and the level difference of j over i.
struct AffineRelation {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t shift = 0;
  friend bool operator==(const AffineRelation&, const AffineRelation&) = default;
  friend auto operator<=>(const AffineRelation&, const AffineRelation&) = default;
};

/// Period-n poset on the integers generated by `gen_covers` (i in [1..n],
/// j any integer) together with i < i + n. Element i has residue
/// (i - 1) mod n and level floor((i - 1) / n).
class AffinePoset {
 public:
  /// Throws PreconditionError for bad input, CycleError if the closure is not
  /// antisymmetric, NotStronglyConnectedError if some residue cannot reach
  /// another.
  static AffinePoset build(std::size_t n, std::vector<IdPair> gen_covers);

  std::size_t order() const { return n_; }
  const std::vector<IdPair>& gen_covers() const { return gen_covers_; }

  std::size_t residue(ElementId i) const;
  std::int64_t level(ElementId i) const;
  /// The element with the given residue and level.
  ElementId element(std::size_t residue, std::int64_t level) const;

  /// Smallest level difference of a nonempty relation chain from residue a
  /// to residue b.
  std::int64_t distance(std::size_t a, std::size_t b) const { return dist_[a][b]; }
  bool less(ElementId i, ElementId j) const;
  bool leq(ElementId i, ElementId j) const { return i == j || less(i, j); }

  /// Cover classes, sorted.
  const std::vector<AffineRelation>& covers() const { return covers_; }
  /// Covers (i, j) with i in [1..n], sorted.
  std::vector<IdPair> cover_ids() const;
  /// Neighbours of i in the Hasse diagram, ascending.
  std::vector<ElementId> hasse_neighbors(ElementId i) const;
  /// Largest |j - i| over covers i < j.
  std::int64_t max_cover_span() const;

  friend bool operator==(const AffinePoset& a, const AffinePoset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IdPair> gen_covers_;
  std::vector<std::vector<std::int64_t>> dist_;
  std::vector<AffineRelation> covers_;
};

/// Sorted members; the canonical representative has its minimum in [1..n].
/// The whole poset is never represented as a list.
using AffineTube = std::vector<ElementId>;
/// Canonical representatives of tube classes in canonical order (size, then
/// lexicographic).
using AffineTubing = std::vector<AffineTube>;

/// phi(i) for i in [1..n] of an n-periodic linear extension, normalized so
/// that the smallest of these values is 1.
struct LinearExtension {
  std::size_t n = 0;
  std::vector<ElementId> window;
  ElementId operator()(ElementId i) const;
};

/// Built from the convex set S = {i : i - n < 0, i not < 0} and a linear
/// extension of S with ties broken by value. Throws MismatchError if the
/// result fails the check on a three-period window.
LinearExtension linear_extension(const AffinePoset& a);
/// The set S above, ascending.
std::vector<ElementId> extension_window(const AffinePoset& a);

AffineTube canonical_representative(const AffinePoset& a, AffineTube tube);
/// Nonempty, distinct residues, convex and connected.
bool is_affine_tube(const AffinePoset& a, const AffineTube& tube);
/// Canonical representative of a validated tube; throws NotATubeError.
AffineTube make_affine_tube(const AffinePoset& a, AffineTube tube);
bool is_proper(const AffinePoset& a, const AffineTube& tube);
void sort_canonical(AffineTubing& tubes);

/// One representative per class; without `proper_only` the singletons are
/// included. Members span at most (n - 1) times the largest cover span.
std::vector<AffineTube> enumerate_affine_tubes(const AffinePoset& a, bool proper_only);

/// Every shift of b meeting a is nested with a, in one direction or the other.
bool affine_nested_or_disjoint(const AffinePoset& a, const AffineTube& x, const AffineTube& y);

struct AffineTubingCheck {
  bool ok = true;
  std::optional<std::pair<AffineTube, AffineTube>> crossing;
  bool cyclic = false;
  explicit operator bool() const { return ok; }
};

/// Pairwise nested or disjoint over all shifts, and the periodic disjointness
/// digraph is acyclic. Tubes must be valid; duplicate classes fail.
AffineTubingCheck check_affine_tubing(const AffinePoset& a, const std::vector<AffineTube>& tubes);
bool is_affine_tubing(const AffinePoset& a, const std::vector<AffineTube>& tubes);
/// Validates, canonicalizes and sorts. Throws NotATubeError, NotATubingError.
AffineTubing make_affine_tubing(const AffinePoset& a, std::vector<AffineTube> tubes);

/// Proper tubings, sorted by size then lexicographically; with `max_only`
/// only those with n - 1 classes.
std::vector<AffineTubing> enumerate_proper_affine_tubings(const AffinePoset& a, bool max_only);
/// Sets of classes whose shifts partition the integers, excluding the whole
/// poset. The all-singleton partition is included.
std::vector<AffineTubing> enumerate_affine_tubing_partitions(const AffinePoset& a);

/// The order polytope in {sum = 0} with x_{i+n} = x_i + c. One vertex per
/// class of maximal proper tubes, one facet per cover between distinct
/// residues, labelled by the cover tube.
RationalPolytope affine_order_polytope(const AffinePoset& a, const Rational& c = Rational(1));

/// Tube classes in canonical order, followed by the whole poset.
TubeComplex affine_tube_complex(const AffinePoset& a);

/// Proper affine tubings under reverse inclusion; a face with k classes has
/// dimension n - k - 1.
FaceLattice cyclohedron_face_lattice(const AffinePoset& a);

/// C(P)^* by stellar subdivisions of the dual affine order polytope, and its
/// polar. Throws MismatchError if it disagrees with the face lattice.
Realization realize_affine_cyclohedron(const AffinePoset& a);

/// (K^- - n) + {0} + K^+ for a circular claw of order n. Throws
/// PreconditionError, OverlapError, EmptyError.
AffineTube tube_from_signed_pair(const AffinePoset& claw, const std::vector<ElementId>& k_plus,
                                 const std::vector<ElementId>& k_minus);

/// The face of a proper tubing as a product: a poset associahedron factor per
/// class and an affine cyclohedron factor for the quotient of the whole poset.
struct AffineFaceFactors {
  /// tau / T[tau] for each class of the tubing, in its order.
  std::vector<Quotient> finite;
  AffinePoset top;
  /// Representative block of each element 1..n' of `top`.
  std::vector<AffineTube> top_blocks;
  int dimension() const;
};

AffineFaceFactors affine_face_product_decomposition(const AffinePoset& a, const AffineTubing& tubing);

/// The finite subposet on the members of a tube; ids are the members.
Poset tube_subposet(const AffinePoset& a, const AffineTube& tube);

std::string format_tube(const AffineTube& tube);

namespace corpus {

/// The integers with their usual order, of period n.
AffinePoset circular_chain(std::size_t n);
/// Periodic closure of 0 < 1, ..., n - 1 < n.
AffinePoset circular_claw(std::size_t n);

}  // namespace corpus

}  // namespace posetahedra
