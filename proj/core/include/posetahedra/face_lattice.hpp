#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "posetahedra/poset.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra {

/// A combinatorial label: a list of tubes, each a sorted list of element ids.
using TubeLabel = std::vector<ElementId>;
using FaceLabel = std::vector<TubeLabel>;

struct Face {
  FaceLabel label;
  int dim = 0;
  /// Set only for the empty face of a tubing lattice, whose label is unused.
  bool is_empty = false;
};

/// Graded face poset with explicit covering relations.
class FaceLattice {
 public:
  int dimension = 0;
  std::vector<Face> faces;
  /// (lower, upper) index pairs; the lower face is a facet of the upper one.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t empty_face = 0;
  std::size_t full_face = 0;

  std::optional<std::size_t> find(const FaceLabel& label) const;
  std::vector<std::size_t> faces_of_dim(int d) const;
  /// Indices of vertices (dimension 0 faces) contained in face `f`.
  std::vector<std::size_t> vertices_of(std::size_t f) const;
  void index_labels();

 private:
  std::map<FaceLabel, std::size_t> by_label_;
};

FaceLabel label_of(const Poset& p, const std::vector<Tube>& tubes);

/// Faces of A(P): proper tubings under reverse inclusion, plus the empty face.
FaceLattice associahedron_face_lattice(const Poset& p);
/// Faces of Ord(P): tubing partitions under refinement; {P} is the empty face.
FaceLattice order_polytope_face_lattice(const Poset& p);

/// Reverse-inclusion lattice of a simplicial complex given by its faces
/// (labels of the faces of a simple polytope of dimension `dimension`).
FaceLattice tubing_lattice(const std::vector<FaceLabel>& tubings, int dimension);

/// f_0, ..., f_d (the polytope itself counts as f_d). Throws NotGradedError.
std::vector<std::int64_t> f_vector(const FaceLattice& lattice);
/// h-vector of the dual simplicial complex.
std::vector<std::int64_t> h_vector(const FaceLattice& lattice);
/// Sum over i = -1..d of (-1)^i f_i, counting the empty face.
std::int64_t euler_sum(const FaceLattice& lattice);
/// Throws NotGradedError unless every cover raises dimension by one and every
/// face other than the extremes has covers on both sides.
void check_graded(const FaceLattice& lattice);
/// Every vertex lies in exactly `dimension` edges.
bool is_simple(const FaceLattice& lattice);

struct FlagCheck {
  bool flag = true;
  /// A minimal non-face: not a tubing, but every proper subset is.
  Tubing witness;
};

FlagCheck is_flag_dual(const Poset& p);

/// tau / T[tau] for every tau in T + {P}, in canonical order of tau.
std::vector<Quotient> face_product_decomposition(const Poset& p, const Tubing& tubing);

}  // namespace posetahedra
