#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "posetahedra/face_lattice.hpp"
#include "posetahedra/polytope.hpp"
#include "posetahedra/poset.hpp"

namespace posetahedra {

/// Tube data shared by the finite and the affine realization pipelines.
/// Tubes are numbered in canonical order; the whole ground set comes last.
struct TubeComplex {
  using TubeIds = std::vector<std::size_t>;

  /// |P| for a finite poset, the order n for an affine one.
  std::size_t ground_size = 0;
  std::size_t polytope_dim = 0;
  std::vector<TubeLabel> labels;
  std::vector<std::size_t> sizes;
  std::size_t whole = 0;
  /// contains[a][b]: tube b (up to shift) lies inside tube a.
  std::vector<std::vector<bool>> contains;
  /// Tubing test on sorted tube ids.
  std::function<bool(const TubeIds&)> is_tubing;
  /// Tubing partitions of a tube into at least two smaller tubes (for the
  /// whole affine poset: at least one class).
  std::function<std::vector<TubeIds>(std::size_t)> partitions;

  bool is_singleton(std::size_t t) const { return sizes[t] == 1; }
  bool is_proper(std::size_t t) const { return t != whole && sizes[t] > 1; }
  FaceLabel label_of(const TubeIds& ids) const;
};

TubeComplex finite_tube_complex(const Poset& p);

using AdmTubing = TubeComplex::TubeIds;

/// Tubings containing the whole tube, with frozen tubes inclusion-minimal and
/// melted tubes partitioned by their maximal subtubes.
struct AdmissiblePoset {
  const TubeComplex* complex = nullptr;
  std::vector<bool> melted;
  std::vector<AdmTubing> elements;
  std::vector<int> dims;

  std::size_t index_of(const AdmTubing& t) const;
  bool contains(const AdmTubing& t) const { return index_.count(t) != 0; }
  /// The relation T <=_M T'.
  bool leq(const AdmTubing& t, const AdmTubing& u) const;
  std::vector<std::size_t> of_dim(int d) const;
  void index_elements();

 private:
  std::map<AdmTubing, std::size_t> index_;
};

/// `melted` is indexed by tube id and must be upward closed and contain the
/// whole tube.
AdmissiblePoset admissible_tubings(const TubeComplex& complex, const std::vector<bool>& melted);

/// A polytope whose faces are labelled by admissible tubings.
struct StagePolytope {
  RationalPolytope polytope;
  std::vector<AdmTubing> vertex_tubings;
  std::vector<AdmTubing> facet_tubings;
};

/// Order polytope: vertices from ideal/filter splits, one facet per cover,
/// in the chart of {sum = 0, alpha_P = 1} centred at the vertex centroid.
RationalPolytope order_polytope(const Poset& p);

/// Stellar subdivision of q at the face spanned by `face_vertices`. The new
/// facet hyperplanes are solved from the facet labels of `next`; the result is
/// certified against `next`. Throws NotAFaceError, EpsilonInfeasibleError,
/// MismatchError.
StagePolytope stellar_subdivide(const StagePolytope& q, const std::vector<std::size_t>& face_vertices,
                                const AdmTubing& new_vertex, const AdmissiblePoset& next);

/// Checks every face of `adm` against the realized polytope: its vertex set is
/// exactly the common tight set of the facets above it and has affine rank
/// dim + 1. Throws MismatchError.
void certify_against(const StagePolytope& q, const AdmissiblePoset& adm);

struct MeltStage {
  TubeLabel tube;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  std::size_t max_bits = 0;
};

struct Realization {
  RationalPolytope dual;
  RationalPolytope primal;
  FaceLattice lattice;
  std::vector<MeltStage> stages;
  std::size_t max_bits = 0;
};

/// Runs the melting induction from the dual of `base` (whose vertex and facet
/// tubings are given) and cross-checks the result against `lattice`.
Realization realize_from_base(const TubeComplex& complex, const RationalPolytope& base,
                              const std::vector<AdmTubing>& base_vertex_tubings,
                              const std::vector<AdmTubing>& base_facet_tubings, FaceLattice lattice);

/// Dual A(P)^* by stellar subdivisions of Ord(P)^*, and its polar A(P).
/// Throws MismatchError if the result disagrees with the face lattice.
Realization realize_poset_associahedron(const Poset& p);

/// Checks that `primal` has one facet per proper tube and one vertex per
/// maximal tubing, with vertex-facet incidence given by membership.
void check_against_lattice(const RationalPolytope& primal, const FaceLattice& lattice);

}  // namespace posetahedra
