#pragma once

#include <cstddef>
#include <vector>

#include "posetahedra/face_lattice.hpp"
#include "posetahedra/rational.hpp"

namespace posetahedra {

/// Affine coordinates on a subspace: point = origin + sum_k y_k * basis[k].
struct Chart {
  RationalVector origin;
  std::vector<RationalVector> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t ambient_dim() const { return origin.size(); }
  RationalVector to_ambient(const RationalVector& y) const;
  /// Identity chart on R^d.
  static Chart identity(std::size_t d);

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Inequality <normal, x> <= offset.
struct Halfspace {
  RationalVector normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Paired V- and H-representation in chart coordinates.
struct RationalPolytope {
  Chart chart;
  std::vector<RationalVector> vertices;
  std::vector<Halfspace> facets;
  /// incidence[f][v]: vertex v is tight on facet f.
  std::vector<std::vector<bool>> incidence;
  std::vector<FaceLabel> vertex_labels;
  std::vector<FaceLabel> facet_labels;

  std::size_t dim() const { return chart.dim(); }
  std::size_t ambient_dim() const { return chart.ambient_dim(); }
  std::vector<RationalVector> ambient_vertices() const;
  std::size_t max_bits() const;

  friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;
};

std::vector<std::vector<bool>> compute_incidence(const std::vector<RationalVector>& vertices,
                                                 const std::vector<Halfspace>& facets);

/// Checks that every vertex satisfies every inequality, tight sets match the
/// stored incidence, the polytope is full-dimensional, facets are genuine
/// (their tight vertices span a hyperplane) and vertices are genuine (their
/// tight normals have full rank). Throws CertificationError.
void certify(const RationalPolytope& q);

RationalVector vertex_centroid(const RationalPolytope& q);

/// Polar dual about the vertex centroid. Facet normals are scaled to offset 1;
/// labels and incidence are transposed.
RationalPolytope polar_dual(const RationalPolytope& q);

}  // namespace posetahedra
