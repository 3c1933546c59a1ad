#include "posetahedra/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "posetahedra/errors.hpp"
#include "posetahedra/linalg.hpp"

namespace posetahedra {

RationalVector Chart::to_ambient(const RationalVector& y) const {
  if (y.size() != basis.size()) throw PreconditionError("chart coordinate length mismatch");
  RationalVector x = origin;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[k] * basis[k][i];
  }
  return x;
}

Chart Chart::identity(std::size_t d) {
  Chart c;
  c.origin.assign(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector e(d, Rational(0));
    e[k] = 1;
    c.basis.push_back(std::move(e));
  }
  return c;
}

std::vector<RationalVector> RationalPolytope::ambient_vertices() const {
  std::vector<RationalVector> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(chart.to_ambient(v));
  return out;
}

std::size_t RationalPolytope::max_bits() const {
  std::size_t best = 0;
  for (const auto& v : vertices) best = std::max(best, max_bit_size(v));
  for (const auto& f : facets) best = std::max({best, max_bit_size(f.normal), bit_size(f.offset)});
  return best;
}

std::vector<std::vector<bool>> compute_incidence(const std::vector<RationalVector>& vertices,
                                                 const std::vector<Halfspace>& facets) {
  std::vector<std::vector<bool>> inc(facets.size(), std::vector<bool>(vertices.size(), false));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t v = 0; v < vertices.size(); ++v) inc[f][v] = dot(facets[f].normal, vertices[v]) == facets[f].offset;
  }
  return inc;
}

void certify(const RationalPolytope& q) {
  const std::size_t d = q.dim();
  if (q.vertices.empty()) throw CertificationError("polytope has no vertices");
  for (const auto& v : q.vertices) {
    if (v.size() != d) throw CertificationError("vertex has the wrong number of coordinates");
  }
  std::set<RationalVector> distinct(q.vertices.begin(), q.vertices.end());
  if (distinct.size() != q.vertices.size()) throw CertificationError("repeated vertex");
  if (linalg::affine_rank(q.vertices) != d + 1) throw CertificationError("polytope is not full-dimensional in its chart");
  if (q.incidence.size() != q.facets.size()) throw CertificationError("incidence has the wrong number of rows");

  for (std::size_t f = 0; f < q.facets.size(); ++f) {
    const auto& h = q.facets[f];
    if (h.normal.size() != d) throw CertificationError("facet normal has the wrong length");
    std::vector<RationalVector> tight;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      Rational value = dot(h.normal, q.vertices[v]);
      if (value > h.offset) {
        throw CertificationError("vertex " + std::to_string(v) + " violates facet " + std::to_string(f));
      }
      if ((value == h.offset) != q.incidence[f][v]) {
        throw CertificationError("incidence mismatch at facet " + std::to_string(f) + ", vertex " + std::to_string(v));
      }
      if (value == h.offset) tight.push_back(q.vertices[v]);
    }
    if (linalg::affine_rank(tight) != d) throw CertificationError("facet " + std::to_string(f) + " is not a facet");
  }
  for (std::size_t v = 0; v < q.vertices.size() && d > 0; ++v) {
    linalg::Matrix normals;
    for (std::size_t f = 0; f < q.facets.size(); ++f) {
      if (q.incidence[f][v]) normals.push_back(q.facets[f].normal);
    }
    if (linalg::rank(normals, d) != d) throw CertificationError("vertex " + std::to_string(v) + " is not a vertex");
  }
}

RationalVector vertex_centroid(const RationalPolytope& q) {
  RationalVector c(q.dim(), Rational(0));
  for (const auto& v : q.vertices) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += v[k];
  }
  for (auto& x : c) x /= static_cast<long>(q.vertices.size());
  return c;
}

RationalPolytope polar_dual(const RationalPolytope& q) {
  const std::size_t d = q.dim();
  const RationalVector c = vertex_centroid(q);
  RationalPolytope dual;
  dual.chart = Chart::identity(d);
  for (const auto& h : q.facets) {
    Rational shifted = h.offset - dot(h.normal, c);
    if (shifted <= 0) throw OriginNotInteriorError("vertex centroid is not interior to a facet");
    RationalVector u(d);
    for (std::size_t k = 0; k < d; ++k) u[k] = h.normal[k] / shifted;
    dual.vertices.push_back(std::move(u));
  }
  for (const auto& v : q.vertices) {
    RationalVector n(d);
    for (std::size_t k = 0; k < d; ++k) n[k] = v[k] - c[k];
    dual.facets.push_back(Halfspace{std::move(n), Rational(1)});
  }
  dual.incidence.assign(q.vertices.size(), std::vector<bool>(q.facets.size(), false));
  for (std::size_t f = 0; f < q.facets.size(); ++f) {
    for (std::size_t v = 0; v < q.vertices.size(); ++v) dual.incidence[v][f] = q.incidence[f][v];
  }
  dual.vertex_labels = q.facet_labels;
  dual.facet_labels = q.vertex_labels;
  return dual;
}

}  // namespace posetahedra
