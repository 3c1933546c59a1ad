#include "posetahedra/realization.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>

#include "posetahedra/errors.hpp"
#include "posetahedra/linalg.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra {

namespace {

std::string show(const TubeComplex& c, const AdmTubing& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " ";
    std::string tube;
    for (auto id : c.labels[t[i]]) tube += (tube.empty() ? "" : ",") + std::to_string(id);
    out += "[" + tube + "]";
  }
  return out + "}";
}

bool sorted_contains(const AdmTubing& t, std::size_t id) { return std::binary_search(t.begin(), t.end(), id); }

}  // namespace

FaceLabel TubeComplex::label_of(const TubeIds& ids) const {
  FaceLabel out;
  for (std::size_t id : ids) out.push_back(labels[id]);
  return out;
}

TubeComplex finite_tube_complex(const Poset& p) {
  auto tubes = std::make_shared<std::vector<Tube>>(enumerate_tubes(p, false));
  auto id_of = std::make_shared<std::map<Tube, std::size_t>>();
  TubeComplex c;
  c.ground_size = p.size();
  c.polytope_dim = p.size() - 2;
  for (std::size_t i = 0; i < tubes->size(); ++i) {
    (*id_of)[(*tubes)[i]] = i;
    c.labels.push_back(p.ids_of((*tubes)[i]));
    c.sizes.push_back((*tubes)[i].size());
  }
  c.whole = tubes->size() - 1;
  c.contains.assign(tubes->size(), std::vector<bool>(tubes->size(), false));
  for (std::size_t a = 0; a < tubes->size(); ++a) {
    for (std::size_t b = 0; b < tubes->size(); ++b) c.contains[a][b] = (*tubes)[b].subset_of((*tubes)[a]);
  }
  c.is_tubing = [p, tubes](const AdmTubing& ids) {
    std::vector<Tube> sets;
    sets.reserve(ids.size());
    for (std::size_t id : ids) sets.push_back((*tubes)[id]);
    return is_tubing(p, sets);
  };
  auto cache = std::make_shared<std::map<std::size_t, std::vector<AdmTubing>>>();
  c.partitions = [p, tubes, id_of, cache](std::size_t t) {
    auto hit = cache->find(t);
    if (hit != cache->end()) return hit->second;
    std::vector<AdmTubing> out;
    for (const auto& part : enumerate_tubing_partitions(p, (*tubes)[t])) {
      if (part.size() < 2) continue;
      AdmTubing ids;
      for (Tube s : part) ids.push_back(id_of->at(s));
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
    (*cache)[t] = out;
    return out;
  };
  return c;
}

std::size_t AdmissiblePoset::index_of(const AdmTubing& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw NotAFaceError("tubing is not admissible: " + show(*complex, t));
  return it->second;
}

bool AdmissiblePoset::leq(const AdmTubing& t, const AdmTubing& u) const {
  for (std::size_t tau : t) {
    if (melted[tau]) {
      if (!sorted_contains(u, tau)) return false;
      continue;
    }
    bool inside = false;
    for (std::size_t sigma : u) {
      if (!melted[sigma] && complex->contains[sigma][tau]) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::vector<std::size_t> AdmissiblePoset::of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (dims[i] == d) out.push_back(i);
  }
  return out;
}

void AdmissiblePoset::index_elements() {
  index_.clear();
  for (std::size_t i = 0; i < elements.size(); ++i) index_[elements[i]] = i;
}

AdmissiblePoset admissible_tubings(const TubeComplex& complex, const std::vector<bool>& melted) {
  if (melted.size() != complex.labels.size() || !melted[complex.whole]) {
    throw PreconditionError("melted set must be indexed by tube and contain the whole tube");
  }
  for (std::size_t a = 0; a < melted.size(); ++a) {
    if (complex.sizes[a] == 1 && melted[a]) throw PreconditionError("singleton tubes stay frozen");
    for (std::size_t b = 0; b < melted.size(); ++b) {
      if (melted[b] && complex.contains[a][b] && !melted[a]) throw PreconditionError("melted set is not upward closed");
    }
  }

  AdmissiblePoset adm;
  adm.complex = &complex;
  adm.melted = melted;
  std::set<AdmTubing> found;
  AdmTubing current{complex.whole};
  std::vector<std::size_t> pending{complex.whole};

  // Expand melted tubes one at a time; frozen tubes are leaves.
  std::function<void()> expand = [&]() {
    if (pending.empty()) {
      AdmTubing t = current;
      std::sort(t.begin(), t.end());
      if (complex.is_tubing(t)) found.insert(std::move(t));
      return;
    }
    std::size_t tau = pending.back();
    pending.pop_back();
    for (const auto& part : complex.partitions(tau)) {
      std::size_t mark = pending.size();
      for (std::size_t s : part) {
        current.push_back(s);
        if (melted[s]) pending.push_back(s);
      }
      expand();
      pending.resize(mark);
      current.resize(current.size() - part.size());
    }
    pending.push_back(tau);
  };
  expand();

  const long n = static_cast<long>(complex.ground_size);
  for (const auto& t : found) {
    long m = 0;
    for (std::size_t id : t) m += melted[id] ? 1 : 0;
    long f = static_cast<long>(t.size()) - m;
    adm.elements.push_back(t);
    adm.dims.push_back(static_cast<int>(n + m - f - 2));
  }
  adm.index_elements();
  return adm;
}

RationalPolytope order_polytope(const Poset& p) {
  const std::size_t n = p.size();
  const auto splits = ideal_filter_splits(p);
  std::vector<RationalVector> ambient;
  for (const auto& s : splits) {
    long e = 0;
    for (const auto& [i, j] : p.covers()) e += (s.ideal.contains(i) && s.filter.contains(j)) ? 1 : 0;
    Rational a(-static_cast<long>(s.filter.size()), e * static_cast<long>(n));
    Rational b(static_cast<long>(s.ideal.size()), e * static_cast<long>(n));
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = s.ideal.contains(i) ? a : b;
    ambient.push_back(std::move(x));
  }

  linalg::Matrix constraints{RationalVector(n, Rational(1)), OrderFunctional::alpha(p.all()).coefficients(p)};
  RationalPolytope q;
  q.chart.basis = linalg::nullspace(constraints, n);
  q.chart.origin.assign(n, Rational(0));
  for (const auto& x : ambient) {
    for (std::size_t i = 0; i < n; ++i) q.chart.origin[i] += x[i];
  }
  for (auto& v : q.chart.origin) v /= static_cast<long>(ambient.size());

  const std::size_t d = q.chart.dim();
  if (d + 2 != n) throw DegenerateError("order polytope chart has the wrong dimension");
  linalg::Matrix columns(n, RationalVector(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) columns[i][k] = q.chart.basis[k][i];
  }
  for (std::size_t s = 0; s < splits.size(); ++s) {
    RationalVector shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = ambient[s][i] - q.chart.origin[i];
    if (d == 0) {
      q.vertices.push_back({});
    } else {
      auto y = linalg::solve_unique(columns, shifted);
      if (!y) throw DegenerateError("order polytope vertex outside its chart");
      q.vertices.push_back(std::move(*y));
    }
    std::vector<Tube> parts{splits[s].ideal, splits[s].filter};
    sort_canonical(parts);
    q.vertex_labels.push_back(label_of(p, parts));
  }
  if (d > 0) {
    for (const auto& [i, j] : p.covers()) {
      RationalVector normal(d);
      for (std::size_t k = 0; k < d; ++k) normal[k] = q.chart.basis[k][i] - q.chart.basis[k][j];
      q.facets.push_back(Halfspace{std::move(normal), q.chart.origin[j] - q.chart.origin[i]});
      const ElementId lo = std::min(p.id(i), p.id(j)), hi = std::max(p.id(i), p.id(j));
      q.facet_labels.push_back(FaceLabel{{lo, hi}});
    }
  }
  q.incidence = compute_incidence(q.vertices, q.facets);
  certify(q);
  return q;
}

StagePolytope stellar_subdivide(const StagePolytope& q, const std::vector<std::size_t>& face_vertices,
                                const AdmTubing& new_vertex, const AdmissiblePoset& next) {
  const RationalPolytope& poly = q.polytope;
  const std::size_t d = poly.dim();
  if (face_vertices.empty()) throw NotAFaceError("stellar subdivision at the empty face");

  // The face must be the common tight set of the facets containing it.
  std::vector<bool> in_face(poly.vertices.size(), false);
  for (std::size_t v : face_vertices) in_face.at(v) = true;
  std::vector<bool> closure(poly.vertices.size(), true);
  for (std::size_t f = 0; f < poly.facets.size(); ++f) {
    bool contains_face = std::all_of(face_vertices.begin(), face_vertices.end(),
                                     [&](std::size_t v) { return poly.incidence[f][v]; });
    if (!contains_face) continue;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) closure[v] = closure[v] && poly.incidence[f][v];
  }
  if (closure != in_face) throw NotAFaceError("vertex set does not span a face");

  RationalVector centroid(d, Rational(0));
  for (std::size_t v : face_vertices) {
    for (std::size_t k = 0; k < d; ++k) centroid[k] += poly.vertices[v][k];
  }
  for (auto& x : centroid) x /= static_cast<long>(face_vertices.size());

  std::optional<Rational> bound;
  for (const auto& h : poly.facets) {
    if (h.offset <= 0) throw OriginNotInteriorError("origin is not interior to the polytope");
    Rational value = dot(h.normal, centroid);
    if (value == h.offset || value <= 0) continue;
    Rational t = h.offset / value - 1;
    if (!bound || t < *bound) bound = t;
  }
  Rational eps = bound ? Rational(*bound / 2) : Rational(1);
  if (eps <= 0) throw EpsilonInfeasibleError("no positive epsilon keeps the new vertex beneath the other facets");
  RationalVector apex(d);
  for (std::size_t k = 0; k < d; ++k) apex[k] = (1 + eps) * centroid[k];

  StagePolytope out;
  out.polytope.chart = poly.chart;
  for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
    if (!next.contains(q.vertex_tubings[v])) continue;
    out.polytope.vertices.push_back(poly.vertices[v]);
    out.vertex_tubings.push_back(q.vertex_tubings[v]);
  }
  out.polytope.vertices.push_back(std::move(apex));
  out.vertex_tubings.push_back(new_vertex);

  for (std::size_t f : next.of_dim(static_cast<int>(d) - 1)) {
    const AdmTubing& label = next.elements[f];
    linalg::Matrix rows;
    for (std::size_t v = 0; v < out.vertex_tubings.size(); ++v) {
      if (next.leq(out.vertex_tubings[v], label)) rows.push_back(out.polytope.vertices[v]);
    }
    auto normal = rows.empty() ? std::nullopt : linalg::solve_unique(rows, RationalVector(rows.size(), Rational(1)));
    if (!normal) throw MismatchError("facet " + show(*next.complex, label) + " is not spanned by its vertices");
    out.polytope.facets.push_back(Halfspace{std::move(*normal), Rational(1)});
    out.facet_tubings.push_back(label);
  }
  for (const auto& t : out.vertex_tubings) out.polytope.vertex_labels.push_back(next.complex->label_of(t));
  for (const auto& t : out.facet_tubings) out.polytope.facet_labels.push_back(next.complex->label_of(t));
  out.polytope.incidence = compute_incidence(out.polytope.vertices, out.polytope.facets);

  std::vector<RationalVector> rows = out.polytope.vertices;
  for (const auto& h : out.polytope.facets) rows.push_back(h.normal);
  enforce_bit_limit(rows, "stellar subdivision");

  try {
    certify(out.polytope);
  } catch (const CertificationError& e) {
    throw MismatchError(std::string("subdivided polytope failed certification: ") + e.what());
  }
  certify_against(out, next);
  return out;
}

void certify_against(const StagePolytope& q, const AdmissiblePoset& adm) {
  const RationalPolytope& poly = q.polytope;
  const int d = static_cast<int>(poly.dim());
  auto same_set = [](std::vector<AdmTubing> a, std::vector<AdmTubing> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  std::vector<AdmTubing> expected_vertices, expected_facets;
  for (std::size_t i : adm.of_dim(0)) expected_vertices.push_back(adm.elements[i]);
  for (std::size_t i : adm.of_dim(d - 1)) expected_facets.push_back(adm.elements[i]);
  if (!same_set(expected_vertices, q.vertex_tubings)) throw MismatchError("vertex labels differ from the admissible tubings");
  if (!same_set(expected_facets, q.facet_tubings)) throw MismatchError("facet labels differ from the admissible tubings");

  for (std::size_t f = 0; f < poly.facets.size(); ++f) {
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      if (poly.incidence[f][v] != adm.leq(q.vertex_tubings[v], q.facet_tubings[f])) {
        throw MismatchError("incidence of " + show(*adm.complex, q.vertex_tubings[v]) + " and " +
                            show(*adm.complex, q.facet_tubings[f]) + " differs from the order");
      }
    }
  }
  for (std::size_t e = 0; e < adm.elements.size(); ++e) {
    const AdmTubing& t = adm.elements[e];
    std::vector<bool> tight(poly.vertices.size(), true);
    for (std::size_t f = 0; f < poly.facets.size(); ++f) {
      if (!adm.leq(t, q.facet_tubings[f])) continue;
      for (std::size_t v = 0; v < poly.vertices.size(); ++v) tight[v] = tight[v] && poly.incidence[f][v];
    }
    std::vector<RationalVector> points;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      bool below = adm.leq(q.vertex_tubings[v], t);
      if (below != tight[v]) throw MismatchError("face " + show(*adm.complex, t) + " is not cut out by its facets");
      if (below) points.push_back(poly.vertices[v]);
    }
    if (static_cast<int>(linalg::affine_rank(points)) != adm.dims[e] + 1) {
      throw MismatchError("face " + show(*adm.complex, t) + " has the wrong dimension");
    }
  }
}

void check_against_lattice(const RationalPolytope& primal, const FaceLattice& lattice) {
  const int d = lattice.dimension;
  std::vector<FaceLabel> vertices, facets;
  for (std::size_t f : lattice.faces_of_dim(0)) vertices.push_back(lattice.faces[f].label);
  for (std::size_t f : lattice.faces_of_dim(d - 1)) facets.push_back(lattice.faces[f].label);
  auto sorted = [](std::vector<FaceLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(vertices) != sorted(primal.vertex_labels)) throw MismatchError("realized vertices differ from the lattice");
  if (sorted(facets) != sorted(primal.facet_labels)) throw MismatchError("realized facets differ from the lattice");

  for (std::size_t f = 0; f < primal.facets.size(); ++f) {
    const TubeLabel& tube = primal.facet_labels[f].front();
    for (std::size_t v = 0; v < primal.vertices.size(); ++v) {
      const auto& tubing = primal.vertex_labels[v];
      bool member = std::find(tubing.begin(), tubing.end(), tube) != tubing.end();
      if (member != primal.incidence[f][v]) throw MismatchError("realized incidence differs from tube membership");
    }
  }
  std::map<TubeLabel, std::size_t> facet_of;
  for (std::size_t f = 0; f < primal.facets.size(); ++f) facet_of[primal.facet_labels[f].front()] = f;
  for (const auto& face : lattice.faces) {
    if (face.is_empty || face.dim < 0) continue;
    std::vector<RationalVector> points;
    for (std::size_t v = 0; v < primal.vertices.size(); ++v) {
      bool tight = std::all_of(face.label.begin(), face.label.end(),
                               [&](const TubeLabel& t) { return primal.incidence[facet_of.at(t)][v]; });
      if (tight) points.push_back(primal.vertices[v]);
    }
    if (static_cast<int>(linalg::affine_rank(points)) != face.dim + 1) {
      throw MismatchError("realized face has the wrong dimension");
    }
  }
}

Realization realize_from_base(const TubeComplex& complex, const RationalPolytope& base,
                              const std::vector<AdmTubing>& base_vertex_tubings,
                              const std::vector<AdmTubing>& base_facet_tubings, FaceLattice lattice) {
  Realization out;
  StagePolytope stage;
  stage.polytope = polar_dual(base);
  stage.vertex_tubings = base_facet_tubings;
  stage.facet_tubings = base_vertex_tubings;
  for (const auto& t : stage.vertex_tubings) stage.polytope.vertex_labels.push_back(complex.label_of(t));
  for (const auto& t : stage.facet_tubings) stage.polytope.facet_labels.push_back(complex.label_of(t));

  std::vector<bool> melted(complex.labels.size(), false);
  melted[complex.whole] = true;
  AdmissiblePoset adm = admissible_tubings(complex, melted);
  try {
    certify(stage.polytope);
  } catch (const CertificationError& e) {
    throw MismatchError(std::string("dual order polytope failed certification: ") + e.what());
  }
  certify_against(stage, adm);

  std::vector<std::size_t> order;
  for (std::size_t t = 0; t < complex.labels.size(); ++t) {
    if (complex.is_proper(t)) order.push_back(t);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return complex.sizes[a] > complex.sizes[b]; });

  for (std::size_t tau : order) {
    AdmTubing face{complex.whole, tau};
    AdmTubing apex{complex.whole, tau};
    for (std::size_t s = 0; s < complex.labels.size(); ++s) {
      if (!complex.is_singleton(s)) continue;
      apex.push_back(s);
      if (!complex.contains[tau][s]) face.push_back(s);
    }
    std::sort(face.begin(), face.end());
    std::sort(apex.begin(), apex.end());

    std::vector<std::size_t> face_vertices;
    for (std::size_t v = 0; v < stage.vertex_tubings.size(); ++v) {
      if (adm.leq(stage.vertex_tubings[v], face)) face_vertices.push_back(v);
    }
    melted[tau] = true;
    AdmissiblePoset next = admissible_tubings(complex, melted);
    stage = stellar_subdivide(stage, face_vertices, apex, next);
    adm = std::move(next);
    out.stages.push_back(
        MeltStage{complex.labels[tau], stage.polytope.vertices.size(), stage.polytope.facets.size(), stage.polytope.max_bits()});
    out.max_bits = std::max(out.max_bits, stage.polytope.max_bits());
  }

  out.dual = stage.polytope;
  out.primal = polar_dual(stage.polytope);
  out.primal.chart.origin = base.chart.origin;
  out.primal.chart.basis = base.chart.basis;
  // Dual vertices are {whole, tau, singletons}; dual facets are maximal tubings.
  auto proper_part = [&](const AdmTubing& t) {
    FaceLabel label;
    for (std::size_t id : t) {
      if (complex.is_proper(id)) label.push_back(complex.labels[id]);
    }
    return label;
  };
  out.primal.facet_labels.clear();
  out.primal.vertex_labels.clear();
  for (const auto& t : stage.vertex_tubings) out.primal.facet_labels.push_back(proper_part(t));
  for (const auto& t : stage.facet_tubings) out.primal.vertex_labels.push_back(proper_part(t));
  try {
    certify(out.primal);
  } catch (const CertificationError& e) {
    throw MismatchError(std::string("primal polytope failed certification: ") + e.what());
  }
  out.max_bits = std::max(out.max_bits, out.primal.max_bits());
  check_against_lattice(out.primal, lattice);
  out.lattice = std::move(lattice);
  return out;
}

Realization realize_poset_associahedron(const Poset& p) {
  FaceLattice lattice = associahedron_face_lattice(p);
  RationalPolytope ord = order_polytope(p);
  if (p.size() == 2) {
    Realization out;
    out.primal = ord;
    out.primal.vertex_labels = {FaceLabel{}};
    out.dual = out.primal;
    out.lattice = std::move(lattice);
    return out;
  }
  TubeComplex complex = finite_tube_complex(p);
  std::map<TubeLabel, std::size_t> id_of;
  for (std::size_t t = 0; t < complex.labels.size(); ++t) id_of[complex.labels[t]] = t;

  std::vector<AdmTubing> vertex_tubings, facet_tubings;
  for (const auto& label : ord.vertex_labels) {
    AdmTubing t{complex.whole};
    for (const auto& part : label) t.push_back(id_of.at(part));
    std::sort(t.begin(), t.end());
    vertex_tubings.push_back(std::move(t));
  }
  for (const auto& label : ord.facet_labels) {
    const TubeLabel& pair = label.front();
    AdmTubing t{complex.whole, id_of.at(pair)};
    for (ElementId id : p.ids()) {
      if (std::find(pair.begin(), pair.end(), id) == pair.end()) t.push_back(id_of.at(TubeLabel{id}));
    }
    std::sort(t.begin(), t.end());
    facet_tubings.push_back(std::move(t));
  }
  return realize_from_base(complex, ord, vertex_tubings, facet_tubings, std::move(lattice));
}

}  // namespace posetahedra
