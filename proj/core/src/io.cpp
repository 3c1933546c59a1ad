#include "posetahedra/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "posetahedra/errors.hpp"

namespace posetahedra::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  return j;
}

ElementId integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<ElementId>();
}

IdPair id_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a cover must be a pair [i, j]");
  return {integer(j[0], "cover entry"), integer(j[1], "cover entry")};
}

std::vector<ElementId> id_list(const Json& j) {
  std::vector<ElementId> out;
  for (const auto& x : array(j, "a tube")) out.push_back(integer(x, "tube entry"));
  return out;
}

Json label_json(const FaceLabel& label) { return face_label_to_json(label); }

FaceLabel label_from(const Json& j) {
  FaceLabel out;
  for (const auto& t : array(j, "a label")) out.push_back(id_list(t));
  return out;
}

}  // namespace

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json(const std::string& path) { return parse_json(read_text(path)); }

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path);
  out << text;
  if (!out) throw IOError("write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("rationals are \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector vector_from_json(const Json& j) {
  RationalVector out;
  for (const auto& x : array(j, "a vector")) out.push_back(rational_from_json(x));
  return out;
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [i, j] : p.cover_ids()) covers.push_back({i, j});
  return Json{{"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  std::vector<IdPair> relations;
  for (const auto& c : array(field(j, "covers"), "\"covers\"")) relations.push_back(id_pair(c));
  return Poset::from_relations(relations);
}

Json affine_to_json(const AffinePoset& a) {
  Json covers = Json::array();
  for (const auto& [i, j] : a.gen_covers()) covers.push_back({i, j});
  return Json{{"n", a.order()}, {"covers", covers}};
}

AffinePoset affine_from_json(const Json& j) {
  const ElementId n = integer(field(j, "n"), "\"n\"");
  if (n < 1) throw ParseError("\"n\" must be positive");
  std::vector<IdPair> gens;
  for (const auto& c : array(field(j, "covers"), "\"covers\"")) gens.push_back(id_pair(c));
  return AffinePoset::build(static_cast<std::size_t>(n), gens);
}

Json tube_to_json(const Poset& p, Tube t) { return p.ids_of(t); }

Json tubing_to_json(const Poset& p, const Tubing& t) {
  Json out = Json::array();
  for (Tube x : t) out.push_back(tube_to_json(p, x));
  return out;
}

Tube tube_from_json(const Poset& p, const Json& j) {
  auto ids = id_list(j);
  return make_tube(p, ids);
}

Tubing tubing_from_json(const Poset& p, const Json& j) {
  std::vector<Tube> tubes;
  for (const auto& t : array(j, "a tubing")) tubes.push_back(tube_from_json(p, t));
  return make_tubing(p, std::move(tubes));
}

Json affine_tubing_to_json(const AffineTubing& t) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back(x);
  return out;
}

AffineTubing affine_tubing_from_json(const AffinePoset& a, const Json& j) {
  std::vector<AffineTube> tubes;
  for (const auto& t : array(j, "a tubing")) tubes.push_back(id_list(t));
  return make_affine_tubing(a, std::move(tubes));
}

std::string tube_key(const Poset& p, Tube t) {
  std::string out;
  for (ElementId id : p.ids_of(t)) out += (out.empty() ? "" : ",") + std::to_string(id);
  return out;
}

Tube tube_from_key(const Poset& p, std::string_view key) {
  std::vector<ElementId> ids;
  std::string token;
  std::istringstream in{std::string(key)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(token, &used));
      if (used != token.size()) throw ParseError("bad tube key \"" + std::string(key) + "\"");
    } catch (const std::logic_error&) {
      throw ParseError("bad tube key \"" + std::string(key) + "\"");
    }
  }
  return make_tube(p, ids);
}

Json config_to_json(const Poset& p, const ConfigPoint& c) {
  Json tubes = Json::object();
  for (const auto& [t, x] : c) tubes[tube_key(p, t)] = vector_to_json(x.values());
  return Json{{"tubes", tubes}};
}

ConfigPoint config_from_json(const Poset& p, const Json& j) {
  const Json& tubes = field(j, "tubes");
  if (!tubes.is_object()) throw ParseError("\"tubes\" must be an object");
  ConfigPoint out;
  for (const auto& [key, value] : tubes.items()) {
    Tube t = tube_from_key(p, key);
    RationalVector v = vector_from_json(value);
    if (v.size() != t.size()) throw ParseError("tube " + key + " needs " + std::to_string(t.size()) + " values");
    out[t] = Coordinates(t, std::move(v));
  }
  return out;
}

Json face_label_to_json(const FaceLabel& label) {
  Json out = Json::array();
  for (const auto& t : label) out.push_back(t);
  return out;
}

Json polytope_to_json(const RationalPolytope& q) {
  Json basis = Json::array();
  for (const auto& b : q.chart.basis) basis.push_back(vector_to_json(b));
  Json vertices = Json::array();
  for (const auto& v : q.vertices) vertices.push_back(vector_to_json(v));
  Json facets = Json::array();
  for (std::size_t f = 0; f < q.facets.size(); ++f) {
    Json facet{{"normal", vector_to_json(q.facets[f].normal)}, {"offset", rational_to_json(q.facets[f].offset)}};
    if (f < q.facet_labels.size()) {
      facet["label"] = label_json(q.facet_labels[f]);
      if (q.facet_labels[f].size() == 1) facet["tube"] = q.facet_labels[f].front();
    }
    Json tight = Json::array();
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (q.incidence[f][v]) tight.push_back(v);
    }
    facet["vertices"] = tight;
    facets.push_back(std::move(facet));
  }
  Json vertex_labels = Json::array();
  for (const auto& l : q.vertex_labels) vertex_labels.push_back(label_json(l));
  return Json{{"ambient_dim", q.ambient_dim()},
              {"chart_dim", q.dim()},
              {"chart", {{"origin", vector_to_json(q.chart.origin)}, {"basis", basis}}},
              {"vertices", vertices},
              {"facets", facets},
              {"vertex_labels", vertex_labels}};
}

RationalPolytope polytope_from_json(const Json& j) {
  RationalPolytope q;
  const Json& chart = field(j, "chart");
  q.chart.origin = vector_from_json(field(chart, "origin"));
  for (const auto& b : array(field(chart, "basis"), "\"basis\"")) q.chart.basis.push_back(vector_from_json(b));
  const auto dim = static_cast<std::size_t>(integer(field(j, "chart_dim"), "\"chart_dim\""));
  const auto ambient = static_cast<std::size_t>(integer(field(j, "ambient_dim"), "\"ambient_dim\""));
  if (dim != q.chart.dim() || ambient != q.chart.ambient_dim()) throw ParseError("chart dimensions disagree");
  for (const auto& b : q.chart.basis) {
    if (b.size() != ambient) throw ParseError("basis vectors must have the ambient dimension");
  }
  for (const auto& v : array(field(j, "vertices"), "\"vertices\"")) {
    q.vertices.push_back(vector_from_json(v));
    if (q.vertices.back().size() != dim) throw ParseError("vertex has the wrong dimension");
  }
  std::vector<std::vector<bool>> stored;
  bool has_incidence = true;
  bool has_labels = true;
  for (const auto& f : array(field(j, "facets"), "\"facets\"")) {
    Halfspace h{vector_from_json(field(f, "normal")), rational_from_json(field(f, "offset"))};
    if (h.normal.size() != dim) throw ParseError("facet normal has the wrong dimension");
    q.facets.push_back(std::move(h));
    if (f.contains("label")) {
      q.facet_labels.push_back(label_from(f["label"]));
    } else if (f.contains("tube")) {
      q.facet_labels.push_back(FaceLabel{id_list(f["tube"])});
    } else {
      has_labels = false;
    }
    if (f.contains("vertices")) {
      std::vector<bool> row(q.vertices.size(), false);
      for (const auto& v : array(f["vertices"], "facet vertices")) {
        auto idx = integer(v, "vertex index");
        if (idx < 0 || static_cast<std::size_t>(idx) >= row.size()) throw ParseError("vertex index out of range");
        row[static_cast<std::size_t>(idx)] = true;
      }
      stored.push_back(std::move(row));
    } else {
      has_incidence = false;
    }
  }
  if (!has_labels) q.facet_labels.clear();
  if (j.contains("vertex_labels")) {
    for (const auto& l : array(j["vertex_labels"], "\"vertex_labels\"")) q.vertex_labels.push_back(label_from(l));
  }
  q.incidence = compute_incidence(q.vertices, q.facets);
  if (has_incidence && stored != q.incidence) throw ParseError("stored facet vertices disagree with the inequalities");
  return q;
}

std::string polytope_to_off(const RationalPolytope& q, int precision) {
  if (precision < 1) throw PreconditionError("OFF precision must be at least 1");
  const std::size_t d = q.dim();
  std::ostringstream out;
  out << std::setprecision(precision);
  out << (d == 3 ? "OFF\n" : "nOFF\n");
  out << "# approximate: decimal coordinates with " << precision << " significant digits\n";
  if (d != 3) out << d << "\n";
  out << q.vertices.size() << " " << q.facets.size() << " 0\n";
  std::vector<std::vector<double>> approx;
  for (const auto& v : q.vertices) {
    std::vector<double> row;
    for (const auto& x : v) row.push_back(to_double(x));
    approx.push_back(row);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << "\n";
  }
  for (std::size_t f = 0; f < q.facets.size(); ++f) {
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (q.incidence[f][v]) tight.push_back(v);
    }
    if (d == 3 && tight.size() >= 3) {
      // Order the polygon cyclically around its centroid.
      std::vector<double> c(3, 0.0);
      for (auto v : tight)
        for (std::size_t k = 0; k < 3; ++k) c[k] += approx[v][k] / static_cast<double>(tight.size());
      std::vector<double> n(3);
      for (std::size_t k = 0; k < 3; ++k) n[k] = to_double(q.facets[f].normal[k]);
      std::vector<double> u(3);
      for (std::size_t k = 0; k < 3; ++k) u[k] = approx[tight[0]][k] - c[k];
      std::vector<double> w{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
      auto angle = [&](std::size_t v) {
        double a = 0, b = 0;
        for (std::size_t k = 0; k < 3; ++k) {
          a += (approx[v][k] - c[k]) * u[k];
          b += (approx[v][k] - c[k]) * w[k];
        }
        return std::atan2(b, a);
      };
      std::stable_sort(tight.begin(), tight.end(), [&](std::size_t x, std::size_t y) { return angle(x) < angle(y); });
    }
    out << tight.size();
    for (auto v : tight) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Json lattice_to_json(const FaceLattice& lattice) {
  Json faces = Json::array();
  for (const auto& face : lattice.faces) {
    if (face.is_empty) continue;
    faces.push_back(Json{{"tubing", label_json(face.label)}, {"dim", face.dim}});
  }
  return Json{{"dimension", lattice.dimension},
              {"f_vector", f_vector(lattice)},
              {"h_vector", h_vector(lattice)},
              {"faces", faces}};
}

}  // namespace posetahedra::io
