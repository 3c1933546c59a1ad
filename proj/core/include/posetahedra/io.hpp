#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetahedra/affine.hpp"
#include "posetahedra/compactification.hpp"
#include "posetahedra/face_lattice.hpp"
#include "posetahedra/polytope.hpp"
#include "posetahedra/poset.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra::io {

using Json = nlohmann::json;

/// Reads a file, or standard input for "-". Throws IOError, ParseError.
Json read_json(const std::string& path);
Json parse_json(std::string_view text);
std::string read_text(const std::string& path);
/// Writes to a file, or standard output for "-". Throws IOError.
void write_text(const std::string& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

/// {"covers": [[i, j], ...]}.
Json poset_to_json(const Poset& p);
/// Throws ParseError on schema violations; poset errors propagate.
Poset poset_from_json(const Json& j);

/// {"n": n, "covers": [[i, j], ...]} with i in [1..n].
Json affine_to_json(const AffinePoset& a);
AffinePoset affine_from_json(const Json& j);

Json tube_to_json(const Poset& p, Tube t);
Json tubing_to_json(const Poset& p, const Tubing& t);
Tube tube_from_json(const Poset& p, const Json& j);
/// Validated and canonical. Throws NotATubeError, NotATubingError.
Tubing tubing_from_json(const Poset& p, const Json& j);

Json affine_tubing_to_json(const AffineTubing& t);
AffineTubing affine_tubing_from_json(const AffinePoset& a, const Json& j);

/// Comma-separated ids, e.g. "1,2,3".
std::string tube_key(const Poset& p, Tube t);
Tube tube_from_key(const Poset& p, std::string_view key);

/// {"tubes": {"1,2": ["-1/2", "1/2"], ...}}; values follow ascending ids.
Json config_to_json(const Poset& p, const ConfigPoint& c);
ConfigPoint config_from_json(const Poset& p, const Json& j);

/// Exact export: chart, vertices, facets with labels, vertex labels and the
/// tight vertices of each facet.
Json polytope_to_json(const RationalPolytope& q);
/// Rebuilds the polytope exactly; the stored incidence must match the
/// recomputed one. Throws ParseError.
RationalPolytope polytope_from_json(const Json& j);

/// Decimal OFF (nOFF outside dimension 3) in chart coordinates, flagged as
/// approximate in a header comment.
std::string polytope_to_off(const RationalPolytope& q, int precision = 12);

/// f- and h-vectors and every face with its tubing and dimension.
Json lattice_to_json(const FaceLattice& lattice);

Json face_label_to_json(const FaceLabel& label);

}  // namespace posetahedra::io
