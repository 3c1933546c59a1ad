#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posetahedra/acceptance.hpp"
#include "posetahedra/affine.hpp"
#include "posetahedra/compactification.hpp"
#include "posetahedra/errors.hpp"
#include "posetahedra/io.hpp"
#include "posetahedra/realization.hpp"

namespace pt = posetahedra;
namespace io = posetahedra::io;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kCertification = 2;

const char* const kPosetHint = R"(expected a poset: {"covers": [[1, 2], [2, 3]]})";
const char* const kAffineHint = R"(expected an affine poset: {"n": 3, "covers": [[1, 2], [2, 3], [3, 4]]})";
const char* const kConfigHint = R"(expected a config point: {"tubes": {"1,2": ["-1/2", "1/2"], ...}})";

/// Error raised while reading an input, carrying a schema hint.
struct InputError {
  std::string message;
  std::string hint;
};

template <class F>
auto with_hint(const char* hint, F&& read) {
  try {
    return read();
  } catch (const pt::ParseError& e) {
    throw InputError{e.what(), hint};
  }
}

pt::Poset load_poset(const std::string& path) {
  return with_hint(kPosetHint, [&] { return io::poset_from_json(io::read_json(path)); });
}

pt::AffinePoset load_affine(const std::string& path) {
  return with_hint(kAffineHint, [&] { return io::affine_from_json(io::read_json(path)); });
}

pt::ConfigPoint load_config(const pt::Poset& p, const std::string& path) {
  return with_hint(kConfigHint, [&] { return io::config_from_json(p, io::read_json(path)); });
}

pt::Tubing parse_tubing(const pt::Poset& p, const std::string& text) {
  return with_hint(R"(expected a tubing: [[2, 3], [1, 2, 3]])",
                   [&] { return io::tubing_from_json(p, io::parse_json(text)); });
}

pt::Tube parse_tube(const pt::Poset& p, const std::string& key) {
  return with_hint(R"(expected a tube as comma-separated ids: 1,2)", [&] { return io::tube_from_key(p, key); });
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

struct FacesOptions {
  std::string input;
  bool fvector = false;
  bool hvector = false;
  bool flag_check = false;
  std::string out = "-";
};

struct RealizeOptions {
  std::string input;
  std::string out = "-";
  std::string format = "json";
  int precision = 12;
  bool dual = false;
};

void add_faces(CLI::App* cmd, FacesOptions& o, bool flag_check) {
  cmd->add_option("input", o.input, "Input JSON file, or - for stdin")->required();
  cmd->add_flag("--fvector", o.fvector, "Print the f-vector f_0 ... f_d");
  cmd->add_flag("--hvector", o.hvector, "Print the h-vector");
  if (flag_check) cmd->add_flag("--flag-check", o.flag_check, "Test whether the dual complex is flag");
  cmd->add_option("--out", o.out, "Output file for the full lattice JSON");
}

void add_realize(CLI::App* cmd, RealizeOptions& o) {
  cmd->add_option("input", o.input, "Input JSON file, or - for stdin")->required();
  cmd->add_option("--out", o.out, "Output file, or - for stdout");
  cmd->add_option("--format", o.format, "json (exact) or off (decimal)")->check(CLI::IsMember({"json", "off"}));
  cmd->add_option("--precision", o.precision, "Significant digits for OFF")->check(CLI::Range(1, 40));
  cmd->add_flag("--dual", o.dual, "Export the simplicial dual instead");
}

void emit_faces(const pt::FaceLattice& lattice, const FacesOptions& o, const pt::Poset* flag_poset) {
  const bool summary = o.fvector || o.hvector || o.flag_check;
  if (o.fvector) std::cout << join(pt::f_vector(lattice)) << "\n";
  if (o.hvector) std::cout << join(pt::h_vector(lattice)) << "\n";
  if (o.flag_check && flag_poset) {
    pt::FlagCheck check = pt::is_flag_dual(*flag_poset);
    if (check.flag) {
      std::cout << "flag\n";
    } else {
      std::cout << "not flag: minimal non-face " << io::tubing_to_json(*flag_poset, check.witness).dump() << "\n";
    }
  }
  if (!summary || o.out != "-") io::write_text(o.out, io::dump(io::lattice_to_json(lattice)));
}

void emit_polytope(const pt::Realization& r, const RealizeOptions& o) {
  const pt::RationalPolytope& q = o.dual ? r.dual : r.primal;
  if (o.format == "off") {
    io::write_text(o.out, io::polytope_to_off(q, o.precision));
  } else {
    io::write_text(o.out, io::dump(io::polytope_to_json(q)));
  }
  std::cerr << "vertices " << q.vertices.size() << ", facets " << q.facets.size() << ", max_bits " << r.max_bits
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poset associahedra, affine cyclohedra and compactifications with exact rationals"};
  app.require_subcommand(1);

  // poset validate
  std::string poset_input;
  auto* poset_cmd = app.add_subcommand("poset", "Poset utilities")->require_subcommand(1);
  auto* validate_cmd = poset_cmd->add_subcommand("validate", "Check a poset file");
  validate_cmd->add_option("input", poset_input, "Input JSON file, or - for stdin")->required();

  // tubes
  std::string tubes_input;
  bool proper_only = false, max_tubings = false;
  auto* tubes_cmd = app.add_subcommand("tubes", "List tubes or maximal tubings (finite or affine input)");
  tubes_cmd->add_option("input", tubes_input, "Input JSON file, or - for stdin")->required();
  tubes_cmd->add_flag("--proper", proper_only, "Only proper tubes");
  tubes_cmd->add_flag("--max-tubings", max_tubings, "List maximal proper tubings instead");

  // assoc, cyclo
  FacesOptions assoc_faces_opts, cyclo_faces_opts;
  RealizeOptions assoc_realize_opts, cyclo_realize_opts;
  auto* assoc_cmd = app.add_subcommand("assoc", "Poset associahedron")->require_subcommand(1);
  auto* assoc_faces = assoc_cmd->add_subcommand("faces", "Face lattice of proper tubings");
  add_faces(assoc_faces, assoc_faces_opts, true);
  auto* assoc_realize = assoc_cmd->add_subcommand("realize", "Certified exact realization");
  add_realize(assoc_realize, assoc_realize_opts);
  auto* cyclo_cmd = app.add_subcommand("cyclo", "Affine poset cyclohedron")->require_subcommand(1);
  auto* cyclo_faces = cyclo_cmd->add_subcommand("faces", "Face lattice of proper affine tubings");
  add_faces(cyclo_faces, cyclo_faces_opts, false);
  auto* cyclo_realize = cyclo_cmd->add_subcommand("realize", "Certified exact realization");
  add_realize(cyclo_realize, cyclo_realize_opts);

  // compact
  std::string c_input, c_point, c_tubing, c_inner, c_outer, c_time, c_out = "-", c_first = "0", c_second = "1";
  auto* compact_cmd = app.add_subcommand("compact", "Compactification strata")->require_subcommand(1);
  auto* synth_cmd = compact_cmd->add_subcommand("synthesize", "Canonical point of the stratum of a tubing");
  synth_cmd->add_option("input", c_input, "Poset JSON file, or - for stdin")->required();
  synth_cmd->add_option("--tubing", c_tubing, "Proper tubing as JSON, e.g. [[2,3]]")->required();
  synth_cmd->add_option("--out", c_out, "Output file, or - for stdout");
  auto* verify_cmd = compact_cmd->add_subcommand("verify", "Check coherence and report the tubing of a point");
  verify_cmd->add_option("input", c_input, "Poset JSON file")->required();
  verify_cmd->add_option("--point", c_point, "Config point JSON file")->required();
  auto* expand_cmd = compact_cmd->add_subcommand("expand", "Separate a tube from its parent at time t");
  auto* collapse_cmd = compact_cmd->add_subcommand("collapse", "Collapse a tube into its parent");
  for (auto* cmd : {expand_cmd, collapse_cmd}) {
    cmd->add_option("input", c_input, "Poset JSON file")->required();
    cmd->add_option("--point", c_point, "Config point JSON file")->required();
    cmd->add_option("--inner", c_inner, "Inner tube, e.g. 2,3")->required();
    cmd->add_option("--outer", c_outer, "Outer tube; defaults to the parent of the inner tube");
    cmd->add_option("--out", c_out, "Output file, or - for stdout");
  }
  expand_cmd->add_option("--t", c_time, "Expansion time as p/q")->required();
  auto* demo_cmd = compact_cmd->add_subcommand("demo-ratios", "Two curves with one limit and different ratios");
  demo_cmd->add_option("--first", c_first, "Ratio limit of the first curve (p/q or inf)");
  demo_cmd->add_option("--second", c_second, "Ratio limit of the second curve (p/q or inf)");
  demo_cmd->add_option("--out", c_out, "Output file, or - for stdout");

  // verify-all
  std::string corpus_name = "desk";
  auto* verify_all_cmd = app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify_all_cmd->add_option("--corpus", corpus_name, "Corpus name")->check(CLI::IsMember({"desk"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (validate_cmd->parsed()) {
      pt::Poset p = load_poset(poset_input);
      std::cout << "ok: " << p.size() << " elements, " << p.cover_ids().size() << " covers\n";
    } else if (tubes_cmd->parsed()) {
      Json j = io::read_json(tubes_input);
      Json out = Json::array();
      if (j.is_object() && j.contains("n")) {
        pt::AffinePoset a = with_hint(kAffineHint, [&] { return io::affine_from_json(j); });
        if (max_tubings) {
          for (const auto& t : pt::enumerate_proper_affine_tubings(a, true)) out.push_back(io::affine_tubing_to_json(t));
        } else {
          for (const auto& t : pt::enumerate_affine_tubes(a, proper_only)) out.push_back(t);
        }
      } else {
        pt::Poset p = with_hint(kPosetHint, [&] { return io::poset_from_json(j); });
        if (max_tubings) {
          for (const auto& t : pt::enumerate_proper_tubings(p, true)) out.push_back(io::tubing_to_json(p, t));
        } else {
          for (pt::Tube t : pt::enumerate_tubes(p, proper_only)) out.push_back(io::tube_to_json(p, t));
        }
      }
      for (const auto& x : out) std::cout << x.dump() << "\n";
    } else if (assoc_faces->parsed()) {
      pt::Poset p = load_poset(assoc_faces_opts.input);
      emit_faces(pt::associahedron_face_lattice(p), assoc_faces_opts, &p);
    } else if (assoc_realize->parsed()) {
      emit_polytope(pt::realize_poset_associahedron(load_poset(assoc_realize_opts.input)), assoc_realize_opts);
    } else if (cyclo_faces->parsed()) {
      emit_faces(pt::cyclohedron_face_lattice(load_affine(cyclo_faces_opts.input)), cyclo_faces_opts, nullptr);
    } else if (cyclo_realize->parsed()) {
      emit_polytope(pt::realize_affine_cyclohedron(load_affine(cyclo_realize_opts.input)), cyclo_realize_opts);
    } else if (synth_cmd->parsed()) {
      pt::Poset p = load_poset(c_input);
      pt::Tubing t = parse_tubing(p, c_tubing);
      io::write_text(c_out, io::dump(io::config_to_json(p, pt::synthesize(p, t, pt::canonical_interior(p, t)))));
    } else if (verify_cmd->parsed()) {
      pt::Poset p = load_poset(c_input);
      pt::ConfigPoint c = load_config(p, c_point);
      pt::validate_config_point(p, c);
      pt::CoherenceCheck check = pt::check_coherent(p, c);
      if (!check) {
        std::cout << "incoherent at " << io::tube_key(p, check.witness->first) << " in "
                  << io::tube_key(p, check.witness->second) << "\n";
        return kValidation;
      }
      pt::Tubing t = pt::tubing_of(p, c);
      std::cout << "coherent; tubing " << io::tubing_to_json(p, t).dump() << "; stratum dimension "
                << pt::stratum_dimension(p, t) << "\n";
    } else if (expand_cmd->parsed() || collapse_cmd->parsed()) {
      pt::Poset p = load_poset(c_input);
      pt::ConfigPoint c = load_config(p, c_point);
      pt::validate_config_point(p, c);
      pt::Tube inner = parse_tube(p, c_inner);
      pt::Tube outer;
      if (c_outer.empty()) {
        pt::Tubing t = pt::tubing_of(p, c);
        if (expand_cmd->parsed()) {
          outer = pt::TubingTree(p, t).parent(inner);
        } else {
          // The inner tube is not yet in T(c); its parent is the smallest node above it.
          outer = pt::TubingTree(p, t).smallest_containing(inner);
        }
      } else {
        outer = parse_tube(p, c_outer);
      }
      if (expand_cmd->parsed()) {
        pt::Rational time = with_hint("expected a rational time p/q", [&] { return pt::parse_rational(c_time); });
        io::write_text(c_out, io::dump(io::config_to_json(p, pt::expand(p, c, inner, outer, time))));
      } else {
        auto [back, time] = pt::collapse(p, c, inner, outer);
        Json out = io::config_to_json(p, back);
        out["t"] = io::rational_to_json(time);
        io::write_text(c_out, io::dump(out));
      }
    } else if (demo_cmd->parsed()) {
      auto target = [](const std::string& s) -> std::optional<pt::Rational> {
        if (s == "inf") return std::nullopt;
        return with_hint("expected p/q or inf", [&] { return pt::parse_rational(s); });
      };
      pt::RatioDemo demo = pt::ratio_counterexample_demo(target(c_first), target(c_second));
      auto curve_json = [&](const pt::RatioCurve& c) {
        Json samples = Json::array();
        for (const auto& s : c.samples) {
          samples.push_back(Json{{"k", s.k},
                                 {"t", io::rational_to_json(s.t)},
                                 {"x", io::vector_to_json(s.x)},
                                 {"ratio", io::rational_to_json(s.ratio)},
                                 {"distance_to_limit", io::rational_to_json(s.distance)}});
        }
        return Json{{"target", c.target ? io::rational_to_json(*c.target) : Json("inf")},
                    {"limit", io::config_to_json(demo.poset, c.limit)},
                    {"samples", samples}};
      };
      Json out{{"poset", io::poset_to_json(demo.poset)},
               {"limits_agree", demo.limits_agree},
               {"final_gap", io::rational_to_json(demo.final_gap)},
               {"first", curve_json(demo.first)},
               {"second", curve_json(demo.second)}};
      io::write_text(c_out, io::dump(out));
    } else if (verify_all_cmd->parsed()) {
      bool ok = true;
      for (int id = 1; id <= pt::acceptance::kCriteria; ++id) {
        auto r = pt::acceptance::run(id);
        std::cout << pt::acceptance::format(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? kOk : kCertification;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\nhint: " << e.hint << "\n";
    return kValidation;
  } catch (const pt::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kCertification;
  } catch (const pt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
