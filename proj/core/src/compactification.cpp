#include "posetahedra/compactification.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "posetahedra/corpus.hpp"
#include "posetahedra/errors.hpp"

namespace posetahedra {

namespace {

std::string show(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (ElementId id : p.ids_of(s)) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool contains_tube(const Tubing& t, Tube x) { return std::find(t.begin(), t.end(), x) != t.end(); }

Coordinates scaled(const Coordinates& x, const Rational& factor) {
  Coordinates out = x;
  for (auto& v : out.values()) v *= factor;
  return out;
}

Tubing proper_tubing(const Poset& p, const Tubing& tubing) {
  Tubing t = make_tubing(p, tubing);
  for (Tube x : t) {
    if (!is_proper(p, x)) throw NotATubingError("tube " + show(p, x) + " is not proper");
  }
  return t;
}

/// Relations leaving `inner` inside `outer`: pairs (i, j) with i in inner,
/// j in outer - inner, and either i < j (up) or j < i (down).
struct Crossing {
  std::size_t i, j;
  bool up;
};

std::vector<Crossing> crossings(const Poset& p, Tube inner, Tube outer) {
  std::vector<Crossing> out;
  ElementSet rest = outer - inner;
  inner.for_each([&](std::size_t i) {
    rest.for_each([&](std::size_t j) {
      if (p.less(i, j)) out.push_back({i, j, true});
      if (p.less(j, i)) out.push_back({i, j, false});
    });
  });
  return out;
}

void check_nested_order(const std::vector<Tube>& sequence) {
  for (std::size_t a = 0; a < sequence.size(); ++a) {
    for (std::size_t b = a + 1; b < sequence.size(); ++b) {
      if (sequence[a] == sequence[b]) throw PreconditionError("sequence repeats a tube");
      if (sequence[b].subset_of(sequence[a])) {
        throw PreconditionError("sequence lists a tube before one of its subtubes");
      }
    }
  }
}

}  // namespace

std::vector<Tube> nonsingleton_tubes(const Poset& p) {
  std::vector<Tube> out;
  for (Tube t : enumerate_tubes(p, false)) {
    if (t.size() > 1) out.push_back(t);
  }
  sort_canonical(out);
  return out;
}

bool in_order_polytope(const Poset& p, Tube tau, const Coordinates& x) {
  if (x.support() != tau) return false;
  for (const auto& [i, j] : p.covers()) {
    if (tau.contains(i) && tau.contains(j) && x.at(i) > x.at(j)) return false;
  }
  return sum(x.values()) == 0 && alpha(p, tau, x) == 1;
}

void validate_config_point(const Poset& p, const ConfigPoint& c, bool require_order) {
  std::vector<Tube> tubes = nonsingleton_tubes(p);
  if (c.size() != tubes.size()) {
    throw PreconditionError("expected " + std::to_string(tubes.size()) + " tube components, got " +
                            std::to_string(c.size()));
  }
  for (Tube t : tubes) {
    auto it = c.find(t);
    if (it == c.end()) throw PreconditionError("missing component for tube " + show(p, t));
    if (it->second.support() != t) throw PreconditionError("component for tube " + show(p, t) + " has the wrong support");
    if (require_order && !in_order_polytope(p, t, it->second)) {
      throw PreconditionError("component for tube " + show(p, t) + " is not in its order polytope");
    }
  }
}

ConfigPoint embed(const Poset& p, const RationalVector& x) {
  if (x.size() != p.size()) {
    throw PreconditionError("expected " + std::to_string(p.size()) + " coordinates, got " + std::to_string(x.size()));
  }
  for (const auto& [i, j] : p.covers()) {
    if (!(x[i] < x[j])) {
      throw NotStrictError("relation " + std::to_string(p.id(i)) + " < " + std::to_string(p.id(j)) +
                           " is not strict");
    }
  }
  Coordinates all(p.all(), x);
  ConfigPoint out;
  for (Tube t : nonsingleton_tubes(p)) out.emplace(t, res(p, t, all));
  return out;
}

CoherenceCheck check_coherent(const Poset& p, const ConfigPoint& c) {
  validate_config_point(p, c, false);
  CoherenceCheck out;
  for (const auto& [outer, xo] : c) {
    for (const auto& [inner, xi] : c) {
      if (inner == outer || !inner.subset_of(outer)) continue;
      Coordinates y = proj_sigma0(inner, xo);
      const RationalVector& yv = y.values();
      const RationalVector& zv = xi.values();
      std::size_t k = 0;
      while (k < zv.size() && zv[k] == 0) ++k;
      if (k == zv.size()) {
        out.coherent = false;
        out.witness = std::make_pair(inner, outer);
        return out;
      }
      bool ok = yv[k] * zv[k] >= 0;
      for (std::size_t i = 0; ok && i < zv.size(); ++i) ok = yv[i] * zv[k] == yv[k] * zv[i];
      if (!ok) {
        out.coherent = false;
        out.witness = std::make_pair(inner, outer);
        return out;
      }
    }
  }
  return out;
}

bool is_coherent(const Poset& p, const ConfigPoint& c) { return check_coherent(p, c).coherent; }

std::vector<Tube> b_partition(const Poset& p, Tube tau, const Coordinates& x) {
  std::vector<Tube> out;
  ElementSet seen;
  tau.for_each([&](std::size_t start) {
    if (seen.contains(start)) return;
    ElementSet block = ElementSet::singleton(start);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      (p.hasse_neighbors(i) & tau).for_each([&](std::size_t j) {
        if (!block.contains(j) && x.at(j) == x.at(i)) {
          block = block.with(j);
          stack.push_back(j);
        }
      });
    }
    seen |= block;
    out.push_back(block);
  });
  sort_canonical(out);
  return out;
}

Tubing tubing_of(const Poset& p, const ConfigPoint& c) {
  validate_config_point(p, c);
  CoherenceCheck check = check_coherent(p, c);
  if (!check) {
    throw IncoherentError("tube " + show(p, check.witness->first) + " is not a nonnegative multiple of the projection of " +
                          show(p, check.witness->second));
  }
  Tubing out;
  std::vector<Tube> stack{p.all()};
  while (!stack.empty()) {
    Tube t = stack.back();
    stack.pop_back();
    for (Tube b : b_partition(p, t, c.at(t))) {
      if (b.size() < 2) continue;
      out.push_back(b);
      stack.push_back(b);
    }
  }
  sort_canonical(out);
  return out;
}

Stratum stratum_of(const Poset& p, const ConfigPoint& c) {
  Stratum s;
  s.tubing = tubing_of(p, c);
  s.interior.emplace(p.all(), c.at(p.all()));
  for (Tube t : s.tubing) s.interior.emplace(t, c.at(t));
  return s;
}

ConfigPoint synthesize(const Poset& p, const Stratum& s) { return synthesize(p, s.tubing, s.interior); }

ConfigPoint synthesize(const Poset& p, const Tubing& tubing, const TubePoints& interior) {
  Tubing t = proper_tubing(p, tubing);
  TubingTree tree(p, t);
  std::vector<Tube> inner = tree.inner_nodes();
  if (interior.size() != inner.size()) {
    throw PreconditionError("expected " + std::to_string(inner.size()) + " interior points, got " +
                            std::to_string(interior.size()));
  }
  for (Tube node : inner) {
    auto it = interior.find(node);
    if (it == interior.end()) throw PreconditionError("missing interior point for tube " + show(p, node));
    if (!in_order_polytope(p, node, it->second)) {
      throw WrongFaceError("point for tube " + show(p, node) + " is not in its order polytope");
    }
    if (b_partition(p, node, it->second) != tree.children(node)) {
      throw WrongFaceError("point for tube " + show(p, node) + " is not in the open face of its children");
    }
  }
  ConfigPoint out;
  for (Tube s : nonsingleton_tubes(p)) {
    Tube par = tree.smallest_containing(s);
    const Coordinates& x = interior.at(par);
    out.emplace(s, par == s ? x : res(p, s, x));
  }
  return out;
}

TubePoints canonical_interior(const Poset& p, const Tubing& tubing) {
  Tubing t = proper_tubing(p, tubing);
  TubingTree tree(p, t);
  TubePoints out;
  for (Tube node : tree.inner_nodes()) {
    const std::vector<Tube>& blocks = tree.children(node);
    std::vector<int> height(blocks.size(), -1);
    std::function<int(std::size_t)> h = [&](std::size_t b) {
      if (height[b] >= 0) return height[b];
      int best = 0;
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        if (a != b && d_edge(p, blocks[a], blocks[b])) best = std::max(best, h(a) + 1);
      }
      return height[b] = best;
    };
    RationalVector values(p.size(), Rational(0));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int v = h(b);
      blocks[b].for_each([&](std::size_t i) { values[i] = v; });
    }
    Coordinates x = Coordinates(p.all(), values).restrict(node);
    out.emplace(node, res(p, node, x));
  }
  return out;
}

int stratum_dimension(const Poset& p, const Tubing& tubing) {
  TubingTree tree(p, tubing);
  int d = 0;
  for (Tube node : tree.inner_nodes()) d += static_cast<int>(tree.children(node).size()) - 2;
  return d;
}

RationalVector limit_sample(const Poset& p, const ConfigPoint& c, const TubeParameters& t, const Rational& guard) {
  Tubing tubing = tubing_of(p, c);
  if (t.size() != tubing.size()) throw PreconditionError("need one parameter per tube of the tubing");
  for (Tube x : tubing) {
    auto it = t.find(x);
    if (it == t.end()) throw PreconditionError("missing parameter for tube " + show(p, x));
    if (it->second <= 0) throw RegimeError("parameter for tube " + show(p, x) + " is not positive");
  }
  for (Tube a : tubing) {
    for (Tube b : tubing) {
      if (a != b && a.subset_of(b) && t.at(a) > guard * t.at(b)) {
        throw RegimeError("parameter for " + show(p, a) + " exceeds the guard times the parameter for " + show(p, b));
      }
    }
  }
  RationalVector y = c.at(p.all()).values();
  for (Tube x : tubing) {
    const Coordinates& cx = c.at(x);
    x.for_each([&](std::size_t i) { y[i] += t.at(x) * cx.at(i); });
  }
  for (const auto& [i, j] : p.covers()) {
    if (!(y[i] < y[j])) throw RegimeError("sample is not strict; parameters are too large");
  }
  return y;
}

Rational embed_distance(const Poset& p, const ConfigPoint& c, const RationalVector& y) {
  ConfigPoint e = embed(p, y);
  Rational best = 0;
  for (const auto& [t, x] : c) {
    const RationalVector& a = x.values();
    const RationalVector& b = e.at(t).values();
    for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, abs_value(a[k] - b[k]));
  }
  return best;
}

std::optional<Rational> t_max(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer) {
  Tubing tubing = tubing_of(p, c);
  TubingTree tree(p, tubing);
  if (inner.size() < 2 || !contains_tube(tubing, inner) || tree.parent(inner) != outer) {
    throw NotAdjacentError(show(p, outer) + " is not the parent of " + show(p, inner));
  }
  const Coordinates& xo = c.at(outer);
  const Coordinates& xi = c.at(inner);
  std::optional<Rational> best;
  for (const auto& [i, j, up] : crossings(p, inner, outer)) {
    const Rational& v = xi.at(i);
    if (up ? v <= 0 : v >= 0) continue;
    Rational bound = (xo.at(j) - xo.at(i)) / v;
    if (!best || bound < *best) best = bound;
  }
  return best;
}

ConfigPoint expand(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer, const Rational& t) {
  std::optional<Rational> tm = t_max(p, c, inner, outer);
  if (t < 0) throw RangeError("expansion time is negative");
  if (tm && t >= *tm) throw RangeError("expansion time is not below t_max");
  if (t == 0) return c;
  Stratum s = stratum_of(p, c);
  s.tubing.erase(std::find(s.tubing.begin(), s.tubing.end(), inner));
  s.interior.erase(inner);
  const Coordinates& xo = c.at(outer);
  const Coordinates& xi = c.at(inner);
  RationalVector z;
  outer.for_each([&](std::size_t i) { z.push_back(inner.contains(i) ? xo.at(i) + t * xi.at(i) : xo.at(i)); });
  Coordinates zc(outer, std::move(z));
  s.interior[outer] = scaled(zc, 1 / alpha(p, outer, zc));
  return synthesize(p, s);
}

std::pair<ConfigPoint, Rational> collapse(const Poset& p, const ConfigPoint& y, Tube inner, Tube outer) {
  Stratum s = stratum_of(p, y);
  if (inner.size() < 2 || inner == outer || !inner.subset_of(outer)) {
    throw NotInCollError(show(p, inner) + " is not a proper non-singleton subtube of " + show(p, outer));
  }
  if (outer != p.all() && !contains_tube(s.tubing, outer)) {
    throw NotInCollError(show(p, outer) + " is not a tube of the stratum");
  }
  const Coordinates& yo = y.at(outer);
  Rational a = average(inner, yo);
  for (const auto& [i, j, up] : crossings(p, inner, outer)) {
    if (up ? !(a < yo.at(j)) : !(yo.at(j) < a)) {
      throw NotInCollError("average over " + show(p, inner) + " is not separated from element " +
                           std::to_string(p.id(j)));
    }
  }
  if (contains_tube(s.tubing, inner)) {
    if (TubingTree(p, s.tubing).parent(inner) != outer) {
      throw NotInCollError(show(p, outer) + " is not the parent of " + show(p, inner));
    }
    return {y, Rational(0)};
  }
  Tubing finer = s.tubing;
  finer.push_back(inner);
  if (!is_tubing(p, finer)) throw NotInCollError("adding " + show(p, inner) + " does not give a tubing");
  sort_canonical(finer);
  if (TubingTree(p, finer).parent(inner) != outer) {
    throw NotInCollError(show(p, outer) + " would not be the parent of " + show(p, inner));
  }

  RationalVector z;
  outer.for_each([&](std::size_t i) { z.push_back(inner.contains(i) ? a : yo.at(i)); });
  Coordinates zc(outer, std::move(z));
  Rational az = alpha(p, outer, zc);
  if (az <= 0) throw NotInCollError("collapsed point is degenerate");
  Coordinates xo = scaled(zc, 1 / az);
  const Coordinates& xi = y.at(inner);

  Stratum next{finer, s.interior};
  next.interior[outer] = xo;
  next.interior[inner] = xi;
  ConfigPoint x;
  try {
    x = synthesize(p, next);
  } catch (const WrongFaceError& e) {
    throw NotInCollError(std::string("collapsed point leaves the face: ") + e.what());
  }

  std::optional<Rational> t;
  bool consistent = true;
  inner.for_each([&](std::size_t i) {
    Rational lhs = yo.at(i) / az - xo.at(i);
    if (xi.at(i) == 0) {
      consistent = consistent && lhs == 0;
    } else if (!t) {
      t = lhs / xi.at(i);
    } else {
      consistent = consistent && lhs == *t * xi.at(i);
    }
  });
  if (!consistent || !t || *t <= 0) throw NotInCollError("no collapse time recovers the point");
  return {x, *t};
}

std::vector<Tube> expansion_sequence(const Tubing& fine, const Tubing& coarse) {
  std::vector<Tube> out;
  for (Tube t : fine) {
    if (!contains_tube(coarse, t)) out.push_back(t);
  }
  sort_canonical(out);
  return out;
}

ConfigPoint composite_expand(const Poset& p, const ConfigPoint& c, const std::vector<Tube>& sequence,
                             const std::vector<Rational>& t) {
  if (sequence.size() != t.size()) throw PreconditionError("need one time per tube of the sequence");
  check_nested_order(sequence);
  Tubing tubing = tubing_of(p, c);
  TubingTree tree(p, tubing);
  std::vector<Tube> parents;
  for (Tube x : sequence) {
    if (!contains_tube(tubing, x)) throw PreconditionError("tube " + show(p, x) + " is not in the tubing");
    parents.push_back(tree.parent(x));
  }
  ConfigPoint x = c;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    try {
      x = expand(p, x, sequence[k], parents[k], t[k]);
    } catch (const RangeError& e) {
      throw NotExpandableError(k + 1, e.what());
    } catch (const NotAdjacentError& e) {
      throw NotExpandableError(k + 1, e.what());
    }
  }
  return x;
}

std::pair<ConfigPoint, std::vector<Rational>> composite_collapse(const Poset& p, const ConfigPoint& y,
                                                                 const Tubing& tubing,
                                                                 const std::vector<Tube>& sequence) {
  Tubing fine = proper_tubing(p, tubing);
  check_nested_order(sequence);
  for (Tube x : sequence) {
    if (!contains_tube(fine, x)) throw PreconditionError("tube " + show(p, x) + " is not in the tubing");
  }
  Tubing current = tubing_of(p, y);
  for (Tube x : fine) {
    bool removable = std::find(sequence.begin(), sequence.end(), x) != sequence.end();
    if (!removable && !contains_tube(current, x)) {
      throw PreconditionError("point is not in the star: tube " + show(p, x) + " is missing");
    }
  }
  for (Tube x : current) {
    if (!contains_tube(fine, x)) throw PreconditionError("point is not in the star: extra tube " + show(p, x));
  }
  TubingTree tree(p, fine);
  std::vector<Rational> times(sequence.size());
  ConfigPoint x = y;
  for (std::size_t k = sequence.size(); k-- > 0;) {
    try {
      auto [next, t] = collapse(p, x, sequence[k], tree.parent(sequence[k]));
      x = std::move(next);
      times[k] = t;
    } catch (const NotInCollError& e) {
      throw NotCollapsibleError(k + 1, e.what());
    }
  }
  return {x, times};
}

Coordinates PolyCoordinates::at(const Rational& s) const {
  RationalVector out;
  out.reserve(coeffs.size());
  for (const auto& poly : coeffs) {
    Rational v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * s + *it;
    out.push_back(v);
  }
  return Coordinates(support, std::move(out));
}

Coordinates leading_res(const Poset& p, Tube tau, const PolyCoordinates& y) {
  std::size_t degree = 0;
  for (const auto& poly : y.coeffs) degree = std::max(degree, poly.size());
  auto coeff = [&](std::size_t i, std::size_t d) {
    std::size_t pos = ElementSet(y.support.bits() & ((std::uint64_t{1} << i) - 1)).size();
    const RationalVector& poly = y.coeffs[pos];
    return d < poly.size() ? poly[d] : Rational(0);
  };
  for (std::size_t d = 0; d < degree; ++d) {
    Rational a = 0;
    for (const auto& [i, j] : p.covers()) {
      if (tau.contains(i) && tau.contains(j)) a += coeff(j, d) - coeff(i, d);
    }
    RationalVector proj;
    Rational avg = 0;
    tau.for_each([&](std::size_t i) { avg += coeff(i, d); });
    avg /= static_cast<long>(tau.size());
    tau.for_each([&](std::size_t i) { proj.push_back(coeff(i, d) - avg); });
    bool zero = std::all_of(proj.begin(), proj.end(), [](const Rational& v) { return v == 0; });
    if (a == 0) {
      if (!zero) throw DegenerateError("restriction diverges along the curve");
      continue;
    }
    for (auto& v : proj) v /= a;
    return Coordinates(tau, std::move(proj));
  }
  throw DegenerateError("alpha vanishes identically along the curve");
}

std::map<Tube, PolyCoordinates, CanonicalLess> approach_curve(const Poset& p, const ConfigPoint& x,
                                                              const Tubing& coarse) {
  Tubing fine = tubing_of(p, x);
  Tubing c = proper_tubing(p, coarse);
  for (Tube t : c) {
    if (!contains_tube(fine, t)) throw PreconditionError("tube " + show(p, t) + " is not in the tubing of the point");
  }
  std::vector<Tube> extra = expansion_sequence(fine, c);
  TubingTree tree(p, c);
  std::map<Tube, PolyCoordinates, CanonicalLess> out;
  for (Tube node : tree.inner_nodes()) {
    PolyCoordinates y{node, {}};
    const Coordinates& base = x.at(node);
    for (const auto& v : base.values()) y.coeffs.push_back({v});
    out.emplace(node, std::move(y));
  }
  for (Tube s : extra) {
    std::size_t power = 1;
    for (Tube r : extra) power += (r != s && s.subset_of(r)) ? 1 : 0;
    PolyCoordinates& y = out.at(tree.smallest_containing(s));
    const Coordinates& xs = x.at(s);
    std::size_t pos = 0;
    y.support.for_each([&](std::size_t i) {
      if (s.contains(i)) {
        RationalVector& poly = y.coeffs[pos];
        if (poly.size() <= power) poly.resize(power + 1, Rational(0));
        poly[power] += xs.at(i);
      }
      ++pos;
    });
  }
  return out;
}

ConfigPoint curve_limit(const Poset& p, const Tubing& coarse,
                        const std::map<Tube, PolyCoordinates, CanonicalLess>& curve) {
  TubingTree tree(p, proper_tubing(p, coarse));
  ConfigPoint out;
  for (Tube s : nonsingleton_tubes(p)) out.emplace(s, leading_res(p, s, curve.at(tree.smallest_containing(s))));
  return out;
}

ConfigPoint curve_point(const Poset& p, const Tubing& coarse,
                        const std::map<Tube, PolyCoordinates, CanonicalLess>& curve, const Rational& s) {
  TubePoints interior;
  for (const auto& [t, y] : curve) {
    try {
      interior.emplace(t, res(p, t, y.at(s)));
    } catch (const DegenerateError&) {
      throw WrongFaceError("curve parameter is too large for tube " + show(p, t));
    }
  }
  return synthesize(p, coarse, interior);
}

Rational ratio_124(const Poset& n4, const RationalVector& x) {
  std::size_t i1 = n4.index_of(1), i2 = n4.index_of(2), i4 = n4.index_of(4);
  Rational den = abs_value(x[i1] - x[i4]);
  if (den == 0) throw DegenerateError("x1 = x4; the ratio is undefined");
  return abs_value(x[i1] - x[i2]) / den;
}

RatioDemo ratio_counterexample_demo(const std::optional<Rational>& first, const std::optional<Rational>& second) {
  RatioDemo demo;
  demo.poset = corpus::n4();
  const Poset& p = demo.poset;
  auto build = [&](const std::optional<Rational>& target) {
    if (target && *target < 0) throw PreconditionError("target ratio must be nonnegative");
    RatioCurve rc;
    rc.target = target;
    // x1 = (a - 1) s^2, x2 = -s^2, x3 = 1, x4 = s^2 gives ratio a / (2 - a);
    // a = 2 - s sends it to infinity.
    rc.curve.support = p.all();
    rc.curve.coeffs.assign(p.size(), {});
    RationalVector x1 = target ? RationalVector{0, 0, 2 * *target / (1 + *target) - 1} : RationalVector{0, 0, 1, -1};
    rc.curve.coeffs[p.index_of(1)] = x1;
    rc.curve.coeffs[p.index_of(2)] = {0, 0, -1};
    rc.curve.coeffs[p.index_of(3)] = {1};
    rc.curve.coeffs[p.index_of(4)] = {0, 0, 1};
    std::map<Tube, PolyCoordinates, CanonicalLess> curve{{p.all(), rc.curve}};
    rc.limit = curve_limit(p, {}, curve);
    Rational t = Rational(1, 10);
    for (int k = 2; k <= 6; ++k) {
      t /= 10;
      RatioCurve::Sample sample;
      sample.k = k;
      sample.t = t;
      sample.x = rc.curve.at(t).values();
      sample.ratio = ratio_124(p, sample.x);
      sample.distance = embed_distance(p, rc.limit, sample.x);
      rc.samples.push_back(std::move(sample));
    }
    return rc;
  };
  demo.first = build(first);
  demo.second = build(second);
  demo.limits_agree = demo.first.limit == demo.second.limit;
  demo.final_gap = abs_value(demo.first.samples.back().ratio - demo.second.samples.back().ratio);
  return demo;
}

}  // namespace posetahedra
