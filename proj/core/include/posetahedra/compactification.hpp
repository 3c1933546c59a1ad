#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "posetahedra/element_set.hpp"
#include "posetahedra/poset.hpp"
#include "posetahedra/rational.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra {

/// One point of Ord(tau) for every non-singleton tube tau, including P.
using ConfigPoint = std::map<Tube, Coordinates, CanonicalLess>;
/// Points keyed by the tubes of T + {P}.
using TubePoints = std::map<Tube, Coordinates, CanonicalLess>;
/// Curve parameters keyed by tube.
using TubeParameters = std::map<Tube, Rational, CanonicalLess>;

/// A cell of Comp(P): a proper tubing with one open-face point per tube of
/// T + {P}.
struct Stratum {
  Tubing tubing;
  TubePoints interior;
};

/// Non-singleton tubes of P in canonical order; P itself comes last.
std::vector<Tube> nonsingleton_tubes(const Poset& p);

/// True when x is order preserving on tau, sums to zero and has alpha 1.
bool in_order_polytope(const Poset& p, Tube tau, const Coordinates& x);

/// Throws PreconditionError unless every non-singleton tube has a component
/// over it, lying in its order polytope when `require_order` is set.
void validate_config_point(const Poset& p, const ConfigPoint& c, bool require_order = true);

/// Restrictions of a strictly order-preserving x to every non-singleton tube.
/// Throws NotStrictError if some relation is weak.
ConfigPoint embed(const Poset& p, const RationalVector& x);

struct CoherenceCheck {
  bool coherent = true;
  /// First failing pair (inner, outer) in canonical order.
  std::optional<std::pair<Tube, Tube>> witness;
  explicit operator bool() const { return coherent; }
};

/// Components need the right supports but need not lie in Ord(tau); a zero
/// component counts as incoherent.
CoherenceCheck check_coherent(const Poset& p, const ConfigPoint& c);
bool is_coherent(const Poset& p, const ConfigPoint& c);

/// Connected components of the level sets of x, in canonical order.
std::vector<Tube> b_partition(const Poset& p, Tube tau, const Coordinates& x);

/// T(x). Throws IncoherentError on incoherent input.
Tubing tubing_of(const Poset& p, const ConfigPoint& c);

/// The components indexed by T(x) + {P}.
Stratum stratum_of(const Poset& p, const ConfigPoint& c);

/// Fills in every tube from the stratum data. Throws WrongFaceError if an
/// interior point does not lie in the open face of its children.
ConfigPoint synthesize(const Poset& p, const Stratum& s);
ConfigPoint synthesize(const Poset& p, const Tubing& tubing, const TubePoints& interior);

/// Deterministic open-face points: blocks valued by a linear extension of the
/// quotient, then normalized.
TubePoints canonical_interior(const Poset& p, const Tubing& tubing);

/// Sum over T + {P} of (number of children - 2).
int stratum_dimension(const Poset& p, const Tubing& tubing);

/// y = x[P] + sum of t_tau x[tau] over tau in T(c) containing i.
/// Throws RegimeError unless every t is positive, t_inner <= guard * t_outer
/// for nested pairs, and y is strictly order preserving.
RationalVector limit_sample(const Poset& p, const ConfigPoint& c, const TubeParameters& t,
                            const Rational& guard = Rational(1, 10));

/// Largest sup-norm distance between embed(y) and c over all components.
Rational embed_distance(const Poset& p, const ConfigPoint& c, const RationalVector& y);

/// Sup of admissible expansion times; nullopt means unbounded. Throws
/// NotAdjacentError unless outer is the parent of inner in T(c).
std::optional<Rational> t_max(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer);

/// Separates inner from outer at time t. Throws RangeError unless
/// 0 <= t < t_max.
ConfigPoint expand(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer, const Rational& t);

/// Inverse of expand. Throws NotInCollError outside the collapsing set.
std::pair<ConfigPoint, Rational> collapse(const Poset& p, const ConfigPoint& c, Tube inner, Tube outer);

/// Expands the tubes of `sequence` in order; each must be a tube of T(c) and
/// no tube may precede one of its subtubes. Step k (1-based) failing throws
/// NotExpandableError carrying k.
ConfigPoint composite_expand(const Poset& p, const ConfigPoint& c, const std::vector<Tube>& sequence,
                             const std::vector<Rational>& t);

/// Collapses `sequence` in reverse order starting from a point whose tubing
/// lies between `tubing` minus the sequence and `tubing`. Returns the times in
/// sequence order. Step k failing throws NotCollapsibleError carrying k.
std::pair<ConfigPoint, std::vector<Rational>> composite_collapse(const Poset& p, const ConfigPoint& y,
                                                                 const Tubing& tubing,
                                                                 const std::vector<Tube>& sequence);

/// The tubes of `fine` minus `coarse`, ordered canonically, which respects
/// inclusion.
std::vector<Tube> expansion_sequence(const Tubing& fine, const Tubing& coarse);

/// Coordinates whose entries are polynomials in a curve parameter s;
/// coeffs[k][d] is the coefficient of s^d in the k-th coordinate.
struct PolyCoordinates {
  ElementSet support;
  std::vector<RationalVector> coeffs;

  Coordinates at(const Rational& s) const;
};

/// lim_{s -> 0+} res_tau(y(s)). Throws DegenerateError if alpha vanishes
/// identically.
Coordinates leading_res(const Poset& p, Tube tau, const PolyCoordinates& y);

/// Curve through the cell of `coarse` approaching x, where T(x) contains
/// `coarse`. The parameter of each tube sigma of T(x) minus `coarse` is
/// s^(1 + number of such tubes strictly containing sigma).
std::map<Tube, PolyCoordinates, CanonicalLess> approach_curve(const Poset& p, const ConfigPoint& x,
                                                              const Tubing& coarse);

/// Exact limit as s -> 0+ of the synthesized curve.
ConfigPoint curve_limit(const Poset& p, const Tubing& coarse,
                        const std::map<Tube, PolyCoordinates, CanonicalLess>& curve);

/// The curve evaluated at s; throws WrongFaceError if s is too large.
ConfigPoint curve_point(const Poset& p, const Tubing& coarse,
                        const std::map<Tube, PolyCoordinates, CanonicalLess>& curve, const Rational& s);

/// A curve x(t) in the N-shaped poset with d_{1,2,4} tending to `target`
/// (nullopt for infinity).
struct RatioCurve {
  std::optional<Rational> target;
  PolyCoordinates curve;
  ConfigPoint limit;
  struct Sample {
    int k = 0;
    Rational t;
    RationalVector x;
    Rational ratio;
    Rational distance;
  };
  std::vector<Sample> samples;
};

struct RatioDemo {
  Poset poset;
  RatioCurve first, second;
  bool limits_agree = false;
  /// |ratio(first) - ratio(second)| at the smallest sampled t.
  Rational final_gap;
};

/// Two curves on N4 with the same limit in Comp(P) but different limiting
/// ratios |x1 - x2| / |x1 - x4|, sampled at t = 10^-k for k = 2..6.
RatioDemo ratio_counterexample_demo(const std::optional<Rational>& first, const std::optional<Rational>& second);

/// |x1 - x2| / |x1 - x4| for the N4 labels.
Rational ratio_124(const Poset& n4, const RationalVector& x);

}  // namespace posetahedra
