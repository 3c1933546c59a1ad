#include "posetahedra/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <set>

#include "posetahedra/errors.hpp"
#include "posetahedra/linalg.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Matrix64 = std::vector<std::vector<std::int64_t>>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Min-plus transitive closure; negative cycles are clamped at -kInf.
void min_plus_closure(Matrix64& d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] >= kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] >= kInf) continue;
        d[i][j] = std::min(d[i][j], std::max(d[i][k] + d[k][j], -kInf));
      }
    }
  }
}

bool closure_is_positive(Matrix64 d) {
  min_plus_closure(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i][i] < 1) return false;
  }
  return true;
}

AffineTube shifted(const AffineTube& t, std::int64_t by) {
  AffineTube out(t);
  for (auto& x : out) x += by;
  return out;
}

bool sorted_subset(const AffineTube& small, const AffineTube& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool sorted_intersect(const AffineTube& a, const AffineTube& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

/// Shifts d (in units of n) for which y + dn can meet x.
std::pair<std::int64_t, std::int64_t> meeting_shifts(std::size_t n, const AffineTube& x, const AffineTube& y) {
  const auto p = static_cast<std::int64_t>(n);
  return {floor_div(x.front() - y.back(), p), ceil_div(x.back() - y.front(), p)};
}

/// Smallest d such that y + dn is disjoint from x and lies partly above it.
std::int64_t min_voltage(const AffinePoset& a, const AffineTube& x, const AffineTube& y) {
  const auto n = static_cast<std::int64_t>(a.order());
  std::int64_t d = kInf;
  for (ElementId i : x) {
    for (ElementId j : y) {
      d = std::min(d, a.distance(a.residue(i), a.residue(j)) + a.level(i) - a.level(j));
    }
  }
  while (sorted_intersect(x, shifted(y, d * n))) ++d;
  return d;
}

bool tube_order(const AffineTube& a, const AffineTube& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::uint64_t residue_mask(const AffinePoset& a, const AffineTube& t) {
  std::uint64_t m = 0;
  for (ElementId x : t) m |= std::uint64_t{1} << a.residue(x);
  return m;
}

/// Pairwise compatibility and minimal voltages among a fixed list of tubes.
struct TubeTable {
  std::vector<AffineTube> tubes;
  std::vector<std::vector<bool>> compatible;
  Matrix64 voltage;

  TubeTable(const AffinePoset& a, std::vector<AffineTube> list) : tubes(std::move(list)) {
    const std::size_t k = tubes.size();
    compatible.assign(k, std::vector<bool>(k, true));
    voltage.assign(k, std::vector<std::int64_t>(k, kInf));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j) compatible[i][j] = affine_nested_or_disjoint(a, tubes[i], tubes[j]);
        voltage[i][j] = min_voltage(a, tubes[i], tubes[j]);
      }
    }
  }

  bool acyclic(const std::vector<std::size_t>& ids) const {
    Matrix64 d(ids.size(), std::vector<std::int64_t>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) d[i][j] = voltage[ids[i]][ids[j]];
    }
    return closure_is_positive(std::move(d));
  }

  bool is_tubing(const std::vector<std::size_t>& ids) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (ids[i] == ids[j] || !compatible[ids[i]][ids[j]]) return false;
      }
    }
    return acyclic(ids);
  }
};

bool contains_up_to_shift(std::size_t n, const AffineTube& big, const AffineTube& small) {
  if (small.size() > big.size()) return false;
  auto [lo, hi] = meeting_shifts(n, big, small);
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (sorted_subset(shifted(small, d * static_cast<std::int64_t>(n)), big)) return true;
  }
  return false;
}

}  // namespace

AffinePoset AffinePoset::build(std::size_t n, std::vector<IdPair> gen_covers) {
  if (n < 1) throw PreconditionError("an affine poset needs order at least 1");
  if (n > 64) throw TooLargeError("affine posets are limited to order 64");
  AffinePoset a;
  a.n_ = n;
  a.dist_.assign(n, std::vector<std::int64_t>(n, kInf));
  for (std::size_t r = 0; r < n; ++r) a.dist_[r][r] = 1;
  for (const auto& [i, j] : gen_covers) {
    if (i < 1 || i > static_cast<ElementId>(n)) {
      throw PreconditionError("generator (" + std::to_string(i) + "," + std::to_string(j) + ") must start in [1.." +
                              std::to_string(n) + "]");
    }
    if (i == j) throw CycleError("self-relation on " + std::to_string(i));
    auto& d = a.dist_[a.residue(i)][a.residue(j)];
    d = std::min(d, a.level(j) - a.level(i));
  }
  min_plus_closure(a.dist_);
  for (std::size_t r = 0; r < n; ++r) {
    if (a.dist_[r][r] < 1) throw CycleError("relations close a cycle through residue " + std::to_string(r + 1));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (a.dist_[r][s] >= kInf) {
        throw NotStronglyConnectedError("no element of residue " + std::to_string(s + 1) + " lies above " +
                                        std::to_string(r + 1));
      }
    }
  }
  std::sort(gen_covers.begin(), gen_covers.end());
  gen_covers.erase(std::unique(gen_covers.begin(), gen_covers.end()), gen_covers.end());
  a.gen_covers_ = std::move(gen_covers);

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::int64_t w = a.dist_[r][s];
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = a.dist_[r][c] + a.dist_[c][s] > w;
      if (cover) a.covers_.push_back(AffineRelation{r, s, w});
    }
  }
  return a;
}

std::size_t AffinePoset::residue(ElementId i) const {
  const auto n = static_cast<std::int64_t>(n_);
  return static_cast<std::size_t>(((i - 1) % n + n) % n);
}

std::int64_t AffinePoset::level(ElementId i) const { return floor_div(i - 1, static_cast<std::int64_t>(n_)); }

ElementId AffinePoset::element(std::size_t residue, std::int64_t level) const {
  return static_cast<ElementId>(residue) + 1 + level * static_cast<std::int64_t>(n_);
}

bool AffinePoset::less(ElementId i, ElementId j) const {
  return i != j && dist_[residue(i)][residue(j)] <= level(j) - level(i);
}

std::vector<IdPair> AffinePoset::cover_ids() const {
  std::vector<IdPair> out;
  for (const auto& c : covers_) out.emplace_back(element(c.from, 0), element(c.to, c.shift));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> AffinePoset::hasse_neighbors(ElementId i) const {
  std::vector<ElementId> out;
  const std::size_t r = residue(i);
  const std::int64_t l = level(i);
  for (const auto& c : covers_) {
    if (c.from == r) out.push_back(element(c.to, l + c.shift));
    if (c.to == r) out.push_back(element(c.from, l - c.shift));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t AffinePoset::max_cover_span() const {
  std::int64_t s = 0;
  for (const auto& c : covers_) s = std::max(s, std::abs(element(c.to, c.shift) - element(c.from, 0)));
  return s;
}

ElementId LinearExtension::operator()(ElementId i) const {
  const auto p = static_cast<std::int64_t>(n);
  const std::int64_t l = floor_div(i - 1, p);
  return window.at(static_cast<std::size_t>(i - 1 - l * p)) + l * p;
}

std::vector<ElementId> extension_window(const AffinePoset& a) {
  const std::size_t n = a.order();
  std::vector<ElementId> s;
  for (std::size_t r = 0; r < n; ++r) s.push_back(a.element(r, -a.distance(r, n - 1)));
  std::sort(s.begin(), s.end());
  return s;
}

LinearExtension linear_extension(const AffinePoset& a) {
  const std::size_t n = a.order();
  const auto s = extension_window(a);
  std::vector<bool> placed(n, false);
  std::vector<ElementId> rank(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t k = 0; k < n; ++k) {
      if (placed[k]) continue;
      bool ready = true;
      for (std::size_t m = 0; m < n && ready; ++m) ready = placed[m] || !a.less(s[m], s[k]);
      if (ready) {
        placed[k] = true;
        rank[k] = static_cast<ElementId>(step) + 1;
        break;
      }
    }
  }
  LinearExtension phi;
  phi.n = n;
  phi.window.assign(n, 0);
  const auto p = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = a.residue(s[k]);
    phi.window[r] = rank[k] - a.level(s[k]) * p;
  }
  const ElementId low = *std::min_element(phi.window.begin(), phi.window.end());
  for (auto& v : phi.window) v -= low - 1;

  std::set<std::size_t> residues;
  for (auto v : phi.window) residues.insert(static_cast<std::size_t>(((v - 1) % p + p) % p));
  if (residues.size() != n) throw MismatchError("linear extension is not a bijection");
  for (ElementId i = 1; i <= p; ++i) {
    for (ElementId j = 1 - 2 * p; j <= 3 * p; ++j) {
      if (a.less(i, j) && phi(i) >= phi(j)) {
        throw MismatchError("linear extension fails on " + std::to_string(i) + " < " + std::to_string(j));
      }
    }
  }
  return phi;
}

AffineTube canonical_representative(const AffinePoset& a, AffineTube tube) {
  if (tube.empty()) throw NotATubeError("empty tube");
  std::sort(tube.begin(), tube.end());
  const auto n = static_cast<std::int64_t>(a.order());
  return shifted(tube, -floor_div(tube.front() - 1, n) * n);
}

bool is_affine_tube(const AffinePoset& a, const AffineTube& input) {
  if (input.empty()) return false;
  AffineTube t(input);
  std::sort(t.begin(), t.end());
  std::set<std::size_t> residues;
  for (ElementId x : t) {
    if (!residues.insert(a.residue(x)).second) return false;
  }
  const std::size_t n = a.order();
  for (ElementId i : t) {
    for (ElementId k : t) {
      if (!a.less(i, k)) continue;
      const std::size_t ri = a.residue(i), rk = a.residue(k);
      for (std::size_t c = 0; c < n; ++c) {
        const std::int64_t lo = a.level(i) + a.distance(ri, c), hi = a.level(k) - a.distance(c, rk);
        for (std::int64_t l = lo; l <= hi; ++l) {
          if (!std::binary_search(t.begin(), t.end(), a.element(c, l))) return false;
        }
      }
    }
  }
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (!seen[v] && (a.less(t[u], t[v]) || a.less(t[v], t[u]))) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string format_tube(const AffineTube& tube) {
  std::string out;
  for (ElementId x : tube) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

AffineTube make_affine_tube(const AffinePoset& a, AffineTube tube) {
  if (!is_affine_tube(a, tube)) {
    std::sort(tube.begin(), tube.end());
    throw NotATubeError(format_tube(tube) + " is not an affine tube");
  }
  return canonical_representative(a, std::move(tube));
}

bool is_proper(const AffinePoset&, const AffineTube& tube) { return tube.size() > 1; }

void sort_canonical(AffineTubing& tubes) { std::sort(tubes.begin(), tubes.end(), tube_order); }

std::vector<AffineTube> enumerate_affine_tubes(const AffinePoset& a, bool proper_only) {
  const auto n = static_cast<std::int64_t>(a.order());
  const std::int64_t width = (n - 1) * a.max_cover_span();
  std::vector<AffineTube> out;
  for (ElementId m = 1; m <= n; ++m) {
    std::set<AffineTube> seen;
    std::vector<AffineTube> stack{{m}};
    while (!stack.empty()) {
      AffineTube t = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(t).second) continue;
      const std::uint64_t used = residue_mask(a, t);
      for (ElementId x : t) {
        for (ElementId y : a.hasse_neighbors(x)) {
          if (y < m || y > m + width || ((used >> a.residue(y)) & 1U)) continue;
          AffineTube next(t);
          next.insert(std::upper_bound(next.begin(), next.end(), y), y);
          if (!seen.count(next)) stack.push_back(std::move(next));
        }
      }
    }
    for (const auto& t : seen) {
      if ((!proper_only || t.size() > 1) && is_affine_tube(a, t)) out.push_back(t);
    }
  }
  sort_canonical(out);
  return out;
}

bool affine_nested_or_disjoint(const AffinePoset& a, const AffineTube& x, const AffineTube& y) {
  const auto n = static_cast<std::int64_t>(a.order());
  auto [lo, hi] = meeting_shifts(a.order(), x, y);
  for (std::int64_t d = lo; d <= hi; ++d) {
    AffineTube z = shifted(y, d * n);
    if (sorted_intersect(x, z) && !sorted_subset(x, z) && !sorted_subset(z, x)) return false;
  }
  return true;
}

AffineTubingCheck check_affine_tubing(const AffinePoset& a, const std::vector<AffineTube>& input) {
  AffineTubingCheck check;
  std::vector<AffineTube> tubes;
  for (const auto& t : input) tubes.push_back(canonical_representative(a, t));
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      if (tubes[i] == tubes[j] || !affine_nested_or_disjoint(a, tubes[i], tubes[j])) {
        check.ok = false;
        check.crossing = std::make_pair(tubes[i], tubes[j]);
        return check;
      }
    }
  }
  Matrix64 d(tubes.size(), std::vector<std::int64_t>(tubes.size()));
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    for (std::size_t j = 0; j < tubes.size(); ++j) d[i][j] = min_voltage(a, tubes[i], tubes[j]);
  }
  if (!closure_is_positive(std::move(d))) {
    check.ok = false;
    check.cyclic = true;
  }
  return check;
}

bool is_affine_tubing(const AffinePoset& a, const std::vector<AffineTube>& tubes) {
  return check_affine_tubing(a, tubes).ok;
}

AffineTubing make_affine_tubing(const AffinePoset& a, std::vector<AffineTube> tubes) {
  for (auto& t : tubes) t = make_affine_tube(a, std::move(t));
  auto check = check_affine_tubing(a, tubes);
  if (check.crossing) {
    throw NotATubingError("tubes " + format_tube(check.crossing->first) + " and " + format_tube(check.crossing->second) +
                          " cross or repeat");
  }
  if (check.cyclic) throw NotATubingError("the periodic disjointness digraph has a cycle");
  sort_canonical(tubes);
  return tubes;
}

std::vector<AffineTubing> enumerate_proper_affine_tubings(const AffinePoset& a, bool max_only) {
  const TubeTable table(a, enumerate_affine_tubes(a, true));
  const std::size_t target = a.order() - 1;
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!max_only || current.size() == target) found.push_back(current);
    if (current.size() == target) return;
    for (std::size_t t = from; t < table.tubes.size(); ++t) {
      bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t s) { return table.compatible[s][t]; });
      if (!ok) continue;
      current.push_back(t);
      if (table.acyclic(current)) grow(t + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<AffineTubing> out;
  for (const auto& ids : found) {
    AffineTubing t;
    for (std::size_t id : ids) t.push_back(table.tubes[id]);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<AffineTubing> enumerate_affine_tubing_partitions(const AffinePoset& a) {
  const TubeTable table(a, enumerate_affine_tubes(a, false));
  const std::size_t n = a.order();
  std::vector<std::uint64_t> masks;
  for (const auto& t : table.tubes) masks.push_back(residue_mask(a, t));
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  std::function<void(std::uint64_t)> grow = [&](std::uint64_t covered) {
    if (covered == full) {
      std::vector<std::size_t> ids(current);
      std::sort(ids.begin(), ids.end());
      if (table.acyclic(ids)) found.push_back(std::move(ids));
      return;
    }
    std::size_t r = 0;
    while ((covered >> r) & 1U) ++r;
    for (std::size_t t = 0; t < table.tubes.size(); ++t) {
      if (!((masks[t] >> r) & 1U) || (masks[t] & covered)) continue;
      current.push_back(t);
      grow(covered | masks[t]);
      current.pop_back();
    }
  };
  grow(0);
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<AffineTubing> out;
  for (const auto& ids : found) {
    AffineTubing t;
    for (std::size_t id : ids) t.push_back(table.tubes[id]);
    out.push_back(std::move(t));
  }
  return out;
}

RationalPolytope affine_order_polytope(const AffinePoset& a, const Rational& c) {
  if (c <= 0) throw PreconditionError("the period shift c must be positive");
  const std::size_t n = a.order();
  std::vector<AffineTube> maximal;
  for (auto& t : enumerate_affine_tubes(a, false)) {
    if (t.size() == n) maximal.push_back(std::move(t));
  }
  std::vector<RationalVector> ambient;
  for (const auto& tau : maximal) {
    RationalVector q(n);
    Rational total(0);
    for (ElementId x : tau) {
      q[a.residue(x)] = Rational(a.level(x));
      total += Rational(a.level(x));
    }
    RationalVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = c * total / static_cast<long>(n) - q[r] * c;
    ambient.push_back(std::move(x));
  }

  RationalPolytope out;
  out.chart.basis = linalg::nullspace(linalg::Matrix{RationalVector(n, Rational(1))}, n);
  out.chart.origin.assign(n, Rational(0));
  for (const auto& x : ambient) {
    for (std::size_t r = 0; r < n; ++r) out.chart.origin[r] += x[r];
  }
  for (auto& v : out.chart.origin) v /= static_cast<long>(ambient.size());

  const std::size_t d = out.chart.dim();
  linalg::Matrix columns(n, RationalVector(d));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < d; ++k) columns[r][k] = out.chart.basis[k][r];
  }
  for (std::size_t v = 0; v < ambient.size(); ++v) {
    if (d == 0) {
      out.vertices.push_back({});
    } else {
      RationalVector rel(n);
      for (std::size_t r = 0; r < n; ++r) rel[r] = ambient[v][r] - out.chart.origin[r];
      auto y = linalg::solve_unique(columns, rel);
      if (!y) throw DegenerateError("affine order polytope vertex outside its chart");
      out.vertices.push_back(std::move(*y));
    }
    out.vertex_labels.push_back(FaceLabel{maximal[v]});
  }
  for (const auto& cov : a.covers()) {
    if (cov.from == cov.to) continue;
    RationalVector normal(d);
    for (std::size_t k = 0; k < d; ++k) normal[k] = out.chart.basis[k][cov.from] - out.chart.basis[k][cov.to];
    out.facets.push_back(
        Halfspace{std::move(normal), c * cov.shift - (out.chart.origin[cov.from] - out.chart.origin[cov.to])});
    out.facet_labels.push_back(
        FaceLabel{canonical_representative(a, {a.element(cov.from, 0), a.element(cov.to, cov.shift)})});
  }
  out.incidence = compute_incidence(out.vertices, out.facets);
  certify(out);
  return out;
}

Poset tube_subposet(const AffinePoset& a, const AffineTube& tube) {
  if (tube.size() < 2) throw PreconditionError("a tube subposet needs at least 2 elements");
  std::vector<IdPair> relations;
  for (ElementId i : tube) {
    for (ElementId j : tube) {
      if (a.less(i, j)) relations.emplace_back(i, j);
    }
  }
  return Poset::from_relations(relations);
}

TubeComplex affine_tube_complex(const AffinePoset& a) {
  const std::size_t n = a.order();
  auto table = std::make_shared<TubeTable>(a, enumerate_affine_tubes(a, false));
  auto id_of = std::make_shared<std::map<AffineTube, std::size_t>>();
  const std::size_t k = table->tubes.size();
  TubeComplex c;
  c.ground_size = n;
  c.polytope_dim = n - 1;
  for (std::size_t t = 0; t < k; ++t) {
    (*id_of)[table->tubes[t]] = t;
    c.labels.push_back(table->tubes[t]);
    c.sizes.push_back(table->tubes[t].size());
  }
  c.whole = k;
  c.labels.push_back(TubeLabel{});
  c.sizes.push_back(n + 1);
  c.contains.assign(k + 1, std::vector<bool>(k + 1, false));
  for (std::size_t x = 0; x <= k; ++x) c.contains[k][x] = true;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) c.contains[x][y] = contains_up_to_shift(n, table->tubes[x], table->tubes[y]);
  }
  const std::size_t whole = k;
  c.is_tubing = [table, whole](const AdmTubing& ids) {
    std::vector<std::size_t> proper;
    for (std::size_t id : ids) {
      if (id != whole) proper.push_back(id);
    }
    return table->is_tubing(proper);
  };
  auto cache = std::make_shared<std::map<std::size_t, std::vector<AdmTubing>>>();
  c.partitions = [a, table, id_of, cache, whole](std::size_t t) {
    auto hit = cache->find(t);
    if (hit != cache->end()) return hit->second;
    std::vector<AdmTubing> out;
    if (t == whole) {
      for (const auto& part : enumerate_affine_tubing_partitions(a)) {
        AdmTubing ids;
        for (const auto& s : part) ids.push_back(id_of->at(s));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
      }
    } else if (table->tubes[t].size() > 1) {
      Poset sub = tube_subposet(a, table->tubes[t]);
      for (const auto& part : enumerate_tubing_partitions(sub, sub.all())) {
        if (part.size() < 2) continue;
        AdmTubing ids;
        for (Tube s : part) ids.push_back(id_of->at(canonical_representative(a, sub.ids_of(s))));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
      }
    }
    (*cache)[t] = out;
    return out;
  };
  return c;
}

FaceLattice cyclohedron_face_lattice(const AffinePoset& a) {
  std::vector<FaceLabel> labels;
  for (auto& t : enumerate_proper_affine_tubings(a, false)) labels.emplace_back(t.begin(), t.end());
  return tubing_lattice(labels, static_cast<int>(a.order()) - 1);
}

Realization realize_affine_cyclohedron(const AffinePoset& a) {
  FaceLattice lattice = cyclohedron_face_lattice(a);
  RationalPolytope ord = affine_order_polytope(a);
  if (a.order() == 1) {
    Realization out;
    out.primal = ord;
    out.primal.vertex_labels = {FaceLabel{}};
    out.dual = out.primal;
    out.lattice = std::move(lattice);
    return out;
  }
  TubeComplex complex = affine_tube_complex(a);
  std::map<TubeLabel, std::size_t> id_of;
  for (std::size_t t = 0; t < complex.whole; ++t) id_of[complex.labels[t]] = t;

  std::vector<AdmTubing> vertex_tubings, facet_tubings;
  for (const auto& label : ord.vertex_labels) {
    AdmTubing t{id_of.at(label.front()), complex.whole};
    std::sort(t.begin(), t.end());
    vertex_tubings.push_back(std::move(t));
  }
  for (const auto& label : ord.facet_labels) {
    const TubeLabel& pair = label.front();
    AdmTubing t{complex.whole, id_of.at(pair)};
    const std::uint64_t used = residue_mask(a, pair);
    for (std::size_t r = 0; r < a.order(); ++r) {
      if (!((used >> r) & 1U)) t.push_back(id_of.at(TubeLabel{a.element(r, 0)}));
    }
    std::sort(t.begin(), t.end());
    facet_tubings.push_back(std::move(t));
  }
  return realize_from_base(complex, ord, vertex_tubings, facet_tubings, std::move(lattice));
}

AffineTube tube_from_signed_pair(const AffinePoset& claw, const std::vector<ElementId>& k_plus,
                                 const std::vector<ElementId>& k_minus) {
  const auto n = static_cast<ElementId>(claw.order());
  if (n < 2 || !(claw == corpus::circular_claw(claw.order()))) {
    throw PreconditionError("signed pairs label tubes of a circular claw");
  }
  std::set<ElementId> plus(k_plus.begin(), k_plus.end()), minus(k_minus.begin(), k_minus.end());
  for (const auto* side : {&plus, &minus}) {
    for (ElementId k : *side) {
      if (k < 1 || k > n - 1) throw PreconditionError("signed pair entries must lie in [1.." + std::to_string(n - 1) + "]");
    }
  }
  for (ElementId k : plus) {
    if (minus.count(k)) throw OverlapError("K+ and K- share " + std::to_string(k));
  }
  if (plus.empty() && minus.empty()) throw EmptyError("K+ and K- are both empty");
  AffineTube out;
  for (ElementId k : minus) out.push_back(k - n);
  out.push_back(0);
  for (ElementId k : plus) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

int AffineFaceFactors::dimension() const {
  int d = static_cast<int>(top.order()) - 1;
  for (const auto& q : finite) d += static_cast<int>(q.poset.size()) - 2;
  return d;
}

AffineFaceFactors affine_face_product_decomposition(const AffinePoset& a, const AffineTubing& input) {
  const AffineTubing tubing = make_affine_tubing(a, input);
  for (const auto& t : tubing) {
    if (t.size() < 2) throw PreconditionError("tubing has a singleton tube " + format_tube(t));
  }
  const std::size_t n = a.order();
  const auto p = static_cast<std::int64_t>(n);
  AffineFaceFactors out;

  for (const auto& tau : tubing) {
    // Maximal shifts of other tubes inside tau, then the leftover singletons.
    std::vector<AffineTube> inside;
    for (const auto& sigma : tubing) {
      if (sigma == tau) continue;
      auto [lo, hi] = meeting_shifts(n, tau, sigma);
      for (std::int64_t d = lo; d <= hi; ++d) {
        AffineTube z = shifted(sigma, d * p);
        if (sorted_subset(z, tau)) inside.push_back(std::move(z));
      }
    }
    std::vector<AffineTube> children;
    for (const auto& z : inside) {
      bool maximal = std::none_of(inside.begin(), inside.end(),
                                  [&](const AffineTube& w) { return w != z && sorted_subset(z, w); });
      if (maximal) children.push_back(z);
    }
    for (ElementId x : tau) {
      bool covered = std::any_of(children.begin(), children.end(),
                                 [&](const AffineTube& z) { return std::binary_search(z.begin(), z.end(), x); });
      if (!covered) children.push_back({x});
    }
    Poset sub = tube_subposet(a, tau);
    std::vector<ElementSet> blocks;
    for (const auto& z : children) blocks.push_back(sub.set_of(z));
    out.finite.push_back(quotient_poset(sub, blocks));
  }

  std::vector<AffineTube> blocks;
  std::uint64_t covered = 0;
  for (const auto& tau : tubing) {
    bool maximal = std::none_of(tubing.begin(), tubing.end(), [&](const AffineTube& other) {
      return other != tau && contains_up_to_shift(n, other, tau);
    });
    if (maximal) {
      blocks.push_back(tau);
      covered |= residue_mask(a, tau);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!((covered >> r) & 1U)) blocks.push_back({a.element(r, 0)});
  }
  std::sort(blocks.begin(), blocks.end(), [](const AffineTube& x, const AffineTube& y) { return x.front() < y.front(); });
  const auto q = static_cast<std::int64_t>(blocks.size());
  std::vector<std::pair<std::int64_t, ElementId>> block_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (ElementId x : blocks[b]) block_of[a.residue(x)] = {static_cast<std::int64_t>(b) + 1, x};
  }
  auto label = [&](ElementId x) {
    const auto& [b, member] = block_of[a.residue(x)];
    return b + ((x - member) / p) * q;
  };
  std::vector<IdPair> gens;
  for (const auto& cov : a.covers()) {
    const ElementId x = label(a.element(cov.from, 0)), y = label(a.element(cov.to, cov.shift));
    if (x == y) continue;
    const std::int64_t d = floor_div(x - 1, q);
    gens.emplace_back(x - d * q, y - d * q);
  }
  try {
    out.top = AffinePoset::build(static_cast<std::size_t>(q), gens);
  } catch (const CycleError&) {
    throw NotATubingError("the quotient by the tubing has a cycle");
  }
  out.top_blocks = std::move(blocks);
  return out;
}

namespace corpus {

AffinePoset circular_chain(std::size_t n) {
  std::vector<IdPair> gens;
  for (std::size_t k = 1; k <= n; ++k) gens.emplace_back(k, k + 1);
  return AffinePoset::build(n, gens);
}

AffinePoset circular_claw(std::size_t n) {
  if (n < 2) throw PreconditionError("a circular claw needs order at least 2");
  const auto m = static_cast<ElementId>(n);
  std::vector<IdPair> gens;
  for (ElementId k = 1; k < m; ++k) {
    gens.emplace_back(m, m + k);
    gens.emplace_back(k, m);
  }
  return AffinePoset::build(n, gens);
}

}  // namespace corpus

}  // namespace posetahedra
