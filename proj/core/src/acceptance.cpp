#include "posetahedra/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "posetahedra/affine.hpp"
#include "posetahedra/compactification.hpp"
#include "posetahedra/corpus.hpp"
#include "posetahedra/errors.hpp"
#include "posetahedra/face_lattice.hpp"
#include "posetahedra/realization.hpp"
#include "posetahedra/tubings.hpp"

namespace posetahedra::acceptance {

namespace {

/// Outcome of a check body: pass flag and observed values.
struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << "failed: " << what << "; ";
    }
  }
  template <class T>
  Check& note(const T& x) {
    if (pass) detail << x;
    return *this;
  }
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string fvec(const std::vector<std::int64_t>& f) { return "(" + join(f) + ")"; }

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t internal_nonroot(const PlaneTree& t, bool root) {
  if (t.children.empty()) return 0;
  std::size_t n = root ? 0 : 1;
  for (const auto& c : t.children) n += internal_nonroot(c, false);
  return n;
}

void pentagon(Check& c) {
  Poset p = corpus::chain(4);
  FaceLattice lattice = associahedron_face_lattice(p);
  auto f = f_vector(lattice);
  c.expect(f == std::vector<std::int64_t>{5, 5, 1}, "f-vector " + fvec(f));
  Realization r = realize_poset_associahedron(p);
  certify(r.primal);
  check_against_lattice(r.primal, lattice);
  c.expect(r.primal.vertices.size() == 5 && r.primal.facets.size() == 5, "realized counts");
  c.note("f=").note(fvec(f)).note(", realized 5 vertices and 5 facets, incidence matches");
}

void hexagon(Check& c) {
  Poset p = corpus::claw(3);
  auto f = f_vector(associahedron_face_lattice(p));
  c.expect(f == std::vector<std::int64_t>{6, 6, 1}, "f-vector " + fvec(f));
  c.expect(f[0] == factorial(3), "vertex count 3!");
  Realization r = realize_poset_associahedron(p);
  c.expect(r.primal.vertices.size() == 6, "realized vertices");
  c.note("f=").note(fvec(f));
}

void n4_pentagon(Check& c) {
  Poset p = corpus::n4();
  auto max = enumerate_proper_tubings(p, true);
  auto tubes = enumerate_tubes(p, true);
  auto f = f_vector(associahedron_face_lattice(p));
  c.expect(max.size() == 5, "maximal proper tubings " + std::to_string(max.size()));
  c.expect(tubes.size() == 5, "proper tubes " + std::to_string(tubes.size()));
  c.expect(f == std::vector<std::int64_t>{5, 5, 1}, "f-vector " + fvec(f));
  c.note("5 maximal tubings, 5 proper tubes, f=").note(fvec(f));
}

void w5(Check& c) {
  Poset p = corpus::w5();
  FaceLattice lattice = associahedron_face_lattice(p);
  Realization r = realize_poset_associahedron(p);
  certify(r.primal);
  certify(r.dual);
  check_against_lattice(r.primal, lattice);
  c.expect(r.primal.dim() == 3, "dimension " + std::to_string(r.primal.dim()));
  c.expect(r.primal.facets.size() == 11, "facets " + std::to_string(r.primal.facets.size()));
  std::set<TubeLabel> big;
  std::vector<std::string> shown;
  for (const auto& s : r.stages) {
    if (s.tube.size() < 3) continue;
    big.insert(s.tube);
    shown.push_back(join(s.tube, ""));
  }
  const std::set<TubeLabel> expected{{1, 2, 3, 4}, {2, 3, 4, 5}, {1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}};
  c.expect(big == expected && shown.size() == expected.size(), "melted sets " + join(shown));
  c.note("dim 3, 11 facets, melted ").note(join(shown)).note(", all faces certified");
}

void associahedron_ladder(Check& c) {
  for (std::size_t n = 4; n <= 6; ++n) {
    Poset p = corpus::chain(n);
    auto f = f_vector(associahedron_face_lattice(p));
    auto trees = enumerate_plane_trees(n);
    std::vector<std::int64_t> from_trees(n - 1, 0);
    std::set<Tubing> images;
    for (const auto& t : trees) {
      std::size_t k = internal_nonroot(t, true);
      from_trees[n - 2 - k] += 1;
      Tubing tubing = tubing_from_plane_tree(p, t);
      c.expect(tubing.size() == k, "tree tubing size");
      images.insert(tubing);
    }
    c.expect(images.size() == trees.size(), "plane tree bijection is injective");
    c.expect(images.size() == enumerate_proper_tubings(p, false).size(), "plane tree bijection is onto");
    c.expect(f == from_trees, "C" + std::to_string(n) + " f " + fvec(f) + " vs trees " + fvec(from_trees));
    const std::int64_t catalan = binomial(2 * (n - 1), n - 1) / static_cast<std::int64_t>(n);
    c.expect(f[0] == catalan, "Catalan vertex count");
    c.note("C").note(n).note(" f=").note(fvec(f)).note(" ");
  }
}

void permutohedron_ladder(Check& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    Poset p = corpus::claw(n);
    auto maximal = enumerate_proper_tubings(p, true);
    std::set<Tubing> max_set(maximal.begin(), maximal.end());
    std::set<Tubing> images;
    for (const auto& osp : enumerate_ordered_set_partitions(n)) {
      if (osp.size() != n) continue;
      Tubing t = tubing_from_ordered_set_partition(p, osp);
      c.expect(max_set.count(t) == 1, "image is a maximal tubing");
      images.insert(t);
    }
    auto f = f_vector(associahedron_face_lattice(p));
    c.expect(images.size() == static_cast<std::size_t>(factorial(static_cast<std::int64_t>(n))), "n! permutations");
    c.expect(images == max_set, "bijection onto maximal tubings");
    c.expect(f[0] == factorial(static_cast<std::int64_t>(n)), "vertex count K" + std::to_string(n));
    c.note("K").note(n).note(" vertices=").note(f[0]).note(" ");
  }
}

void flagness(Check& c) {
  Poset p = corpus::h6();
  std::vector<Tube> tubes{make_tube(p, std::vector<ElementId>{1, 2}), make_tube(p, std::vector<ElementId>{3, 4}),
                          make_tube(p, std::vector<ElementId>{5, 6})};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) c.expect(is_tubing(p, std::vector<Tube>{tubes[i], tubes[j]}), "pair");
  TubingCheck check = check_tubing(p, tubes);
  c.expect(!check.ok, "triple is a tubing");
  c.expect(!check.crossing, "unexpected crossing");
  c.expect(check.cycle.size() == 3, "cycle length " + std::to_string(check.cycle.size()));
  std::vector<std::string> cyc;
  for (std::size_t i = 0; i < check.cycle.size(); ++i) {
    Tube a = check.cycle[i], b = check.cycle[(i + 1) % check.cycle.size()];
    c.expect(d_edge(p, a, b), "cycle edge of D_T");
    cyc.push_back("{" + join(p.ids_of(a)) + "}");
  }
  c.note("pairs compatible, triple fails with cycle ").note(join(cyc, " -> "));
}

void affine(Check& c) {
  auto cc3 = f_vector(cyclohedron_face_lattice(corpus::circular_chain(3)));
  auto ck3 = f_vector(cyclohedron_face_lattice(corpus::circular_claw(3)));
  c.expect(cc3 == std::vector<std::int64_t>{6, 6, 1}, "CC3 " + fvec(cc3));
  c.expect(ck3 == std::vector<std::int64_t>{8, 8, 1}, "CK3 " + fvec(ck3));
  c.expect(realize_affine_cyclohedron(corpus::circular_chain(3)).primal.vertices.size() == 6, "CC3 realized");
  c.expect(realize_affine_cyclohedron(corpus::circular_claw(3)).primal.vertices.size() == 8, "CK3 realized");
  c.note("CC3 f=").note(fvec(cc3)).note(", CK3 f=").note(fvec(ck3)).note(", CK_n vertices");
  for (std::int64_t n = 2; n <= 4; ++n) {
    auto f = f_vector(cyclohedron_face_lattice(corpus::circular_claw(static_cast<std::size_t>(n))));
    const std::int64_t expected = (std::int64_t{1} << (n - 1)) * factorial(n - 1);
    c.expect(f[0] == expected, "CK" + std::to_string(n) + " vertices " + std::to_string(f[0]));
    c.note(" ").note(f[0]);
  }
}

std::vector<Rational> sample_times(const std::optional<Rational>& tm) {
  if (!tm) return {Rational(1, 3), Rational(1), Rational(7, 2)};
  return {*tm / 2, *tm / 3, *tm * Rational(6, 7)};
}

void compactification(Check& c) {
  std::size_t tubings = 0, pairs = 0;
  for (const auto& e : corpus::desk()) {
    const Poset& p = e.poset;
    if (p.size() > 6) continue;
    for (const Tubing& t : enumerate_proper_tubings(p, false)) {
      ++tubings;
      ConfigPoint x = synthesize(p, t, canonical_interior(p, t));
      c.expect(tubing_of(p, x) == t, e.name + " tubing_of(synthesize(T)) != T");
      TubingTree tree(p, t);
      for (const auto& [s, coords] : x) {
        Tube parent = tree.smallest_containing(s);
        if (parent == s) continue;
        c.expect(alpha(p, s, x.at(parent)) > 0, e.name + " alpha of a non-node tube");
        c.expect(coords == res(p, s, x.at(parent)), e.name + " reconstruction identity");
      }
      int dim = 0;
      for (const Quotient& q : face_product_decomposition(p, t)) dim += static_cast<int>(q.poset.size()) - 2;
      c.expect(dim == static_cast<int>(p.size()) - static_cast<int>(t.size()) - 2, e.name + " dimension identity");
      for (Tube inner : t) {
        Tube outer = tree.parent(inner);
        ++pairs;
        auto tm = t_max(p, x, inner, outer);
        c.expect(!tm || *tm > 0, e.name + " t_max");
        Tubing rest = t;
        rest.erase(std::find(rest.begin(), rest.end(), inner));
        for (const Rational& time : sample_times(tm)) {
          ConfigPoint y = expand(p, x, inner, outer, time);
          c.expect(tubing_of(p, y) == rest, e.name + " expanded tubing");
          auto [back, recovered] = collapse(p, y, inner, outer);
          c.expect(back == x && recovered == time, e.name + " expand/collapse round trip");
        }
      }
    }
  }
  c.note(tubings).note(" tubings, ").note(pairs).note(" adjacent pairs, 3 times each, exact");
}

void ratio_demo(Check& c) {
  RatioDemo demo = ratio_counterexample_demo(Rational(0), Rational(1));
  c.expect(demo.limits_agree, "limits differ");
  c.expect(demo.final_gap >= Rational(1, 2), "ratio gap " + format_rational(demo.final_gap));
  c.expect(demo.first.samples.size() == 5 && demo.second.samples.size() == 5, "samples at k=2..6");
  for (std::size_t i = 0; i < demo.first.samples.size(); ++i) {
    c.expect(demo.first.samples[i].k == static_cast<int>(i) + 2, "sample exponents");
  }
  c.note("same limit, ratio limits 0 and 1, gap ").note(format_rational(demo.final_gap)).note(" at t=10^-6");
}

void euler_simple(Check& c) {
  std::size_t lattices = 0;
  auto check = [&](const FaceLattice& l, const std::string& name, bool simple) {
    ++lattices;
    check_graded(l);
    c.expect(euler_sum(l) == 0, name + " Euler sum " + std::to_string(euler_sum(l)));
    if (simple) c.expect(is_simple(l), name + " not simple");
  };
  for (const auto& e : corpus::desk()) {
    FaceLattice a = associahedron_face_lattice(e.poset);
    c.expect(a.dimension == static_cast<int>(e.poset.size()) - 2, e.name + " dimension");
    check(a, e.name + " A(P)", true);
    check(order_polytope_face_lattice(e.poset), e.name + " Ord(P)", false);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    check(cyclohedron_face_lattice(corpus::circular_chain(n)), "CC" + std::to_string(n), true);
    check(cyclohedron_face_lattice(corpus::circular_claw(n)), "CK" + std::to_string(n), true);
  }
  c.note(lattices).note(" lattices graded with Euler sum 0; associahedra and cyclohedra simple");
}

struct Spec {
  const char* title;
  double budget;
  std::function<void(Check&)> body;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all{
      {"pentagon A(C4)", 1, pentagon},
      {"hexagon A(K3)", 1, hexagon},
      {"N4 pentagon", 1, n4_pentagon},
      {"W5 melting and certification", 10, w5},
      {"associahedron ladder C4..C6", 60, associahedron_ladder},
      {"permutohedron ladder K3..K5", 60, permutohedron_ladder},
      {"H6 flagness counterexample", 1, flagness},
      {"affine cyclohedra", 60, affine},
      {"compactification suite", 300, compactification},
      {"ratio counterexample demo", 1, ratio_demo},
      {"Euler and simplicity", 300, euler_simple},
  };
  return all;
}

}  // namespace

Result run(int id) {
  if (id < 1 || id > kCriteria) throw RangeError("criterion " + std::to_string(id) + " does not exist");
  const Spec& spec = specs()[static_cast<std::size_t>(id - 1)];
  Result r;
  r.id = id;
  r.title = spec.title;
  r.budget_seconds = spec.budget;
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail.str("");
    c.detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = c.pass;
  r.detail = c.detail.str();
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  if (r.pass && r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail = "over time budget; " + r.detail;
  }
  return r;
}

std::vector<Result> run_all() {
  std::vector<Result> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run(id));
  return out;
}

std::string format(const Result& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << (r.pass ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.title << " (" << r.seconds
      << " s, budget " << static_cast<int>(r.budget_seconds) << " s): " << r.detail;
  return out.str();
}

}  // namespace posetahedra::acceptance
