#include "posetahedra/face_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "posetahedra/errors.hpp"

namespace posetahedra {

std::optional<std::size_t> FaceLattice::find(const FaceLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FaceLattice::vertices_of(std::size_t f) const {
  std::vector<std::vector<std::size_t>> lower(faces.size());
  for (const auto& [a, b] : covers) lower[b].push_back(a);
  std::vector<bool> seen(faces.size(), false);
  std::vector<std::size_t> stack{f};
  std::vector<std::size_t> out;
  seen[f] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (faces[v].dim == 0) out.push_back(v);
    for (std::size_t w : lower[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FaceLattice::index_labels() {
  by_label_.clear();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!faces[i].is_empty) by_label_[faces[i].label] = i;
  }
}

FaceLabel label_of(const Poset& p, const std::vector<Tube>& tubes) {
  FaceLabel out;
  out.reserve(tubes.size());
  for (Tube t : tubes) out.push_back(p.ids_of(t));
  return out;
}

FaceLattice tubing_lattice(const std::vector<FaceLabel>& tubings, int dimension) {
  FaceLattice lattice;
  lattice.dimension = dimension;
  std::vector<std::size_t> order(tubings.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tubings[a].size() > tubings[b].size(); });
  lattice.faces.push_back(Face{{}, -1, true});
  for (std::size_t i : order) {
    lattice.faces.push_back(Face{tubings[i], dimension - static_cast<int>(tubings[i].size()), false});
  }
  lattice.index_labels();
  lattice.empty_face = 0;
  lattice.full_face = lattice.faces.size() - 1;
  for (std::size_t f = 1; f < lattice.faces.size(); ++f) {
    const auto& label = lattice.faces[f].label;
    if (lattice.faces[f].dim == 0) lattice.covers.emplace_back(0, f);
    for (std::size_t drop = 0; drop < label.size(); ++drop) {
      FaceLabel smaller = label;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      auto up = lattice.find(smaller);
      if (!up) throw NotAFaceError("face set is not closed under removing a tube");
      lattice.covers.emplace_back(f, *up);
    }
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());
  if (lattice.find(FaceLabel{}) != lattice.full_face) throw NotAFaceError("the empty tubing is missing");
  return lattice;
}

FaceLattice associahedron_face_lattice(const Poset& p) {
  std::vector<FaceLabel> labels;
  for (const auto& t : enumerate_proper_tubings(p, false)) labels.push_back(label_of(p, t));
  return tubing_lattice(labels, static_cast<int>(p.size()) - 2);
}

FaceLattice order_polytope_face_lattice(const Poset& p) {
  FaceLattice lattice;
  lattice.dimension = static_cast<int>(p.size()) - 2;
  auto partitions = enumerate_tubing_partitions(p, p.all());
  std::stable_sort(partitions.begin(), partitions.end(),
                   [](const Tubing& a, const Tubing& b) { return a.size() < b.size(); });
  for (const auto& t : partitions) lattice.faces.push_back(Face{label_of(p, t), static_cast<int>(t.size()) - 2, false});
  lattice.index_labels();
  lattice.empty_face = 0;
  lattice.full_face = lattice.faces.size() - 1;
  for (std::size_t f = 0; f < partitions.size(); ++f) {
    const Tubing& finer = partitions[f];
    for (std::size_t a = 0; a < finer.size(); ++a) {
      for (std::size_t b = a + 1; b < finer.size(); ++b) {
        Tubing coarser;
        for (std::size_t k = 0; k < finer.size(); ++k) {
          if (k != a && k != b) coarser.push_back(finer[k]);
        }
        coarser.push_back(finer[a] | finer[b]);
        sort_canonical(coarser);
        if (auto lower = lattice.find(label_of(p, coarser))) lattice.covers.emplace_back(*lower, f);
      }
    }
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());
  return lattice;
}

void check_graded(const FaceLattice& lattice) {
  std::vector<int> up(lattice.faces.size(), 0), down(lattice.faces.size(), 0);
  for (const auto& [a, b] : lattice.covers) {
    if (lattice.faces[b].dim != lattice.faces[a].dim + 1) {
      throw NotGradedError("cover between faces of dimensions " + std::to_string(lattice.faces[a].dim) + " and " +
                           std::to_string(lattice.faces[b].dim));
    }
    ++up[a];
    ++down[b];
  }
  for (std::size_t f = 0; f < lattice.faces.size(); ++f) {
    if (f != lattice.full_face && up[f] == 0) throw NotGradedError("face without an upper cover");
    if (f != lattice.empty_face && down[f] == 0) throw NotGradedError("face without a lower cover");
  }
  if (lattice.faces[lattice.empty_face].dim != -1 || lattice.faces[lattice.full_face].dim != lattice.dimension) {
    throw NotGradedError("extreme faces have the wrong dimension");
  }
}

std::vector<std::int64_t> f_vector(const FaceLattice& lattice) {
  check_graded(lattice);
  std::vector<std::int64_t> f(static_cast<std::size_t>(lattice.dimension + 1), 0);
  for (const auto& face : lattice.faces) {
    if (face.dim >= 0) ++f[static_cast<std::size_t>(face.dim)];
  }
  return f;
}

std::vector<std::int64_t> h_vector(const FaceLattice& lattice) {
  const auto f = f_vector(lattice);
  const int d = lattice.dimension;
  auto binom = [](std::int64_t n, std::int64_t k) -> std::int64_t {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // Dual complex: f^K_{i-1} = f_{d-i}.
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t s = 0;
    for (int i = 0; i <= k; ++i) {
      std::int64_t term = binom(d - i, k - i) * f[static_cast<std::size_t>(d - i)];
      s += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  return h;
}

std::int64_t euler_sum(const FaceLattice& lattice) {
  std::int64_t s = 0;
  for (const auto& face : lattice.faces) s += (face.dim % 2 == 0) ? 1 : -1;
  return s;
}

bool is_simple(const FaceLattice& lattice) {
  std::vector<int> edges(lattice.faces.size(), 0);
  for (const auto& [a, b] : lattice.covers) {
    if (lattice.faces[a].dim == 0) ++edges[a];
  }
  for (std::size_t f = 0; f < lattice.faces.size(); ++f) {
    if (lattice.faces[f].dim == 0 && edges[f] != lattice.dimension) return false;
  }
  return true;
}

FlagCheck is_flag_dual(const Poset& p) {
  const auto tubings = enumerate_proper_tubings(p, false);
  const auto tubes = enumerate_tubes(p, true);
  std::map<Tubing, bool> is_face;
  for (const auto& t : tubings) is_face[t] = true;
  auto face = [&](const Tubing& t) { return is_face.count(t) != 0; };

  for (std::size_t k = 3; k + 1 <= p.size(); ++k) {
    for (const auto& base : tubings) {
      if (base.size() != k - 1) continue;
      for (Tube extra : tubes) {
        if (!canonical_less(base.back(), extra)) continue;
        Tubing candidate = base;
        candidate.push_back(extra);
        if (face(candidate)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && minimal; ++drop) {
          Tubing sub = candidate;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = face(sub);
        }
        if (minimal) return FlagCheck{false, candidate};
      }
    }
  }
  return FlagCheck{};
}

std::vector<Quotient> face_product_decomposition(const Poset& p, const Tubing& tubing) {
  const Tubing checked = make_tubing(p, tubing);
  TubingTree tree(p, checked);
  std::vector<Quotient> out;
  for (Tube tau : tree.inner_nodes()) {
    const auto& kids = tree.children(tau);
    out.push_back(quotient_poset(p, tau, kids));
  }
  return out;
}

}  // namespace posetahedra
