#include "motkit/cgm.hpp"

#include <algorithm>
#include <map>

#include "motkit/common.hpp"

namespace motkit {

GroupDatum GroupDatum::create(DynkinDiagram diagram, StarAction star,
                              std::set<int> distinguished) {
  if (!(star.diagram() == diagram)) throw error("star action is attached to another diagram");
  for (int v : distinguished)
    if (!diagram.has_vertex(v)) throw error("unknown vertex: " + std::to_string(v));
  if (!star.is_invariant(distinguished))
    throw error("distinguished vertex set is not a union of star orbits");
  GroupDatum g{std::move(diagram), std::move(star), std::move(distinguished)};
  return g;
}

GroupDatum GroupDatum::split(const DynkinDiagram& diagram) {
  std::set<int> all(diagram.vertices().begin(), diagram.vertices().end());
  return create(diagram, StarAction::trivial(diagram), std::move(all));
}

bool GroupDatum::is_quasi_split() const {
  return distinguished.size() == diagram.vertices().size();
}

bool GroupDatum::theta_distinguished(const std::set<int>& theta) const {
  return std::includes(distinguished.begin(), distinguished.end(), theta.begin(), theta.end());
}

namespace {

// Star group element as a permutation of positive roots (acts on the
// simple-root coordinates by permuting positions).
RootPerm star_root_perm(const RootSystem& roots, const VertexPerm& g) {
  const int n = roots.rank();
  RootPerm out(roots.num_positive());
  for (int r = 0; r < roots.num_positive(); ++r) {
    const auto& c = roots.positive_roots()[r];
    std::vector<int> img(n, 0);
    for (int j = 0; j < n; ++j) img[g[j]] = c[j];
    const int idx = roots.index_of(img);
    if (idx < 0) throw error("internal: star action does not permute the positive roots");
    out[r] = idx + 1;
  }
  return out;
}

}  // namespace

std::vector<CgmPiece> cgm_decompose(const GroupDatum& datum, const std::set<int>& theta,
                                    WeylOptions options) {
  for (int v : theta)
    if (!datum.diagram.has_vertex(v)) throw error("unknown vertex: " + std::to_string(v));
  if (!datum.star.is_invariant(theta))
    throw error("type is not star-invariant: the variety is not defined over the base");
  if (!datum.theta_distinguished(theta))
    throw error("decomposition requires a rational point: the type is not distinguished "
                "in the Tits index");

  std::set<int> levi;
  for (int v : datum.diagram.vertices())
    if (!theta.count(v)) levi.insert(v);

  WeylGroup w = WeylGroup::generate(RootSystem::of(datum.diagram), options);
  const auto cosets = w.min_double_coset_reps(levi, levi);

  // Orbits of the representatives under the star action (conjugation by the
  // induced root permutation).
  std::vector<RootPerm> star_perms;
  for (const auto& g : datum.star.elements()) star_perms.push_back(star_root_perm(w.roots(), g));

  std::map<int, std::vector<int>> orbits;  // canonical rep -> orbit members
  std::map<int, int> seen;                 // element -> canonical rep
  for (const auto& dc : cosets) {
    if (seen.count(dc.rep)) continue;
    std::set<int> orbit;
    for (const auto& s : star_perms) {
      const RootPerm conj =
          compose_root_perms(s, compose_root_perms(w.perm(dc.rep), inverse_root_perm(s)));
      orbit.insert(w.index_of(conj));
    }
    const int canon = *orbit.begin();
    for (int e : orbit) seen[e] = canon;
    orbits[canon] = std::vector<int>(orbit.begin(), orbit.end());
  }

  std::vector<CgmPiece> pieces;
  for (const auto& [rep, members] : orbits) {
    CgmPiece piece;
    piece.levi = levi;
    piece.shift = w.length(rep);
    piece.multiplicity = static_cast<int>(members.size());
    piece.rep = rep;
    // Simple roots of the Levi sent to simple roots of the Levi survive into
    // the intersection parabolic; the piece type is their complement in J.
    std::set<int> intersection;
    for (int v : levi) {
      const int img = w.perm(rep)[datum.diagram.position_of(v)];
      if (img > 0 && img - 1 < w.rank()) {
        const int label = datum.diagram.label_of(img - 1);
        if (levi.count(label)) intersection.insert(label);
      }
    }
    for (int v : levi)
      if (!intersection.count(v)) piece.piece_type.insert(v);
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const CgmPiece& a, const CgmPiece& b) {
    return std::tuple(a.shift, a.piece_type, a.rep) < std::tuple(b.shift, b.piece_type, b.rep);
  });
  return pieces;
}

PoincareIdentity cgm_poincare_identity(const GroupDatum& datum, const std::set<int>& theta,
                                       WeylOptions options) {
  if (!datum.star.is_trivial() || !datum.is_quasi_split())
    throw error("the Poincare identity check needs a split group datum");
  const auto pieces = cgm_decompose(datum, theta, options);

  WeylGroup w = WeylGroup::generate(RootSystem::of(datum.diagram), options);
  PoincareIdentity out;
  out.rhs = w.poincare(theta);
  for (const auto& piece : pieces) {
    LaurentPoly p = w.parabolic_poincare(piece.levi, piece.piece_type).shifted(piece.shift);
    for (int k = 0; k < piece.multiplicity; ++k) out.lhs += p;
  }
  out.residual = out.rhs - out.lhs;
  out.holds = out.residual.is_zero();
  return out;
}

std::vector<RostEntry> rost_from_cgm(int m, int i0) {
  if (m < 1) throw error("half-dimension must be at least 1");
  if (i0 < 0 || i0 > m)
    throw error("Witt index " + std::to_string(i0) + " out of range for half-dimension " +
                std::to_string(m));
  // Peel one isotropy step at a time: each step contributes the extreme Tate
  // classes of a three-piece decomposition and recurses into the inner
  // quadric with one hyperbolic plane less.
  std::vector<RostEntry> out;
  int dim = 2 * m;
  int offset = 0;
  int steps = i0;
  while (steps > 0 && dim >= 2) {
    out.push_back({RostKind::tate, offset});
    out.push_back({RostKind::tate, offset + dim - 2});
    dim -= 2;
    offset += 1;
    steps -= 1;
  }
  if (dim >= 2) out.push_back({RostKind::kernel, offset});
  std::sort(out.begin(), out.end(), [](const RostEntry& a, const RostEntry& b) {
    return std::pair(a.twist, a.kind == RostKind::kernel) <
           std::pair(b.twist, b.kind == RostKind::kernel);
  });
  return out;
}

}  // namespace motkit
