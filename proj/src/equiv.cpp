#include "motkit/equiv.hpp"

#include <algorithm>

#include "motkit/common.hpp"

namespace motkit {

TitsTable TitsTable::create(DynkinDiagram diagram, StarAction star, int p, LatticePtr lattice,
                            std::map<int, std::set<int>> distinguished) {
  if (!(star.diagram() == diagram)) throw error("star action is attached to another diagram");
  if (!lattice) throw error("tits table without a lattice");
  if (p < 2) throw error("tits table prime must be at least 2");
  TitsTable t{std::move(diagram), std::move(star), p, std::move(lattice),
              std::move(distinguished)};
  for (int n = 0; n < t.lattice->num_nodes(); ++n)
    if (!t.distinguished.count(n))
      throw error("tits table missing node " + t.lattice->node_id(n));
  for (const auto& [n, set] : t.distinguished) {
    for (int v : set)
      if (!t.diagram.has_vertex(v))
        throw error("tits table at node " + t.lattice->node_id(n) +
                    " names an unknown vertex: " + std::to_string(v));
    if (!t.star.is_invariant(set))
      throw error("tits table at node " + t.lattice->node_id(n) +
                  ": distinguished set is not a union of star orbits");
  }
  for (const auto& [lo, hi] : t.lattice->edges()) {
    const auto& a = t.distinguished.at(lo);
    const auto& b = t.distinguished.at(hi);
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
      throw error("tits table distinguished sets shrink from node " + t.lattice->node_id(lo) +
                  " to " + t.lattice->node_id(hi));
  }
  const auto& base = t.distinguished.at(t.lattice->base_node());
  for (const auto& [n, set] : t.distinguished)
    if (!std::includes(set.begin(), set.end(), base.begin(), base.end()))
      throw error("tits table at node " + t.lattice->node_id(n) +
                  " does not contain the base distinguished set");
  return t;
}

DiagramIso DiagramIso::identity(const DynkinDiagram& d) {
  DiagramIso iso;
  for (int v : d.vertices()) iso.map[v] = v;
  return iso;
}

DiagramIso DiagramIso::create(const DynkinDiagram& from, const DynkinDiagram& to,
                              std::map<int, int> map, const StarAction& from_star,
                              const StarAction& to_star) {
  if (from.rank() != to.rank()) throw error("diagram isomorphism: ranks differ");
  if (static_cast<int>(map.size()) != from.rank())
    throw error("diagram isomorphism must map every vertex");
  // As a permutation of positions of `to`, phi must carry the Cartan matrix
  // of `from` onto that of `to`.
  const int n = from.rank();
  std::vector<int> pos_map(n, -1);  // from-position -> to-position
  std::vector<bool> hit(n, false);
  for (const auto& [a, b] : map) {
    if (!from.has_vertex(a)) throw error("diagram isomorphism: unknown vertex " + std::to_string(a));
    if (!to.has_vertex(b)) throw error("diagram isomorphism: unknown vertex " + std::to_string(b));
    pos_map[from.position_of(a)] = to.position_of(b);
    if (hit[to.position_of(b)]) throw error("diagram isomorphism is not a bijection");
    hit[to.position_of(b)] = true;
  }
  const auto& A = from.cartan();
  const auto& B = to.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A[i][j] != B[pos_map[i]][pos_map[j]])
        throw error("diagram isomorphism does not preserve the diagram");

  // Compatibility with the star actions: conjugation by phi must carry the
  // one generated group onto the other.
  auto conj = [&](const VertexPerm& g) {
    VertexPerm out(n);
    for (int i = 0; i < n; ++i) out[pos_map[i]] = pos_map[g[i]];
    return out;
  };
  const auto& from_elems = from_star.elements();
  const auto& to_elems = to_star.elements();
  if (from_elems.size() != to_elems.size())
    throw error("diagram isomorphism does not intertwine the star actions");
  for (const auto& g : from_elems) {
    const VertexPerm c = conj(g);
    if (std::find(to_elems.begin(), to_elems.end(), c) == to_elems.end())
      throw error("diagram isomorphism does not intertwine the star actions");
  }
  DiagramIso iso;
  iso.map = std::move(map);
  return iso;
}

std::set<int> DiagramIso::apply(const std::set<int>& subset) const {
  std::set<int> out;
  for (int v : subset) {
    auto it = map.find(v);
    if (it == map.end()) throw error("diagram isomorphism: unknown vertex " + std::to_string(v));
    out.insert(it->second);
  }
  return out;
}

DiagramIso DiagramIso::inverse() const {
  DiagramIso out;
  for (const auto& [a, b] : map) out.map[b] = a;
  return out;
}

MotEquivResult check_motequiv(const TitsTable& t1, const TitsTable& t2, const DiagramIso& phi,
                              const std::set<int>& theta0) {
  if (t1.lattice != t2.lattice) throw error("lattice mismatch");
  if (t1.p != t2.p) throw error("tits tables use different primes");
  for (int v : theta0)
    if (!t1.diagram.has_vertex(v)) throw error("unknown vertex: " + std::to_string(v));
  if (!t1.star.is_invariant(theta0)) throw error("theta0 is not star-invariant");

  const std::set<int> image0 = phi.apply(theta0);
  for (int n = 0; n < t1.lattice->num_nodes(); ++n) {
    if (!t1.lattice->p_special(n)) continue;
    const auto& d1 = t1.distinguished.at(n);
    const auto& d2 = t2.distinguished.at(n);
    const bool dist1 = std::includes(d1.begin(), d1.end(), theta0.begin(), theta0.end());
    const bool dist2 = std::includes(d2.begin(), d2.end(), image0.begin(), image0.end());
    if (dist1 != dist2) return {false, t1.lattice->node_id(n), "distinguished-iff"};
    if (dist1 && phi.apply(d1) != d2) return {false, t1.lattice->node_id(n), "index-mismatch"};
  }
  return {true, "", ""};
}

std::vector<std::pair<std::set<int>, std::set<int>>> motequiv_conclusions(
    const TitsTable& t1, const DiagramIso& phi, const std::set<int>& theta0) {
  if (!t1.star.is_invariant(theta0)) throw error("theta0 is not star-invariant");
  // Nonempty unions of star orbits containing theta0.
  const auto orbits = t1.star.orbits();
  std::vector<std::size_t> free_orbits;
  std::set<int> forced = theta0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    bool needed = false;
    for (int v : orbits[i])
      if (theta0.count(v)) needed = true;
    if (!needed) free_orbits.push_back(i);
  }

  std::vector<std::pair<std::set<int>, std::set<int>>> out;
  const std::size_t k = free_orbits.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::set<int> theta = forced;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i))
        theta.insert(orbits[free_orbits[i]].begin(), orbits[free_orbits[i]].end());
    if (theta.empty()) continue;
    out.emplace_back(theta, phi.apply(theta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CritborelResult critborel_check(const LaurentPoly& p1, const LaurentPoly& p2,
                                const std::map<int, bool>& s1, const std::map<int, bool>& s2,
                                const LatticePtr& lattice,
                                std::vector<std::string> asserted_hypotheses) {
  if (!lattice) throw error("criterion needs a lattice");
  auto validate = [&](const std::map<int, bool>& s, const char* name) {
    for (int n = 0; n < lattice->num_nodes(); ++n)
      if (!s.count(n))
        throw error(std::string(name) + " indicator table missing node " + lattice->node_id(n));
    for (const auto& [lo, hi] : lattice->edges())
      if (s.at(lo) && !s.at(hi))
        throw error(std::string(name) + " indicator table is not monotone from node " +
                    lattice->node_id(lo) + " to " + lattice->node_id(hi));
  };
  validate(s1, "first");
  validate(s2, "second");

  CritborelResult res;
  res.hypotheses = std::move(asserted_hypotheses);
  if (p1 != p2) {
    res.mismatch = "poincare";
    return res;
  }
  for (int n = 0; n < lattice->num_nodes(); ++n)
    if (s1.at(n) != s2.at(n)) {
      res.mismatch = lattice->node_id(n);
      return res;
    }
  res.verdict = true;
  return res;
}

const std::vector<CohInvPreset>& cohinv_presets() {
  static const std::vector<CohInvPreset> presets = {
      {{{"F4", 3}, {"E8", 5}},
       "b",
       "motives agree iff the invariants generate the same subgroup of "
       "H^3(F, Z/p(2))"},
      {{{"G2", 2}}, "none", "motives agree iff the groups are isomorphic"},
      {{{"1E6", 2}}, "f3", "motives agree iff f3 invariants are equal"},
      {{{"E7", 3}}, "b", "motives agree iff the invariants agree up to sign"},
  };
  return presets;
}

std::set<LaurentPoly> splitting_pattern(const FormalMotive& m) {
  std::set<LaurentPoly> out;
  for (int n = 0; n < m.lattice()->num_nodes(); ++n) out.insert(tate_trace(m, n));
  return out;
}

namespace {

// The first atom class of m, in canonical order, anisotropic at the node;
// -1 when every class is isotropic there.
int first_anisotropic_class(const FormalMotive& m, int node) {
  for (int a : m.atom_classes())
    if (!m.lattice()->atom_isotropic_at(a, node)) return a;
  return -1;
}

std::vector<int> admissible_generic_nodes(const FormalMotive& m, int atom, int node) {
  std::vector<int> out;
  for (int g : m.lattice()->generic_nodes_of(atom))
    if (m.lattice()->leq(node, g)) out.push_back(g);
  return out;
}

}  // namespace

Tower splitting_tower(const FormalMotive& m) {
  const auto& lat = *m.lattice();
  Tower tower;
  int node = lat.base_node();
  tower.chain.push_back(node);
  tower.traces.push_back(tate_trace(m, node));
  const std::int64_t full = rank(m);
  while (tower.traces.back().coeff_sum() < full) {
    const int a = first_anisotropic_class(m, node);
    if (a < 0)
      throw error("splitting tower stalls at node " + lat.node_id(node) +
                  ": every class is isotropic but the trace is not of full rank");
    const auto candidates = admissible_generic_nodes(m, a, node);
    if (candidates.empty())
      throw error("lattice lacks a function-field node for atom " + lat.atom_id(a) +
                  " above node " + lat.node_id(node));
    node = candidates.front();
    tower.chain.push_back(node);
    tower.traces.push_back(tate_trace(m, node));
  }
  return tower;
}

std::set<LaurentPoly> pattern_from_towers(const FormalMotive& m) {
  splitting_tower(m);  // surface the error cases of the canonical tower first
  const auto& lat = *m.lattice();
  const std::int64_t full = rank(m);

  auto moves = [&](int node) {
    std::vector<int> out;
    for (int a : m.atom_classes()) {
      if (lat.atom_isotropic_at(a, node)) continue;
      for (int g : admissible_generic_nodes(m, a, node)) out.push_back(g);
    }
    return out;
  };

  // Nodes reachable from the base by admissible tower steps.
  std::set<int> reachable;
  std::vector<int> stack{lat.base_node()};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (!reachable.insert(node).second) continue;
    for (int g : moves(node)) stack.push_back(g);
  }
  // A node lies on a completed tower iff a full-rank node is reachable from
  // it; dead branches do not contribute.
  std::map<int, bool> completes;
  auto can_complete = [&](auto&& self, int node) -> bool {
    auto it = completes.find(node);
    if (it != completes.end()) return it->second;
    completes[node] = false;  // guards against cycles (there are none: steps go up)
    bool ok = tate_trace(m, node).coeff_sum() == full;
    for (int g : moves(node))
      if (!ok) ok = self(self, g);
    completes[node] = ok;
    return ok;
  };

  std::set<LaurentPoly> out;
  for (int node : reachable)
    if (can_complete(can_complete, node)) out.insert(tate_trace(m, node));
  return out;
}

}  // namespace motkit
