#include "motkit/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "motkit/common.hpp"

namespace motkit {

VertexPerm identity_perm(int n) {
  VertexPerm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

VertexPerm compose_perms(const VertexPerm& f, const VertexPerm& g) {
  VertexPerm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f.at(g[i]);
  return out;
}

VertexPerm inverse_perm(const VertexPerm& f) {
  VertexPerm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<int>(i);
  return out;
}

namespace {

void check_admissible(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;  // D3 is rejected; say A3 if you mean A3
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw error("invalid Cartan type: " + std::string(1, type) + std::to_string(rank));
}

// Edges of one component with local labels 1..rank.
std::vector<DiagramEdge> component_edges(char type, int rank) {
  std::vector<DiagramEdge> edges;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edges.push_back({i, i + 1, 1, 0});
  };
  switch (type) {
    case 'A':
      chain(1, rank);
      break;
    case 'B':
      chain(1, rank - 1);
      edges.push_back({rank - 1, rank, 2, rank - 1});
      break;
    case 'C':
      chain(1, rank - 1);
      edges.push_back({rank - 1, rank, 2, rank});
      break;
    case 'D':
      chain(1, rank - 2);
      edges.push_back({rank - 2, rank - 1, 1, 0});
      edges.push_back({rank - 2, rank, 1, 0});
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7)(-8), with 2 attached to 4.
      edges.push_back({1, 3, 1, 0});
      edges.push_back({3, 4, 1, 0});
      edges.push_back({2, 4, 1, 0});
      chain(4, rank);
      break;
    case 'F':
      edges.push_back({1, 2, 1, 0});
      edges.push_back({2, 3, 2, 2});
      edges.push_back({3, 4, 1, 0});
      break;
    case 'G':
      edges.push_back({1, 2, 3, 2});
      break;
  }
  return edges;
}

}  // namespace

DynkinDiagram DynkinDiagram::build(const std::vector<std::pair<char, int>>& spec) {
  DynkinDiagram d;
  int offset = 0;
  for (const auto& [type, rank] : spec) {
    check_admissible(type, rank);
    DiagramComponent comp;
    comp.type = type;
    comp.rank = rank;
    for (int i = 1; i <= rank; ++i) {
      comp.vertices.push_back(offset + i);
      d.vertices_.push_back(offset + i);
    }
    for (DiagramEdge e : component_edges(type, rank)) {
      e.a += offset;
      e.b += offset;
      if (e.long_end != 0) e.long_end += offset;
      if (e.a > e.b) {
        std::swap(e.a, e.b);
      }
      d.edges_.push_back(e);
    }
    d.components_.push_back(std::move(comp));
    offset += rank;
  }
  d.finalize();
  return d;
}

DynkinDiagram DynkinDiagram::parse(const std::string& spec) {
  std::vector<std::pair<char, int>> parts;
  std::size_t i = 0;
  while (i < spec.size()) {
    std::size_t j = spec.find(';', i);
    std::string tok = spec.substr(i, j == std::string::npos ? std::string::npos : j - i);
    i = (j == std::string::npos) ? spec.size() : j + 1;
    if (tok.empty()) continue;
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::string num = tok.substr(1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw error("invalid Cartan type: " + tok);
    parts.emplace_back(type, std::stoi(num));
  }
  if (parts.empty()) throw error("empty diagram spec");
  return build(parts);
}

void DynkinDiagram::finalize() {
  const int n = rank();
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (const auto& e : edges_) {
    const int pa = position_of(e.a), pb = position_of(e.b);
    if (e.multiplicity == 1) {
      cartan_[pa][pb] = cartan_[pb][pa] = -1;
    } else {
      const int plong = position_of(e.long_end);
      const int pshort = (plong == pa) ? pb : pa;
      cartan_[plong][pshort] = -1;
      cartan_[pshort][plong] = -e.multiplicity;
    }
  }
}

int DynkinDiagram::position_of(int label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  throw error("unknown vertex: " + std::to_string(label));
}

bool DynkinDiagram::has_vertex(int label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::vector<int> DynkinDiagram::positions_of(const std::set<int>& labels) const {
  std::vector<int> out;
  for (int l : labels) out.push_back(position_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> DynkinDiagram::labels_of(const std::vector<int>& positions) const {
  std::set<int> out;
  for (int p : positions) out.insert(label_of(p));
  return out;
}

bool DynkinDiagram::is_automorphism(const VertexPerm& perm) const {
  const int n = rank();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan_[perm[i]][perm[j]] != cartan_[i][j]) return false;
  return true;
}

DynkinDiagram DynkinDiagram::induced(const std::set<int>& labels) const {
  DynkinDiagram d;
  for (int v : vertices_)
    if (labels.count(v)) d.vertices_.push_back(v);
  if (d.vertices_.size() != labels.size()) throw error("induced subdiagram: unknown vertex");
  for (const auto& e : edges_)
    if (labels.count(e.a) && labels.count(e.b)) d.edges_.push_back(e);
  // Components of the induced graph, kept as unlabeled chunks: only the
  // vertex set and the Cartan matrix matter downstream.
  d.finalize();
  return d;
}

std::string DynkinDiagram::str() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += ";";
    out += std::string(1, c.type) + std::to_string(c.rank);
  }
  return out;
}

StarAction StarAction::trivial(DynkinDiagram diagram) {
  return create(std::move(diagram), {});
}

StarAction StarAction::create(DynkinDiagram diagram, std::vector<VertexPerm> generators) {
  StarAction act;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!diagram.is_automorphism(generators[k]))
      throw error("star-action generator " + std::to_string(k + 1) +
                  " is not a diagram automorphism");
  }
  act.diagram_ = std::move(diagram);
  act.generators_ = std::move(generators);

  // Closure of the generated group.
  std::vector<VertexPerm> elems{identity_perm(act.diagram_.rank())};
  std::map<VertexPerm, int> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : act.generators_) {
      VertexPerm next = compose_perms(g, elems[i]);
      if (seen.emplace(next, 1).second) {
        elems.push_back(std::move(next));
        if (elems.size() > 1000000) throw error("star action group too large");
      }
    }
  }
  act.elements_ = std::move(elems);
  return act;
}

std::vector<std::set<int>> StarAction::orbits_of(const std::set<int>& subset) const {
  for (int v : subset)
    if (!diagram_.has_vertex(v)) throw error("unknown vertex: " + std::to_string(v));
  std::vector<std::set<int>> parts;
  std::set<int> done;
  for (int v : subset) {
    if (done.count(v)) continue;
    std::set<int> orbit;
    const int p = diagram_.position_of(v);
    for (const auto& g : elements_) orbit.insert(diagram_.label_of(g[p]));
    // Restrict to the subset; invariance is a separate question.
    std::set<int> within;
    for (int w : orbit)
      if (subset.count(w)) within.insert(w);
    for (int w : within) done.insert(w);
    parts.push_back(std::move(within));
  }
  return parts;
}

std::vector<std::set<int>> StarAction::orbits() const {
  std::set<int> all(diagram_.vertices().begin(), diagram_.vertices().end());
  return orbits_of(all);
}

bool StarAction::is_invariant(const std::set<int>& subset) const {
  for (int v : subset) {
    const int p = diagram_.position_of(v);
    for (const auto& g : elements_)
      if (!subset.count(diagram_.label_of(g[p]))) return false;
  }
  return true;
}

std::set<int> StarAction::apply(const std::set<int>& subset, const VertexPerm& g) const {
  std::set<int> out;
  for (int v : subset) out.insert(diagram_.label_of(g[diagram_.position_of(v)]));
  return out;
}

StarAction diagram_automorphisms(const DynkinDiagram& diagram) {
  std::vector<VertexPerm> gens;
  const int n = diagram.rank();

  // Automorphisms fixing each component, found by brute force inside the
  // component (component ranks are <= 8).
  for (const auto& comp : diagram.components()) {
    std::vector<int> pos;
    for (int v : comp.vertices) pos.push_back(diagram.position_of(v));
    std::vector<int> local(pos.size());
    std::iota(local.begin(), local.end(), 0);
    do {
      VertexPerm perm = identity_perm(n);
      bool moved = false;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        perm[pos[i]] = pos[local[i]];
        if (local[i] != static_cast<int>(i)) moved = true;
      }
      if (moved && diagram.is_automorphism(perm)) gens.push_back(perm);
    } while (std::next_permutation(local.begin(), local.end()));
  }

  // Swaps of adjacent isomorphic components.
  const auto& comps = diagram.components();
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].type != comps[j].type || comps[i].rank != comps[j].rank) continue;
      VertexPerm perm = identity_perm(n);
      for (int k = 0; k < comps[i].rank; ++k) {
        const int a = diagram.position_of(comps[i].vertices[k]);
        const int b = diagram.position_of(comps[j].vertices[k]);
        perm[a] = b;
        perm[b] = a;
      }
      if (diagram.is_automorphism(perm)) gens.push_back(perm);
    }
  }
  return StarAction::create(diagram, std::move(gens));
}

RootSystem RootSystem::of(DynkinDiagram diagram) {
  RootSystem rs;
  rs.diagram_ = std::move(diagram);
  const int n = rs.diagram_.rank();
  const auto& A = rs.diagram_.cartan();

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    index.emplace(e, i);
    rs.roots_.push_back(std::move(e));
  }
  // Close the set of positive roots under simple reflections.
  for (std::size_t r = 0; r < rs.roots_.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      const std::vector<int> c = rs.roots_[r];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += A[i][j] * c[j];
      std::vector<int> img = c;
      img[i] -= pairing;
      bool positive = std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; });
      if (positive && !index.count(img)) {
        index.emplace(img, static_cast<int>(rs.roots_.size()));
        rs.roots_.push_back(img);
      }
    }
  }

  rs.refl_.assign(n, std::vector<int>(rs.roots_.size(), 0));
  for (int i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < rs.roots_.size(); ++r) {
      const std::vector<int>& c = rs.roots_[r];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += A[i][j] * c[j];
      std::vector<int> img = c;
      img[i] -= pairing;
      bool positive = std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; });
      if (positive) {
        rs.refl_[i][r] = index.at(img) + 1;
      } else {
        // Only the simple root itself is sent to a negative root.
        for (int& x : img) x = -x;
        rs.refl_[i][r] = -(index.at(img) + 1);
      }
    }
  }
  return rs;
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  for (std::size_t r = 0; r < roots_.size(); ++r)
    if (roots_[r] == coords) return static_cast<int>(r);
  return -1;
}

int classical_positive_root_count(char type, int rank) {
  switch (type) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw error("invalid Cartan type: " + std::string(1, type));
}

}  // namespace motkit
