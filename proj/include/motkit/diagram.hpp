#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace motkit {

// A "plain" permutation of diagram vertex positions: image[i] is the position
// that position i is sent to.
using VertexPerm = std::vector<int>;

VertexPerm identity_perm(int n);
VertexPerm compose_perms(const VertexPerm& f, const VertexPerm& g);  // f after g
VertexPerm inverse_perm(const VertexPerm& f);

struct DiagramEdge {
  int a = 0;             // vertex labels, a < b
  int b = 0;
  int multiplicity = 1;  // 1, 2 or 3
  // For multiplicity > 1 the vertex carrying the longer root; the arrow in
  // the usual picture points away from it. 0 for simple edges.
  int long_end = 0;

  bool operator==(const DiagramEdge&) const = default;
};

struct DiagramComponent {
  char type = 'A';  // A B C D E F G
  int rank = 0;
  std::vector<int> vertices;  // labels in Bourbaki order
};

// Dynkin diagram of a (semisimple) root datum: a disjoint union of connected
// diagrams of types A..G, with globally unique integer vertex labels.
// Labels follow Bourbaki numbering inside each component, offset so that the
// i-th component starts right after the previous one.
class DynkinDiagram {
public:
  static DynkinDiagram build(const std::vector<std::pair<char, int>>& spec);
  // "A3;G2" -> [A3, G2]
  static DynkinDiagram parse(const std::string& spec);

  int rank() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::vector<DiagramComponent>& components() const { return components_; }

  // Cartan matrix over vertex positions; entry (i,j) is <alpha_j, alpha_i^vee>,
  // so the simple reflection at i acts by c |-> c - (row_i . c) e_i on
  // root coordinates.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int position_of(int label) const;  // throws on unknown label
  int label_of(int position) const { return vertices_.at(position); }
  bool has_vertex(int label) const;

  std::vector<int> positions_of(const std::set<int>& labels) const;
  std::set<int> labels_of(const std::vector<int>& positions) const;

  bool is_automorphism(const VertexPerm& perm) const;

  // Diagram induced on a subset of vertices (keeps labels).
  DynkinDiagram induced(const std::set<int>& labels) const;

  std::string str() const;  // "A3;G2"

  bool operator==(const DynkinDiagram& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

private:
  std::vector<int> vertices_;
  std::vector<DiagramEdge> edges_;
  std::vector<DiagramComponent> components_;
  std::vector<std::vector<int>> cartan_;

  void finalize();  // computes the Cartan matrix, validates shape
};

// A group of diagram automorphisms given by generators, acting on vertex
// positions. Used both for the Galois-style action on a diagram and for the
// full automorphism group.
class StarAction {
public:
  static StarAction trivial(DynkinDiagram diagram);
  // Validates that every generator is a diagram automorphism.
  static StarAction create(DynkinDiagram diagram, std::vector<VertexPerm> generators);

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<VertexPerm>& generators() const { return generators_; }
  // All elements of the generated group (always contains the identity).
  const std::vector<VertexPerm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  // Orbit partition of a vertex subset (labels); orbits are sorted, and the
  // partition is sorted by smallest member.
  std::vector<std::set<int>> orbits_of(const std::set<int>& subset) const;
  std::vector<std::set<int>> orbits() const;
  // True iff the subset is a union of full orbits.
  bool is_invariant(const std::set<int>& subset) const;
  std::set<int> apply(const std::set<int>& subset, const VertexPerm& g) const;

private:
  DynkinDiagram diagram_;
  std::vector<VertexPerm> generators_;
  std::vector<VertexPerm> elements_;
};

// Full automorphism group of the diagram, including permutations of
// isomorphic components.
StarAction diagram_automorphisms(const DynkinDiagram& diagram);

// Positive roots of the root system of a diagram, as coordinate vectors in
// the simple-root basis (indexed by vertex positions). The first rank()
// entries are the simple roots themselves.
class RootSystem {
public:
  static RootSystem of(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }

  // Image of the positive root with index r under the simple reflection at
  // vertex position i, encoded as +-(index+1): positive for a positive root,
  // negative when the image is the negative of that root.
  int reflect(int simple_pos, int root_idx) const { return refl_[simple_pos][root_idx]; }

  // Index of a positive root given by its coordinates; -1 if absent.
  int index_of(const std::vector<int>& coords) const;

private:
  DynkinDiagram diagram_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> refl_;
};

// Classical count of positive roots per component type (for checks).
int classical_positive_root_count(char type, int rank);

}  // namespace motkit
