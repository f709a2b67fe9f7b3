#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motkit/laurent.hpp"

namespace motkit {

// A finite, partially ordered family of field-extension nodes with a base
// node below everything, together with the atoms (indecomposable upper-motive
// classes) whose Tate-trace data lives over those nodes.
//
// Atom index 0 is always the unit atom "1": rank 1, trace 1 at every node.
// A user atom that is isotropic at the base is required to look exactly like
// the unit atom and is identified with it in normal forms.
class ExtensionLattice {
public:
  struct NodeSpec {
    std::string id;
    bool p_special = true;
    // Atoms whose function field this node models; several tags are allowed
    // (the same node can be the generic point of several equivalent atoms,
    // or of one atom relative to different lower nodes).
    std::vector<std::string> generic_point_of;
    // p-special closure node, when modeled. Implies this <= closure.
    std::optional<std::string> p_closure;
    // Field recipe tokens for qform ("adjoin sqrt(d)" entries as rational
    // literals, relative to the base field). Empty = the base field itself
    // or an opaque node.
    std::vector<std::string> adjoin;
    bool opaque = false;  // true when the node has no computable recipe
  };

  struct AtomSpec {
    std::string id;
    int rank = 1;
    std::set<std::string> isotropy;            // node ids with nonzero trace
    std::map<std::string, LaurentPoly> trace;  // node id -> trace, sparse
  };

  static std::shared_ptr<const ExtensionLattice> build(
      const std::string& base_id, std::vector<NodeSpec> nodes,
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::vector<AtomSpec>& atoms, int prime = 2);

  int prime() const { return prime_; }

  // --- nodes ---
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int base_node() const { return base_; }
  int node_index(const std::string& id) const;  // throws "node not in lattice"
  const std::string& node_id(int n) const { return nodes_[n].id; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool p_special(int n) const { return nodes_[n].p_special; }
  std::optional<int> p_closure(int n) const { return p_closure_[n]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const NodeSpec& node_spec(int n) const { return nodes_[n]; }
  // Nodes tagged as the function field of the given atom, in node order.
  std::vector<int> generic_nodes_of(int atom) const;

  // --- atoms ---
  int num_atoms() const { return static_cast<int>(atom_ids_.size()); }
  int unit_atom() const { return 0; }
  int atom_index(const std::string& id) const;  // throws "unknown atom"
  const std::string& atom_id(int a) const { return atom_ids_[a]; }
  int atom_rank(int a) const { return atom_ranks_[a]; }
  const LaurentPoly& atom_trace(int a, int node) const;
  bool atom_isotropic_at(int a, int node) const;
  const std::set<int>& atom_isotropy(int a) const { return atom_isotropy_[a]; }
  // Unit-shaped atoms are identified with the unit atom.
  int canonical_atom(int a) const { return canonical_[a]; }

  // a dominates b: b is isotropic at every node where a is.
  bool dominates(int a, int b) const;
  bool equivalent_atoms(int a, int b) const;

private:
  int prime_ = 2;
  std::vector<NodeSpec> nodes_;
  int base_ = 0;
  std::vector<std::pair<int, int>> edges_;  // below -> above
  std::vector<std::vector<bool>> leq_;
  std::vector<std::optional<int>> p_closure_;

  std::vector<std::string> atom_ids_;
  std::vector<int> atom_ranks_;
  std::vector<std::set<int>> atom_isotropy_;
  std::vector<std::vector<LaurentPoly>> atom_traces_;  // [atom][node]
  std::vector<int> canonical_;

  void validate_atoms() const;
};

using LatticePtr = std::shared_ptr<const ExtensionLattice>;

// An object of the formal category: a finite multiset of (atom, twist)
// pairs over a lattice, kept in a canonical sorted normal form (atom id,
// then twist). The normal form is the complete decomposition; building the
// motive in any pair order yields the same value.
class FormalMotive {
public:
  FormalMotive(LatticePtr lattice, const std::vector<std::pair<std::string, int>>& pairs);
  FormalMotive(LatticePtr lattice, const std::vector<std::pair<int, int>>& pairs_by_index);
  static FormalMotive zero(LatticePtr lattice) { return FormalMotive(std::move(lattice), std::vector<std::pair<int, int>>{}); }

  const LatticePtr& lattice() const { return lattice_; }
  // Canonicalized (atom index, twist) pairs, sorted by (atom id, twist).
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t num_summands() const { return pairs_.size(); }

  FormalMotive shifted(int k) const;
  FormalMotive direct_sum(const FormalMotive& o) const;

  // Distinct atom classes occurring in the motive (canonical indices).
  std::vector<int> atom_classes() const;

  std::string str() const;

private:
  LatticePtr lattice_;
  std::vector<std::pair<int, int>> pairs_;

  void normalize();
};

// Smallest twist; the atoms themselves all have hook 0.
int hook(const FormalMotive& m);  // throws on the zero motive
std::int64_t rank(const FormalMotive& m);

LaurentPoly tate_trace(const FormalMotive& m, int node);
LaurentPoly tate_trace(const FormalMotive& m, const std::string& node_id);

// Defined only at the base node: the sub-multiset of summands anisotropic
// there. Over higher nodes an atom may be partially split and the residue is
// not an object of the base model.
FormalMotive anisotropic_part(const FormalMotive& m, int node);

bool trace_equal_everywhere(const FormalMotive& m, const FormalMotive& n);
// Comparison restricted to the nodes tagged as function fields of the atom
// classes of m and n (drops unit classes, which carry no such node).
bool trace_equal_on_generic_nodes(const FormalMotive& m, const FormalMotive& n);

struct IsoResult {
  bool isomorphic = false;
  // Matching of pair positions (index into m.pairs(), index into n.pairs()).
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  std::string reason;  // set when not isomorphic
};
// Decides isomorphism by the trace-stripping / hook-layer domination-chain
// algorithm; the verdict is equivalent to the existence of a bijection of
// the pair multisets matching twists and atom equivalence classes.
IsoResult is_isomorphic(const FormalMotive& m, const FormalMotive& n);

LaurentPoly tensor_trace(const FormalMotive& m, const FormalMotive& n, int node);

struct CancellationResult {
  bool ok = false;
  // Per-node certificate lines "node: trace".
  std::vector<std::string> certificate;
  std::string violation;  // first violating node when !ok
};
// Checks the cancellation property: given that n and nprime both dominate m
// and that the tensor traces with m agree at every node, the traces of n and
// nprime must agree everywhere. Hypothesis failures throw; a verdict of
// false would be a model-consistency failure and is reported, not thrown.
CancellationResult cancellation_check(const FormalMotive& m, const FormalMotive& n,
                                      const FormalMotive& nprime);

void check_same_lattice(const FormalMotive& a, const FormalMotive& b);

}  // namespace motkit
