#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motkit/cgm.hpp"
#include "motkit/diagram.hpp"
#include "motkit/laurent.hpp"
#include "motkit/motive.hpp"

namespace motkit {

// Higher Tits index data: the distinguished vertex set of a group skeleton
// at every node of an extension lattice.
struct TitsTable {
  DynkinDiagram diagram;
  StarAction star;
  int p = 2;
  LatticePtr lattice;
  std::map<int, std::set<int>> distinguished;  // node index -> vertex labels

  static TitsTable create(DynkinDiagram diagram, StarAction star, int p, LatticePtr lattice,
                          std::map<int, std::set<int>> distinguished);
};

// Vertex bijection between two diagrams preserving edges, multiplicities and
// arrows, and carrying one star action onto the other.
struct DiagramIso {
  std::map<int, int> map;  // label -> label

  static DiagramIso identity(const DynkinDiagram& d);
  static DiagramIso create(const DynkinDiagram& from, const DynkinDiagram& to,
                           std::map<int, int> map, const StarAction& from_star,
                           const StarAction& to_star);
  std::set<int> apply(const std::set<int>& subset) const;
  DiagramIso inverse() const;
};

struct MotEquivResult {
  bool verdict = false;
  std::string node;    // failing node id when false
  std::string clause;  // "distinguished-iff" or "index-mismatch"
};

// Decides the Tits-table criterion for motivic equivalence relative to the
// supplied lattice: at every p-special node, theta0 is distinguished on one
// side iff its image is on the other, and when it is, phi carries the whole
// distinguished set across. Non-p-special nodes are skipped.
MotEquivResult check_motequiv(const TitsTable& t1, const TitsTable& t2, const DiagramIso& phi,
                              const std::set<int>& theta0);

// The isomorphism claims that follow from a positive verdict: all nonempty
// star-invariant types containing theta0, paired with their phi-images.
std::vector<std::pair<std::set<int>, std::set<int>>> motequiv_conclusions(
    const TitsTable& t1, const DiagramIso& phi, const std::set<int>& theta0);

struct CritborelResult {
  bool verdict = false;
  std::string mismatch;  // "poincare" or the failing node id
  std::vector<std::string> hypotheses;  // echoed caller-asserted hypotheses
};

// Generically-split criterion: equal Poincare polynomials and nodewise equal
// "split by a prime-to-p extension" indicator tables. The generic-splitness
// and inner-type hypotheses cannot be checked from this data; they are
// asserted by the caller and echoed into the result.
CritborelResult critborel_check(const LaurentPoly& p1, const LaurentPoly& p2,
                                const std::map<int, bool>& s1, const std::map<int, bool>& s2,
                                const LatticePtr& lattice,
                                std::vector<std::string> asserted_hypotheses = {});

// Named configurations where the split-indicator table is governed by a
// single cohomological invariant of the group; the invariant itself is an
// opaque label here.
struct CohInvPreset {
  std::vector<std::pair<std::string, int>> types;  // (type, p)
  std::string invariant;
  std::string criterion;
};
const std::vector<CohInvPreset>& cohinv_presets();

// All traces attained by a motive over the lattice nodes.
std::set<LaurentPoly> splitting_pattern(const FormalMotive& m);

struct Tower {
  std::vector<int> chain;  // node indices, starting at the base
  std::vector<LaurentPoly> traces;
};

// Greedy splitting tower: repeatedly move to a function-field node (above
// the current node) of the first atom class, in canonical order, that is
// still anisotropic, until the trace has full rank. Errors when a needed
// function-field node is missing, or when every remaining class is isotropic
// but only partially split (the model does not re-decompose atoms).
Tower splitting_tower(const FormalMotive& m);

// Union of the traces along all admissible towers (all pick orders and all
// admissible function-field nodes). Always a subset of splitting_pattern;
// equality holds on lattices where every anisotropic atom keeps a reachable
// function-field node.
std::set<LaurentPoly> pattern_from_towers(const FormalMotive& m);

}  // namespace motkit
