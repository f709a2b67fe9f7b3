#pragma once

#include <set>
#include <string>
#include <vector>

#include "motkit/diagram.hpp"
#include "motkit/laurent.hpp"
#include "motkit/qform.hpp"
#include "motkit/weyl.hpp"

namespace motkit {

// A semisimple group presented combinatorially: Dynkin diagram, star action,
// and Tits index (the distinguished vertices, a union of star orbits).
struct GroupDatum {
  DynkinDiagram diagram;
  StarAction star;
  std::set<int> distinguished;

  static GroupDatum create(DynkinDiagram diagram, StarAction star,
                           std::set<int> distinguished);
  static GroupDatum split(const DynkinDiagram& diagram);

  bool is_quasi_split() const;
  bool is_anisotropic() const { return distinguished.empty(); }
  bool theta_distinguished(const std::set<int>& theta) const;
};

// One summand of the decomposition of an isotropic projective homogeneous
// variety of type theta: a flag variety of the Levi (vertex set
// levi = all \ theta) of parabolic type piece_type, shifted by the length of
// the indexing double-coset representative. Star orbits of representatives
// are merged into one piece with a multiplicity.
struct CgmPiece {
  std::set<int> levi;        // vertex labels of the Levi diagram
  std::set<int> piece_type;  // parabolic type of the piece inside the Levi
  int shift = 0;
  int multiplicity = 1;
  int rep = 0;  // representative element index in the ambient Weyl group
};

// Decomposition of the type-theta variety. Requires theta star-invariant and
// distinguished (the variety must have a rational point).
std::vector<CgmPiece> cgm_decompose(const GroupDatum& datum, const std::set<int>& theta,
                                    WeylOptions options = {});

struct PoincareIdentity {
  bool holds = false;
  LaurentPoly residual;  // poincare(theta) - sum over pieces
  LaurentPoly lhs;
  LaurentPoly rhs;
};

// Self-check for the split case: the piece-by-piece Poincare polynomial must
// reproduce the Poincare polynomial of the flag variety. A nonzero residual
// means the piece-type formula is wrong for that input; the test suite treats
// any failure as fatal.
PoincareIdentity cgm_poincare_identity(const GroupDatum& datum, const std::set<int>& theta,
                                       WeylOptions options = {});

// Shape of the decomposition of a 2m-dimensional quadric with Witt index i0,
// derived by peeling one isotropy step at a time: a Tate class at each end
// plus the anisotropic-kernel quadric in the middle. Must agree with
// rost_decomposition from the quadratic-form side.
std::vector<RostEntry> rost_from_cgm(int m, int i0);

}  // namespace motkit
