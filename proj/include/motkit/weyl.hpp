#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "motkit/diagram.hpp"
#include "motkit/laurent.hpp"

namespace motkit {

struct WeylOptions {
  std::uint64_t max_elements = 1000000;
};

// A Weyl group element acts on the set of positive roots with signs:
// perm[r] = +-(s+1) when the element maps the r-th positive root to
// plus/minus the s-th one. The length of an element is the number of
// positive roots it sends to negative ones.
using RootPerm = std::vector<std::int32_t>;

RootPerm compose_root_perms(const RootPerm& f, const RootPerm& g);  // f after g
RootPerm inverse_root_perm(const RootPerm& f);

// Finite Weyl group, fully enumerated. Elements are addressed by dense
// indices; index 0 is the identity. Vertex subsets in the public API use
// diagram labels.
class WeylGroup {
public:
  static WeylGroup generate(RootSystem roots, WeylOptions options = {});

  const RootSystem& roots() const { return roots_; }
  const DynkinDiagram& diagram() const { return roots_.diagram(); }
  std::size_t size() const { return perms_.size(); }
  int rank() const { return roots_.rank(); }

  int identity() const { return 0; }
  int generator(int vertex_label) const;
  int multiply(int a, int b) const;  // index of a*b
  int inverse(int a) const;
  int length(int e) const { return lengths_[e]; }
  const RootPerm& perm(int e) const { return perms_[e]; }
  int index_of(const RootPerm& p) const;  // throws if absent

  // w(alpha_j) > 0 for the simple root at the given vertex label.
  bool sends_simple_positive(int e, int vertex_label) const;

  // Elements of the standard parabolic subgroup W_J, J a set of labels.
  std::vector<int> parabolic_elements(const std::set<int>& J) const;

  // Minimal-length representatives of the cosets w W_J, characterized by
  // w(alpha_j) > 0 for all j in J. Sorted by (length, index).
  std::vector<int> min_coset_reps(const std::set<int>& J) const;

  struct DoubleCoset {
    int rep = 0;            // minimal-length representative
    std::uint64_t size = 0; // number of elements in W_J rep W_K
  };
  // One minimal representative per double coset W_J \ W / W_K; the
  // representative d satisfies d(alpha_k) > 0 for k in K and
  // d^{-1}(alpha_j) > 0 for j in J. Sorted by (length, index).
  std::vector<DoubleCoset> min_double_coset_reps(const std::set<int>& J,
                                                 const std::set<int>& K) const;

  // Poincare polynomial of the flag variety of parabolic type theta
  // (a Borel has type = all vertices): sum of t^{l(w)} over the minimal
  // representatives for the Levi subset J = vertices \ theta.
  LaurentPoly poincare(const std::set<int>& theta) const;

  // Same, computed inside the parabolic W_J: theta_in_J must be a subset of
  // J and the Levi of the piece is J \ theta_in_J.
  LaurentPoly parabolic_poincare(const std::set<int>& J, const std::set<int>& theta_in_J) const;

  LaurentPoly length_generating_function() const;

  // Order of the Weyl group from the classical tables (product of the
  // fundamental degrees), without enumerating.
  static std::uint64_t classical_order(const DynkinDiagram& diagram);
  static std::vector<int> fundamental_degrees(const DynkinDiagram& diagram);
  // Product over the degrees d of (1 + t + ... + t^{d-1}).
  static LaurentPoly degree_product_poincare(const DynkinDiagram& diagram);

private:
  RootSystem roots_;
  std::vector<RootPerm> perms_;
  std::vector<int> lengths_;
  std::vector<int> gen_elem_;  // element index of each simple reflection, by position

  struct PermHash {
    std::size_t operator()(const RootPerm& p) const;
  };
  std::unordered_map<RootPerm, int, PermHash> index_;

  std::set<int> complement(const std::set<int>& theta) const;
  void check_subset(const std::set<int>& J) const;
};

}  // namespace motkit
