#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motkit/laurent.hpp"
#include "motkit/motive.hpp"

namespace motkit {

// Exact rational number with normalized sign and gcd.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational parse(const std::string& text);  // "p", "p/q"
  static Rational of(long long n, long long d = 1);
  bool operator==(const Rational&) const = default;
  std::string str() const;
};

// Square-free integer representing the square class of n (sign preserved).
long long squarefree_part(long long n);

// Hilbert symbol (a,b)_p for a prime p (p = 2 allowed), a, b nonzero
// square-free integers. Returns +1 or -1.
int hilbert_symbol(long long a, long long b, long long p);

// Diagonal quadratic form over the rationals.
class QuadraticForm {
public:
  explicit QuadraticForm(std::vector<Rational> diagonal);
  static QuadraticForm parse(const std::string& literal);  // "<1,1,-1,-7>"

  int dim() const { return static_cast<int>(diag_.size()); }
  const std::vector<Rational>& diagonal() const { return diag_; }
  // Square classes of the entries as square-free integers.
  const std::vector<long long>& square_classes() const { return classes_; }
  long long discriminant() const;  // square-free product of the entries
  std::string str() const;

private:
  std::vector<Rational> diag_;
  std::vector<long long> classes_;
};

// Witt index over the rationals, by local invariants (real signature and
// Hilbert symbols at the relevant primes) and peeling hyperbolic planes.
int witt_index_Q(const QuadraticForm& q);

// Witt index over Q(sqrt(d)); d is any nonzero rational that is not a
// square. The coefficients stay rational, so the local conditions reduce to
// conditions at the primes that split in the extension plus the real places.
int witt_index_sqrt(const QuadraticForm& q, const Rational& d);

// Brute-force isotropy search over the rationals: a nonzero integer vector v
// with q(v) = 0 and |v_i| <= bound, if one exists in that box. One-sided:
// used to confirm isotropy, never to conclude anisotropy.
std::optional<std::vector<long long>> isotropy_oracle(const QuadraticForm& q, long long bound);

// Same over Q(sqrt(d)): entries are (x, y) meaning x + y*sqrt(d).
std::optional<std::vector<std::pair<long long, long long>>> isotropy_oracle_sqrt(
    const QuadraticForm& q, const Rational& d, long long bound);

enum class RostKind { tate, kernel };
struct RostEntry {
  RostKind kind = RostKind::tate;
  int twist = 0;
  bool operator==(const RostEntry&) const = default;
};

// Decomposition of the quadric of a dim-dimensional form with Witt index i0
// into Tate classes at twists 0..i0-1 and dim-1-i0..dim-2 around the shifted
// anisotropic-kernel quadric. The kernel entry is omitted when the kernel
// quadric is empty (i0 maximal). Even dim is the textbook case; odd dim uses
// the analogous shape with a single middle class.
std::vector<RostEntry> rost_decomposition(int dim, int i0);

// Trace of the quadric motive mod 2: sum over k < i0 of t^k + t^(dim-2-k).
LaurentPoly quadric_tate_trace(int dim, int i0);

// Trace of an involution variety of a degree-2m algebra: zero unless the
// algebra is split, in which case it is the quadric trace at the Witt index
// of the involution.
LaurentPoly involution_trace(bool split, int i_w, int deg2m);

LaurentPoly tate_trace_of_rost(const std::vector<RostEntry>& entries);

// Witt-index table of a form over the nodes of an extension lattice.
struct WittIndexTable {
  LatticePtr lattice;
  int dim = 0;
  std::map<int, int> by_node;

  static WittIndexTable create(LatticePtr lattice, int dim, std::map<int, int> by_node);
  int at(int node) const;
};

// Populates a table from the lattice node recipes: the base field, or
// "adjoin sqrt(d)" nodes. Nodes with no computable recipe must appear in
// `asserted` (validated for monotonicity and the dim/2 bound only).
WittIndexTable quadric_witt_table(const QuadraticForm& q, const LatticePtr& lattice,
                                  const std::map<std::string, int>& asserted = {});

struct VishikResult {
  bool verdict = false;
  std::string mismatch;  // node id or "dimension" when false
};

// The decision: equal dimensions and nodewise equal Witt tables. Under the
// intended semantics this is motivic isomorphism of the two quadrics mod 2.
VishikResult vishik_check(const WittIndexTable& t1, const WittIndexTable& t2);

// Traces attained by a 2m-dimensional quadric along a splitting pattern
// (a set of Witt indices).
std::set<LaurentPoly> motivic_splitting_pattern(int dim, const std::set<int>& pattern);

}  // namespace motkit
