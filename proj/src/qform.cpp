#include "motkit/qform.hpp"

#include <algorithm>
#include <numeric>

#include "motkit/common.hpp"

namespace motkit {

namespace {

long long checked_abs(long long v) {
  if (v == 0) throw error("zero is not allowed here");
  return v < 0 ? -v : v;
}

}  // namespace

Rational Rational::of(long long n, long long d) {
  if (d == 0) throw error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational{n, d};
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw error("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return of(std::stoll(s), 1);
    return of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw error("invalid rational literal: " + text);
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long squarefree_part(long long n) {
  if (n == 0) throw error("square class of zero is undefined");
  const long long sign = n < 0 ? -1 : 1;
  long long v = checked_abs(n);
  long long out = 1;
  for (long long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return sign * out * v;
}

namespace {

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> primes;
  long long v = checked_abs(n);
  for (long long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p == 0) {
      primes.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw error("legendre symbol with p | a");
  long long result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = (__int128)result * base % p;
    base = (__int128)base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

struct ValUnit {
  int val;
  long long unit;
};

ValUnit split_p(long long a, long long p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return {v, a};
}

int eps2(long long u) { return static_cast<int>((((u - 1) / 2) % 2 + 2) % 2); }
int omega2(long long u) { return static_cast<int>(((u * u - 1) / 8) % 2 + 2) % 2; }

}  // namespace

int hilbert_symbol(long long a, long long b, long long p) {
  if (a == 0 || b == 0) throw error("hilbert symbol of zero");
  if (p == 2) {
    const auto [alpha, u] = split_p(a, 2);
    const auto [beta, v] = split_p(b, 2);
    const int e = (eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u)) % 2;
    return e == 0 ? 1 : -1;
  }
  const auto [alpha, u] = split_p(a, p);
  const auto [beta, v] = split_p(b, p);
  int sign = 1;
  if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2) sign = -sign;
  if (beta % 2) sign *= legendre(u, p);
  if (alpha % 2) sign *= legendre(v, p);
  return sign;
}

QuadraticForm::QuadraticForm(std::vector<Rational> diagonal) : diag_(std::move(diagonal)) {
  if (diag_.empty()) throw error("quadratic form must have at least one coefficient");
  for (const auto& r : diag_) {
    if (r.num == 0) throw error("quadratic form with a zero coefficient");
    classes_.push_back(squarefree_part(r.num * r.den));
  }
}

QuadraticForm QuadraticForm::parse(const std::string& literal) {
  std::string s = literal;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() < 3 || s.front() != '<' || s.back() != '>')
    throw error("invalid form literal (expected <a,b,...>): " + literal);
  s = s.substr(1, s.size() - 2);
  std::vector<Rational> diag;
  std::size_t i = 0;
  while (i <= s.size()) {
    const auto j = s.find(',', i);
    diag.push_back(Rational::parse(s.substr(i, j == std::string::npos ? std::string::npos : j - i)));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return QuadraticForm(std::move(diag));
}

long long QuadraticForm::discriminant() const {
  long long d = 1;
  for (long long c : classes_) d = squarefree_part(d * c);
  return d;
}

std::string QuadraticForm::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (i) out += ",";
    out += diag_[i].str();
  }
  return out + ">";
}

namespace {

// Invariant tuple of a form class during Witt decomposition.
struct FormClass {
  int n = 0;
  long long d = 1;                    // square-free discriminant (determinant class)
  std::map<long long, int> hasse;    // prime -> +-1
  int pos = 0, neg = 0;               // real signature
  std::vector<long long> primes;      // relevant primes (2 and divisors of entries)
};

FormClass invariants_of(const QuadraticForm& q) {
  FormClass f;
  f.n = q.dim();
  const auto& cls = q.square_classes();
  std::set<long long> primes{2};
  for (long long c : cls)
    for (long long p : prime_factors(c)) primes.insert(p);
  f.primes.assign(primes.begin(), primes.end());
  f.d = q.discriminant();
  for (long long p : f.primes) {
    int e = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) e *= hilbert_symbol(cls[i], cls[j], p);
    f.hasse[p] = e;
  }
  for (long long c : cls) (c > 0 ? f.pos : f.neg)++;
  return f;
}

// Is d a square in Q_p? (d square-free)
bool square_in_Qp(long long d, long long p) {
  if (d == 1) return true;
  if (p == 2) return d % 2 != 0 && ((d % 8) + 8) % 8 == 1;
  if (d % p == 0) return false;
  return legendre(d, p) == 1;
}

// Does the rational prime p split in Q(sqrt(dd))? (dd square-free, not 0 or 1)
bool splits_in_sqrt(long long p, long long dd) {
  if (p == 2) return ((dd % 8) + 8) % 8 == 1;
  if (dd % p == 0) return false;
  return legendre(dd, p) == 1;
}

// Isotropy over Q (dd = 0) or over Q(sqrt(dd)).
bool isotropic(const FormClass& f, long long dd) {
  if (f.n <= 1) return false;
  const bool has_real = (dd == 0) || dd > 0;
  if (f.n == 2) {
    const long long s = squarefree_part(-f.d);
    return s == 1 || (dd != 0 && s == dd);
  }
  if (f.n >= 5) return !has_real || (f.pos >= 1 && f.neg >= 1);
  if (has_real && (f.pos < 1 || f.neg < 1)) return false;
  for (long long p : f.primes) {
    if (dd != 0 && !splits_in_sqrt(p, dd)) continue;  // local field is a quadratic
                                                      // extension: symbols trivialize
    const int eps = f.hasse.at(p);
    if (f.n == 3) {
      if (hilbert_symbol(-1, squarefree_part(-f.d), p) != eps) return false;
    } else {  // n == 4
      if (square_in_Qp(f.d, p) && eps != hilbert_symbol(-1, -1, p)) return false;
    }
  }
  return true;
}

// Remove one hyperbolic plane from the class invariants.
void peel_hyperbolic(FormClass& f) {
  const long long dnew = squarefree_part(-f.d);
  for (long long p : f.primes) f.hasse[p] *= hilbert_symbol(-1, dnew, p);
  f.d = dnew;
  f.n -= 2;
  f.pos -= 1;
  f.neg -= 1;
}

int witt_walk(const QuadraticForm& q, long long dd) {
  FormClass f = invariants_of(q);
  int i0 = 0;
  while (f.n >= 2 && isotropic(f, dd)) {
    peel_hyperbolic(f);
    ++i0;
  }
  return i0;
}

}  // namespace

int witt_index_Q(const QuadraticForm& q) { return witt_walk(q, 0); }

int witt_index_sqrt(const QuadraticForm& q, const Rational& d) {
  const long long dd = squarefree_part(d.num * d.den);
  if (dd == 1) return witt_index_Q(q);  // adjoining a square changes nothing
  return witt_walk(q, dd);
}

std::optional<std::vector<long long>> isotropy_oracle(const QuadraticForm& q, long long bound) {
  if (bound < 1) throw error("oracle bound must be at least 1");
  const int n = q.dim();
  // Clear denominators once; isotropy is scale-invariant.
  std::vector<long long> a;
  long long lcm = 1;
  for (const auto& r : q.diagonal()) lcm = std::lcm(lcm, r.den);
  for (const auto& r : q.diagonal()) a.push_back(r.num * (lcm / r.den));

  std::vector<long long> v(n, -bound);
  while (true) {
    __int128 sum = 0;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      sum += (__int128)a[i] * v[i] * v[i];
      if (v[i] != 0) nonzero = true;
    }
    if (nonzero && sum == 0) return v;
    int i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) return std::nullopt;
    ++v[i];
  }
}

std::optional<std::vector<std::pair<long long, long long>>> isotropy_oracle_sqrt(
    const QuadraticForm& q, const Rational& d, long long bound) {
  if (bound < 1) throw error("oracle bound must be at least 1");
  const long long dd = squarefree_part(d.num * d.den);
  const int n = q.dim();
  std::vector<long long> a;
  long long lcm = 1;
  for (const auto& r : q.diagonal()) lcm = std::lcm(lcm, r.den);
  for (const auto& r : q.diagonal()) a.push_back(r.num * (lcm / r.den));

  std::vector<long long> v(2 * n, -bound);
  while (true) {
    __int128 rat = 0, irr = 0;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      const long long x = v[2 * i], y = v[2 * i + 1];
      rat += (__int128)a[i] * (x * x + dd * y * y);
      irr += (__int128)a[i] * 2 * x * y;
      if (x != 0 || y != 0) nonzero = true;
    }
    if (nonzero && rat == 0 && irr == 0) {
      std::vector<std::pair<long long, long long>> out;
      for (int i = 0; i < n; ++i) out.emplace_back(v[2 * i], v[2 * i + 1]);
      return out;
    }
    int i = 0;
    while (i < 2 * n && v[i] == bound) v[i++] = -bound;
    if (i == 2 * n) return std::nullopt;
    ++v[i];
  }
}

std::vector<RostEntry> rost_decomposition(int dim, int i0) {
  if (dim < 2) throw error("quadric decomposition requires dimension at least 2");
  const int m = dim / 2;
  if (i0 < 0 || i0 > m)
    throw error("Witt index " + std::to_string(i0) + " out of range for dimension " +
                std::to_string(dim));
  std::vector<RostEntry> out;
  for (int k = 0; k < i0; ++k) out.push_back({RostKind::tate, k});
  if (dim - 2 * i0 >= 2) out.push_back({RostKind::kernel, i0});
  for (int k = dim - 1 - i0; k <= dim - 2; ++k) out.push_back({RostKind::tate, k});
  std::sort(out.begin(), out.end(), [](const RostEntry& a, const RostEntry& b) {
    return std::pair(a.twist, a.kind == RostKind::kernel) <
           std::pair(b.twist, b.kind == RostKind::kernel);
  });
  return out;
}

LaurentPoly quadric_tate_trace(int dim, int i0) {
  if (dim < 2) throw error("quadric trace requires dimension at least 2");
  if (i0 < 0 || i0 > dim / 2)
    throw error("Witt index " + std::to_string(i0) + " out of range for dimension " +
                std::to_string(dim));
  LaurentPoly p;
  for (int k = 0; k < i0; ++k) {
    p.add_term(k, 1);
    p.add_term(dim - 2 - k, 1);
  }
  return p;
}

LaurentPoly involution_trace(bool split, int i_w, int deg2m) {
  if (deg2m < 2 || deg2m % 2 != 0) throw error("involution algebra degree must be even");
  if (i_w < 0 || i_w > deg2m / 2)
    throw error("involution Witt index " + std::to_string(i_w) + " out of range");
  if (!split) return LaurentPoly::zero();
  return quadric_tate_trace(deg2m, i_w);
}

LaurentPoly tate_trace_of_rost(const std::vector<RostEntry>& entries) {
  LaurentPoly p;
  for (const auto& e : entries)
    if (e.kind == RostKind::tate) p.add_term(e.twist, 1);
  return p;
}

WittIndexTable WittIndexTable::create(LatticePtr lattice, int dim, std::map<int, int> by_node) {
  if (!lattice) throw error("witt table without a lattice");
  WittIndexTable t;
  t.lattice = std::move(lattice);
  t.dim = dim;
  t.by_node = std::move(by_node);
  for (int n = 0; n < t.lattice->num_nodes(); ++n)
    if (!t.by_node.count(n))
      throw error("witt table missing node " + t.lattice->node_id(n));
  for (const auto& [n, w] : t.by_node) {
    if (w < 0 || w > dim / 2)
      throw error("witt index " + std::to_string(w) + " at node " + t.lattice->node_id(n) +
                  " out of range for dimension " + std::to_string(dim));
  }
  for (const auto& [lo, hi] : t.lattice->edges()) {
    if (t.by_node.at(lo) > t.by_node.at(hi))
      throw error("witt table not monotone from node " + t.lattice->node_id(lo) + " to " +
                  t.lattice->node_id(hi));
  }
  return t;
}

int WittIndexTable::at(int node) const {
  auto it = by_node.find(node);
  if (it == by_node.end()) throw error("witt table missing node index");
  return it->second;
}

WittIndexTable quadric_witt_table(const QuadraticForm& q, const LatticePtr& lattice,
                                  const std::map<std::string, int>& asserted) {
  if (!lattice) throw error("witt table without a lattice");
  std::map<int, int> by_node;
  for (int n = 0; n < lattice->num_nodes(); ++n) {
    const auto& spec = lattice->node_spec(n);
    auto asserted_it = asserted.find(spec.id);

    // Effective adjoined square classes, squares dropped.
    std::set<long long> adjoined;
    for (const auto& tok : spec.adjoin) {
      const Rational r = Rational::parse(tok);
      if (r.num == 0) throw error("node " + spec.id + ": cannot adjoin sqrt(0)");
      const long long dd = squarefree_part(r.num * r.den);
      if (dd != 1) adjoined.insert(dd);
    }
    if (spec.opaque || adjoined.size() > 1) {
      if (asserted_it == asserted.end())
        throw error("node semantics not computable: " + spec.id +
                    " (supply an asserted Witt index)");
      by_node[n] = asserted_it->second;
    } else if (adjoined.empty()) {
      by_node[n] = witt_index_Q(q);
    } else {
      by_node[n] = witt_index_sqrt(q, Rational::of(*adjoined.begin()));
    }
  }
  return WittIndexTable::create(lattice, q.dim(), std::move(by_node));
}

VishikResult vishik_check(const WittIndexTable& t1, const WittIndexTable& t2) {
  if (t1.lattice != t2.lattice) throw error("lattice mismatch");
  if (t1.dim != t2.dim) return {false, "dimension"};
  for (int n = 0; n < t1.lattice->num_nodes(); ++n)
    if (t1.at(n) != t2.at(n)) return {false, t1.lattice->node_id(n)};
  return {true, ""};
}

std::set<LaurentPoly> motivic_splitting_pattern(int dim, const std::set<int>& pattern) {
  std::set<LaurentPoly> out;
  for (int i : pattern) out.insert(quadric_tate_trace(dim, i));
  return out;
}

}  // namespace motkit
