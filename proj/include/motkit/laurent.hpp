#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace motkit {

// Laurent polynomial in one variable t with integer coefficients and
// integer (possibly negative) exponents. Zero coefficients are never stored,
// so equality of the term maps is equality of polynomials.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly t(int exp = 1) { return monomial(exp, 1); }
  static LaurentPoly monomial(int exp, std::int64_t coeff);

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exp) const;
  // Sum of all coefficients, i.e. the value at t = 1.
  std::int64_t coeff_sum() const;
  int min_exp() const;  // throws on the zero polynomial
  int max_exp() const;  // throws on the zero polynomial
  bool nonnegative() const;
  // coeff(i) == coeff(min_exp + max_exp - i) for all i; true for zero.
  bool palindromic() const;

  LaurentPoly shifted(int k) const;  // multiply by t^k

  void add_term(int exp, std::int64_t coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  // Arbitrary total order so polynomials can live in std::set / std::map.
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // Coefficient-wise comparison: every coefficient of *this is <= the
  // matching coefficient of o.
  bool dominated_by(const LaurentPoly& o) const;

  // "1 + 2t + t^2", "t^-1 + t", "0"
  std::string str() const;

  const std::map<int, std::int64_t>& terms() const { return terms_; }

private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace motkit
