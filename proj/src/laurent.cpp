#include "motkit/laurent.hpp"

#include "motkit/common.hpp"

namespace motkit {

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::coeff_sum() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw error("min_exp undefined for the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw error("max_exp undefined for the zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool LaurentPoly::palindromic() const {
  if (terms_.empty()) return true;
  const int lo = min_exp(), hi = max_exp();
  for (const auto& [e, c] : terms_)
    if (c != coeff(lo + hi - e)) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

void LaurentPoly::add_term(int exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::dominated_by(const LaurentPoly& o) const {
  for (const auto& [e, c] : terms_)
    if (c > o.coeff(e)) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace motkit
