#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace braid {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable t with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so representations are
/// canonical and operator== decides ring equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_int(long long c) { return monomial(BigInt(c), 0); }

  static LaurentPoly monomial(BigInt coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
  }

  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, BigInt>& terms() const { return terms_; }

  BigInt coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly out = from_int(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical text form: terms in ascending exponent order, "+"/"-" joined,
  /// unit coefficients implicit except at exponent 0, exponent written as
  /// t, t^-1, t^2, ... The zero polynomial prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt a = c;
      if (first) {
        if (a < 0) {
          out += '-';
          a = -a;
        }
      } else {
        out += a < 0 ? '-' : '+';
        if (a < 0) a = -a;
      }
      if (a != 1 || e == 0) out += a.str();
      if (e != 0) {
        out += 't';
        if (e != 1) out += '^' + std::to_string(e);
      }
      first = false;
    }
    return out;
  }

 private:
  void add_term(int exp, BigInt delta) {
    if (delta == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, std::move(delta));
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, BigInt> terms_;
};

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Exact division in the Laurent ring. Throws std::domain_error when b is
/// zero or does not divide a.
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return {};
  // For an exact quotient q, every exponent of q lies in
  // [min_exp(a) - min_exp(b), max_exp(a) - max_exp(b)]; walking the leading
  // terms downward must land in that window or the division is inexact.
  const int low = a.min_exp() - b.min_exp();
  LaurentPoly q;
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    int qe = rem.max_exp() - b.max_exp();
    if (qe < low) throw std::domain_error("divide_exact: inexact division");
    BigInt rc = rem.coeff(rem.max_exp());
    BigInt bc = b.coeff(b.max_exp());
    BigInt qc = rc / bc;
    if (qc * bc != rc) throw std::domain_error("divide_exact: inexact division");
    LaurentPoly m = LaurentPoly::monomial(qc, qe);
    q += m;
    rem -= m * b;
  }
  return q;
}

}  // namespace braid
