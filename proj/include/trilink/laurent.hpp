#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace trilink {

/// Integer Laurent polynomial in one variable A. Zero coefficients are never
/// stored, so equality is plain map equality.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT: implicit integer promotion is handy

  static LaurentPoly monomial(Coeff coeff, int exponent);
  /// delta = -A^2 - A^-2, the value of one extra disjoint loop.
  static LaurentPoly loop_value();

  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative integer power.
  LaurentPoly pow(unsigned n) const;
  /// Substitutes A -> A^-1.
  LaurentPoly reflected() const;

  /// Terms in increasing exponent order, e.g. "-A^-4 - A^4", "A^-4 + 2 + A^4",
  /// "3A^2". The zero polynomial renders as "0".
  std::string to_string() const;
  /// Inverse of to_string; throws InputError on malformed text.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, Coeff coeff);
  std::map<int, Coeff> terms_;
};

/// p == q or p(A) == q(A^-1).
bool equal_up_to_mirror(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace trilink
