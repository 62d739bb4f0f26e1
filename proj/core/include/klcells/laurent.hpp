#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace klcells {

/// Laurent polynomial in v with integer coefficients, stored densely from the
/// lowest nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  /// v + v^{-1}
  static LaurentPoly quantum_two();

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;
  Coeff coeff(int exponent) const;

  /// Nonzero (exponent, coefficient) pairs, exponents ascending.
  std::vector<std::pair<int, Coeff>> terms() const;

  /// v -> v^{-1}
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return *this == bar(); }
  /// True if every exponent is < 0 (the zero polynomial qualifies).
  bool in_negative_part() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& o, Coeff sign);
  void normalize();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

}  // namespace klcells
