#pragma once

#include <compare>
#include <string>
#include <vector>

#include "klcells/lattice.hpp"
#include "klcells/root_datum.hpp"
#include "klcells/weyl.hpp"

namespace klcells {

/// A point of V'/L', stored as num/den with 0 <= num_i < den and gcd(num, den) = 1
/// (den = 1 for the zero class). Coordinates are in the basis of L'
/// (V-bar' coordinates, then c' in case B).
class Lambda {
 public:
  Lambda() = default;
  Lambda(const RootDatum& d, const Vec& num, std::int64_t den);
  static Lambda zero(const RootDatum& d) { return Lambda(d, Vec{}, 1); }
  /// "p/q" strings, one per V-bar' coordinate (a single "0" means the origin);
  /// tau is the c'-coordinate and must be "0" in case A.
  static Lambda parse(const RootDatum& d, const std::vector<std::string>& coords, const std::string& tau = "0");

  int dim() const { return dim_; }
  int tag() const { return tag_; }
  const Vec& num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return den_ == 1; }

  /// (y, lambda) as a fraction in [0,1): numerator over den().
  std::int64_t pair_num(const Vec& y) const;
  bool pairs_to_zero(const Vec& y) const { return pair_num(y) == 0; }
  bool pairs_to_zero(const RootDatum& d, const AffineRoot& chi) const { return pair_num(d.vector_of(chi)) == 0; }

  /// tau = <c, x> mod 1 as (numerator, denominator) in lowest terms; (0,1) in case A.
  std::pair<std::int64_t, std::int64_t> tau(const RootDatum& d) const;

  /// Coordinates as reduced "p/q" strings.
  std::vector<std::string> coordinate_strings() const;
  std::string to_string() const;

  friend bool operator==(const Lambda&, const Lambda&) = default;
  friend std::strong_ordering operator<=>(const Lambda& a, const Lambda& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

 private:
  friend Lambda act(const WeylElement& w, const Lambda& lambda);

  int dim_ = 0;
  int tag_ = -1;
  Vec num_{};
  std::int64_t den_ = 1;
};

/// w(lambda) on V'/L'.
Lambda act(const WeylElement& w, const Lambda& lambda);

std::string fraction_string(std::int64_t p, std::int64_t q);
/// Parses "p/q" or "p"; throws std::invalid_argument on anything else.
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s);

}  // namespace klcells
