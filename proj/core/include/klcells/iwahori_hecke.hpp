#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klcells/coxeter_table.hpp"
#include "klcells/laurent.hpp"

namespace klcells {

/// Sparse element of the Hecke algebra of a truncated Coxeter group, keyed by
/// table ids. Depending on context the keys index the T-basis or the c-basis.
using HeckeVector = std::map<int, LaurentPoly>;

void add_term(HeckeVector& a, int id, const LaurentPoly& coeff);
HeckeVector scaled(const HeckeVector& a, const LaurentPoly& coeff);
void add_into(HeckeVector& a, const HeckeVector& b, const LaurentPoly& coeff = LaurentPoly(1));

/// Hecke algebra with T_s^2 = 1 + (v - v^-1) T_s and KL basis
/// c_w = sum_y p_{y,w} T_y, p_{w,w} = 1, p_{y,w} in v^-1 Z[v^-1].
class IwahoriHecke {
 public:
  explicit IwahoriHecke(const CoxeterTable& table);

  const CoxeterTable& table() const { return *table_; }

  /// T_s * a, T-basis. Throws TruncationError if a term leaves the table.
  HeckeVector left_mul_generator(int s, const HeckeVector& a) const;
  HeckeVector multiply_T(const HeckeVector& a, const HeckeVector& b) const;
  /// Bar involution in the T-basis: v -> v^-1, T_w -> T_{w^-1}^-1.
  HeckeVector bar_T(const HeckeVector& a) const;

  /// p_{y,w} for all y with p_{y,w} != 0 (including y = w).
  const std::map<int, LaurentPoly>& kl_column(int w) const { return kl_[w]; }
  LaurentPoly p(int y, int w) const;
  /// Coefficient of v^-1 in p_{y,w}, y != w.
  std::int64_t mu(int y, int w) const;
  /// Pairs (y, mu(y,w)) with mu != 0, y < w.
  const std::vector<std::pair<int, std::int64_t>>& mu_column(int w) const { return mu_[w]; }

  HeckeVector c_in_T(int w) const;
  /// c_s * c_x in the c-basis.
  HeckeVector c_generator_times(int s, int x) const;
  /// c_u * c_w in the c-basis. Requires |u| + |w| <= bound.
  const HeckeVector& c_product(int u, int w) const;
  /// Re-expands a T-basis vector in the c-basis by peeling the longest term.
  HeckeVector T_to_c(const HeckeVector& a) const;

 private:
  const CoxeterTable* table_;
  std::vector<std::map<int, LaurentPoly>> kl_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu_;
  mutable std::map<std::pair<int, int>, HeckeVector> product_memo_;
};

}  // namespace klcells
