#pragma once

#include <compare>
#include <vector>

#include "klcells/lattice.hpp"
#include "klcells/root_datum.hpp"

namespace klcells {

/// Element of W, stored by its matrix on V' and the contragredient matrix on
/// V. In case B the V' matrix has the shape [[w-bar, z], [0, 1]], i.e.
/// x -> w-bar(x) + <c,x> z, so the linear part and translation are read off
/// directly.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const RootDatum& d);
  static WeylElement simple(const RootDatum& d, int i);
  static WeylElement reflection(const RootDatum& d, const AffineRoot& chi);
  /// theta_z for z in V-bar' coordinates; z must lie in the lattice Q.
  static WeylElement translation(const RootDatum& d, const Vec& z);
  /// Validates that m preserves the block shape and is unimodular.
  static WeylElement from_vprime_matrix(const RootDatum& d, const Mat& m);

  int dim() const { return dim_; }
  int tag() const { return tag_; }
  const Mat& on_vprime() const { return m_; }
  const Mat& on_v() const { return n_; }
  bool is_identity() const;

  Vec act_v(const Vec& y) const { return apply(n_, y, dim_); }
  Vec act_vprime(const Vec& x) const { return apply(m_, x, dim_); }

  /// w-bar (translation dropped).
  WeylElement linear_part() const;
  /// z in V-bar' coordinates; zero in case A.
  Vec translation_part() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.tag_ == b.tag_ && a.m_ == b.m_; }
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  friend WeylElement compose(const WeylElement&, const WeylElement&);
  friend WeylElement inverse(const WeylElement&);

  int dim_ = 0;
  int tag_ = -1;
  Mat m_{};
  Mat n_{};
};

/// a after b. Throws std::invalid_argument on datum mismatch.
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

/// Translation part in the basis {delta_{h_i} h'_i} of Q.
std::vector<std::int64_t> translation_in_q_basis(const RootDatum& d, const WeylElement& w);
WeylElement translation_from_q_basis(const RootDatum& d, const std::vector<std::int64_t>& coeffs);

AffineRoot act(const RootDatum& d, const WeylElement& w, const AffineRoot& chi);

/// w(chi) negative.
bool sends_negative(const RootDatum& d, const WeylElement& w, const AffineRoot& chi);

/// Visits every positive chi with w(chi) negative; the visitor returns nothing.
template <class F>
void for_each_inversion(const RootDatum& d, const WeylElement& w, F&& visit) {
  for (int k = 0; k < d.num_roots(); ++k) {
    Vec img = w.act_v(d.vector_of({k, 0}));
    std::int64_t t = d.case_flag() == CaseFlag::B ? -img[static_cast<std::size_t>(d.rank())] : 0;
    if (d.rank() < kMaxDim) img[static_cast<std::size_t>(d.rank())] = 0;
    bool image_negative = !d.is_positive_root(d.root_index(img));
    std::int64_t delta = d.delta(k);
    std::int64_t n = d.is_positive_root(k) ? 0 : delta;
    for (; n <= t; n += delta) {
      if (n == t && !image_negative) break;
      visit(AffineRoot{k, n});
    }
  }
}

/// Number of positive roots sent to negative roots.
int length(const RootDatum& d, const WeylElement& w);
std::vector<AffineRoot> inversion_set(const RootDatum& d, const WeylElement& w);

/// Lexicographically smallest reduced word (indices into d.simple()).
std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w);
WeylElement from_word(const RootDatum& d, const std::vector<int>& word);

/// Smallest i with |s_i w| < |w|, or -1.
int first_left_descent(const RootDatum& d, const WeylElement& w);

}  // namespace klcells
