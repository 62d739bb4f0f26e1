#include "klcells/weyl.hpp"

#include <stdexcept>

namespace klcells {

WeylElement WeylElement::identity(const RootDatum& d) {
  WeylElement w;
  w.dim_ = d.dim();
  w.tag_ = d.tag();
  w.m_ = identity_matrix(d.dim());
  w.n_ = w.m_;
  return w;
}

WeylElement WeylElement::reflection(const RootDatum& d, const AffineRoot& chi) {
  WeylElement w;
  w.dim_ = d.dim();
  w.tag_ = d.tag();
  w.m_ = reflection_matrix(d, chi, Side::OnVprime);
  w.n_ = reflection_matrix(d, chi, Side::OnV);
  return w;
}

WeylElement WeylElement::simple(const RootDatum& d, int i) {
  if (i < 0 || i >= d.num_simple()) throw std::invalid_argument("simple reflection index out of range");
  return reflection(d, d.simple()[i]);
}

WeylElement WeylElement::from_vprime_matrix(const RootDatum& d, const Mat& m) {
  const int dim = d.dim();
  for (int i = 0; i < kMaxDim; ++i)
    for (int j = 0; j < kMaxDim; ++j)
      if ((i >= dim || j >= dim) && at(m, i, j) != 0) throw std::invalid_argument("matrix exceeds the datum dimension");
  if (d.case_flag() == CaseFlag::B) {
    const int r = d.rank();
    for (int j = 0; j < r; ++j)
      if (at(m, r, j) != 0) throw std::invalid_argument("matrix does not preserve the c'-level");
    if (at(m, r, r) != 1) throw std::invalid_argument("matrix does not fix <c, .>");
  }
  WeylElement w;
  w.dim_ = dim;
  w.tag_ = d.tag();
  w.m_ = m;
  w.n_ = transpose(unimodular_inverse(m, dim), dim);
  return w;
}

WeylElement WeylElement::translation(const RootDatum& d, const Vec& z) {
  if (d.case_flag() != CaseFlag::B) throw std::invalid_argument("translations exist only in case B");
  Mat m = identity_matrix(d.dim());
  for (int i = 0; i < d.rank(); ++i) at(m, i, d.rank()) = z[i];
  WeylElement w = from_vprime_matrix(d, m);
  translation_in_q_basis(d, w);  // validates membership in Q
  return w;
}

bool WeylElement::is_identity() const { return m_ == identity_matrix(dim_); }

WeylElement WeylElement::linear_part() const {
  WeylElement w = *this;
  if (dim_ == 0) return w;
  // In case B the last column carries the translation; detect case B by the
  // datum tag parity (odd tags are case B).
  if (tag_ % 2 == 1) {
    const int r = dim_ - 1;
    for (int i = 0; i < r; ++i) at(w.m_, i, r) = 0;
    for (int j = 0; j < r; ++j) at(w.n_, r, j) = 0;
  }
  return w;
}

Vec WeylElement::translation_part() const {
  Vec z{};
  if (tag_ % 2 == 1) {
    const int r = dim_ - 1;
    for (int i = 0; i < r; ++i) z[i] = at(m_, i, r);
  }
  return z;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.tag_ != b.tag_) throw std::invalid_argument("compose: elements belong to different root data");
  WeylElement w;
  w.dim_ = a.dim_;
  w.tag_ = a.tag_;
  w.m_ = multiply(a.m_, b.m_, a.dim_);
  w.n_ = multiply(a.n_, b.n_, a.dim_);
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement u;
  u.dim_ = w.dim_;
  u.tag_ = w.tag_;
  u.m_ = transpose(w.n_, w.dim_);
  u.n_ = transpose(w.m_, w.dim_);
  return u;
}

std::vector<std::int64_t> translation_in_q_basis(const RootDatum& d, const WeylElement& w) {
  const int r = d.rank();
  std::vector<std::int64_t> out(r, 0);
  if (d.case_flag() == CaseFlag::A) return out;
  Vec z = w.translation_part();
  // Columns of the basis matrix are delta_i h'_i = delta_i * (column i of A).
  Mat b{};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) at(b, i, j) = d.cartan(i, j) * d.delta(j);
  std::int64_t det = determinant(b, r);
  // Cramer's rule.
  for (int j = 0; j < r; ++j) {
    Mat bj = b;
    for (int i = 0; i < r; ++i) at(bj, i, j) = z[i];
    std::int64_t num = determinant(bj, r);
    if (num % det != 0) throw std::invalid_argument("translation vector is not in the lattice Q");
    out[j] = num / det;
  }
  return out;
}

WeylElement translation_from_q_basis(const RootDatum& d, const std::vector<std::int64_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) != d.rank()) throw std::invalid_argument("wrong number of Q coordinates");
  Vec z{};
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) z[i] += d.cartan(i, j) * d.delta(j) * coeffs[j];
  return WeylElement::translation(d, z);
}

AffineRoot act(const RootDatum& d, const WeylElement& w, const AffineRoot& chi) {
  auto r = d.classify(w.act_v(d.vector_of(chi)));
  if (!r) throw std::logic_error("Weyl group element does not preserve the root system");
  return *r;
}

bool sends_negative(const RootDatum& d, const WeylElement& w, const AffineRoot& chi) {
  return !d.is_positive(act(d, w, chi));
}

int length(const RootDatum& d, const WeylElement& w) {
  int count = 0;
  for (int k = 0; k < d.num_roots(); ++k) {
    Vec img = w.act_v(d.vector_of({k, 0}));
    if (d.case_flag() == CaseFlag::A) {
      if (d.is_positive_root(k) && !d.is_positive_root(d.root_index(img))) ++count;
      continue;
    }
    std::int64_t t = -img[d.rank()];
    img[d.rank()] = 0;
    bool image_negative = !d.is_positive_root(d.root_index(img));
    std::int64_t delta = d.delta(k);
    std::int64_t m0 = d.is_positive_root(k) ? 0 : 1;
    // m >= m0 with m*delta < t, plus m*delta == t when the image is negative.
    std::int64_t ceil_t = -floor_div(-t, delta);
    if (ceil_t > m0) count += static_cast<int>(ceil_t - m0);
    if (image_negative && t % delta == 0 && t / delta >= m0) ++count;
  }
  return count;
}

std::vector<AffineRoot> inversion_set(const RootDatum& d, const WeylElement& w) {
  std::vector<AffineRoot> out;
  for_each_inversion(d, w, [&](const AffineRoot& chi) { out.push_back(chi); });
  return out;
}

int first_left_descent(const RootDatum& d, const WeylElement& w) {
  WeylElement inv = inverse(w);
  for (int i = 0; i < d.num_simple(); ++i)
    if (sends_negative(d, inv, d.simple()[i])) return i;
  return -1;
}

std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  for (int i = first_left_descent(d, cur); i >= 0; i = first_left_descent(d, cur)) {
    word.push_back(i);
    cur = compose(WeylElement::simple(d, i), cur);
  }
  return word;
}

WeylElement from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(d);
  for (int i : word) w = compose(w, WeylElement::simple(d, i));
  return w;
}

}  // namespace klcells
