#include "klcells/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace klcells {

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::quantum_two() { return monomial(1) + monomial(-1); }

int LaurentPoly::min_degree() const { return low_; }

int LaurentPoly::max_degree() const {
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -max_degree();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

bool LaurentPoly::in_negative_part() const { return is_zero() || max_degree() < 0; }

void LaurentPoly::add_scaled(const LaurentPoly& o, Coeff sign) {
  if (o.is_zero()) return;
  if (is_zero()) {
    low_ = o.low_;
    coeffs_.assign(o.coeffs_.size(), 0);
  }
  int lo = std::min(low_, o.low_);
  int hi = std::max(max_degree(), o.max_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += sign * o.coeffs_[k];
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, c] : terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Coeff m = c < 0 ? -c : c;
    if (e == 0) {
      out << m;
      continue;
    }
    if (m != 1) out << m << "*";
    out << "v";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace klcells
