#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace klcells {

/// Coordinates are at most three-dimensional: rank <= 2 plus the c / c' axis.
inline constexpr int kMaxDim = 3;

/// Integer coordinate vector; entries past the active dimension stay zero.
using Vec = std::array<std::int64_t, kMaxDim>;

/// Row-major integer matrix of size kMaxDim x kMaxDim; unused entries zero.
using Mat = std::array<std::int64_t, kMaxDim * kMaxDim>;

inline std::int64_t& at(Mat& m, int i, int j) { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }
inline std::int64_t at(const Mat& m, int i, int j) { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }

Mat identity_matrix(int dim);
Mat multiply(const Mat& a, const Mat& b, int dim);
Vec apply(const Mat& m, const Vec& x, int dim);
Mat transpose(const Mat& m, int dim);
std::int64_t determinant(const Mat& m, int dim);
/// Inverse of a unimodular integer matrix; throws std::invalid_argument otherwise.
Mat unimodular_inverse(const Mat& m, int dim);

std::int64_t dot(const Vec& a, const Vec& b, int dim);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, std::int64_t k);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

std::vector<std::vector<std::int64_t>> to_rows(const Mat& m, int dim);
std::vector<std::int64_t> to_list(const Vec& v, int dim);
std::string to_string(const Vec& v, int dim);

/// Floor division for a positive divisor.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

inline std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace klcells
