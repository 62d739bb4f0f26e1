#include "klcells/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace klcells {

Mat identity_matrix(int dim) {
  Mat m{};
  for (int i = 0; i < dim; ++i) at(m, i, i) = 1;
  return m;
}

Mat multiply(const Mat& a, const Mat& b, int dim) {
  Mat m{};
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      std::int64_t aik = at(a, i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim; ++j) at(m, i, j) += aik * at(b, k, j);
    }
  return m;
}

Vec apply(const Mat& m, const Vec& x, int dim) {
  Vec y{};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) y[static_cast<std::size_t>(i)] += at(m, i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

Mat transpose(const Mat& m, int dim) {
  Mat t{};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) at(t, j, i) = at(m, i, j);
  return t;
}

namespace {

std::int64_t minor2(const Mat& m, int r0, int r1, int c0, int c1) {
  return at(m, r0, c0) * at(m, r1, c1) - at(m, r0, c1) * at(m, r1, c0);
}

}  // namespace

std::int64_t determinant(const Mat& m, int dim) {
  switch (dim) {
    case 1: return at(m, 0, 0);
    case 2: return minor2(m, 0, 1, 0, 1);
    case 3:
      return at(m, 0, 0) * minor2(m, 1, 2, 1, 2) - at(m, 0, 1) * minor2(m, 1, 2, 0, 2) +
             at(m, 0, 2) * minor2(m, 1, 2, 0, 1);
    default: throw std::invalid_argument("determinant: unsupported dimension");
  }
}

Mat unimodular_inverse(const Mat& m, int dim) {
  std::int64_t det = determinant(m, dim);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  Mat adj{};
  if (dim == 1) {
    at(adj, 0, 0) = 1;
  } else if (dim == 2) {
    at(adj, 0, 0) = at(m, 1, 1);
    at(adj, 0, 1) = -at(m, 0, 1);
    at(adj, 1, 0) = -at(m, 1, 0);
    at(adj, 1, 1) = at(m, 0, 0);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        at(adj, i, j) = minor2(m, r0, r1, c0, c1);
      }
  }
  for (auto& x : adj) x *= det;
  return adj;
}

std::int64_t dot(const Vec& a, const Vec& b, int dim) {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i) s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec scale(const Vec& a, std::int64_t k) {
  Vec c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] * k;
  return c;
}

Vec negate(const Vec& a) { return scale(a, -1); }

bool is_zero(const Vec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> to_rows(const Mat& m, int dim) {
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rows[static_cast<std::size_t>(i)].push_back(at(m, i, j));
  return rows;
}

std::vector<std::int64_t> to_list(const Vec& v, int dim) {
  return {v.begin(), v.begin() + dim};
}

std::string to_string(const Vec& v, int dim) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < dim; ++i) out << (i ? "," : "") << v[static_cast<std::size_t>(i)];
  out << ")";
  return out.str();
}

}  // namespace klcells
