#include "klcells/iwahori_hecke.hpp"

#include "klcells/errors.hpp"

namespace klcells {

namespace {

const LaurentPoly kV = LaurentPoly::monomial(1);
const LaurentPoly kVinv = LaurentPoly::monomial(-1);
const LaurentPoly kVminusVinv = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);

}  // namespace

void add_term(HeckeVector& a, int id, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = a.find(id);
  if (it == a.end()) {
    a.emplace(id, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) a.erase(it);
}

HeckeVector scaled(const HeckeVector& a, const LaurentPoly& coeff) {
  HeckeVector out;
  if (coeff.is_zero()) return out;
  for (const auto& [id, c] : a) add_term(out, id, c * coeff);
  return out;
}

void add_into(HeckeVector& a, const HeckeVector& b, const LaurentPoly& coeff) {
  for (const auto& [id, c] : b) add_term(a, id, c * coeff);
}

IwahoriHecke::IwahoriHecke(const CoxeterTable& table) : table_(&table) {
  const int n = table.size();
  kl_.resize(n);
  mu_.resize(n);
  kl_[0][0] = LaurentPoly(1);
  for (int w = 1; w < n; ++w) {
    int s = table.first_left_descent(w);
    int w1 = table.left(s, w);
    std::map<int, LaurentPoly> col;
    auto add = [&](int x, const LaurentPoly& c) {
      if (c.is_zero()) return;
      auto& slot = col[x];
      slot += c;
      if (slot.is_zero()) col.erase(x);
    };
    for (const auto& [y, py] : kl_[w1]) {
      add(table.left(s, y), py);
      add(y, (table.is_left_descent(s, y) ? kV : kVinv) * py);
    }
    for (const auto& [z, m] : mu_[w1]) {
      if (!table.is_left_descent(s, z)) continue;
      for (const auto& [x, pz] : kl_[z]) add(x, pz * LaurentPoly(-m));
    }
    for (const auto& [y, py] : col) {
      if (y == w) {
        if (!(py == LaurentPoly(1))) throw InvariantViolation("KL recursion: p_{w,w} != 1");
        continue;
      }
      if (!py.in_negative_part()) throw InvariantViolation("KL recursion: p_{y,w} not in v^-1 Z[v^-1]");
      if (std::int64_t m = py.coeff(-1); m != 0) mu_[w].emplace_back(y, m);
    }
    kl_[w] = std::move(col);
  }
}

LaurentPoly IwahoriHecke::p(int y, int w) const {
  auto it = kl_[w].find(y);
  return it == kl_[w].end() ? LaurentPoly() : it->second;
}

std::int64_t IwahoriHecke::mu(int y, int w) const {
  if (y == w) return 0;
  return p(y, w).coeff(-1);
}

HeckeVector IwahoriHecke::left_mul_generator(int s, const HeckeVector& a) const {
  HeckeVector out;
  for (const auto& [y, c] : a) {
    int sy = table_->left(s, y);
    if (sy < 0) throw TruncationError("T-basis product leaves the enumerated group", table_->bound());
    add_term(out, sy, c);
    if (table_->is_left_descent(s, y)) add_term(out, y, c * kVminusVinv);
  }
  return out;
}

HeckeVector IwahoriHecke::multiply_T(const HeckeVector& a, const HeckeVector& b) const {
  HeckeVector out;
  for (const auto& [w, c] : a) {
    HeckeVector cur = b;
    const auto& word = table_->word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_mul_generator(*it, cur);
    add_into(out, cur, c);
  }
  return out;
}

HeckeVector IwahoriHecke::bar_T(const HeckeVector& a) const {
  HeckeVector out;
  for (const auto& [w, c] : a) {
    HeckeVector cur{{0, LaurentPoly(1)}};
    const auto& word = table_->word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      // T_s^-1 = T_s + (v^-1 - v)
      HeckeVector next = left_mul_generator(*it, cur);
      add_into(next, cur, -kVminusVinv);
      cur = std::move(next);
    }
    add_into(out, cur, c.bar());
  }
  return out;
}

HeckeVector IwahoriHecke::c_in_T(int w) const {
  HeckeVector out;
  for (const auto& [y, py] : kl_[w]) out.emplace(y, py);
  return out;
}

HeckeVector IwahoriHecke::c_generator_times(int s, int x) const {
  if (table_->is_left_descent(s, x)) return {{x, LaurentPoly::quantum_two()}};
  int sx = table_->left(s, x);
  if (sx < 0) throw TruncationError("c-basis product leaves the enumerated group", table_->bound());
  HeckeVector out{{sx, LaurentPoly(1)}};
  for (const auto& [y, m] : mu_[x])
    if (table_->is_left_descent(s, y)) add_term(out, y, LaurentPoly(m));
  return out;
}

const HeckeVector& IwahoriHecke::c_product(int u, int w) const {
  auto key = std::make_pair(u, w);
  if (auto it = product_memo_.find(key); it != product_memo_.end()) return it->second;
  if (!table_->complete() && table_->length(u) + table_->length(w) > table_->bound())
    throw TruncationError("c-basis product needs lengths beyond the table", table_->bound());
  HeckeVector out;
  if (u == 0) {
    out.emplace(w, LaurentPoly(1));
  } else {
    int s = table_->first_left_descent(u);
    int u1 = table_->left(s, u);
    const HeckeVector inner = c_product(u1, w);
    for (const auto& [x, a] : inner) add_into(out, c_generator_times(s, x), a);
    for (const auto& [z, m] : mu_[u1]) {
      if (!table_->is_left_descent(s, z)) continue;
      add_into(out, c_product(z, w), LaurentPoly(-m));
    }
  }
  return product_memo_.emplace(key, std::move(out)).first->second;
}

HeckeVector IwahoriHecke::T_to_c(const HeckeVector& a) const {
  HeckeVector rest = a, out;
  while (!rest.empty()) {
    auto [w, c] = *rest.rbegin();
    add_term(out, w, c);
    add_into(rest, c_in_T(w), -c);
  }
  return out;
}

}  // namespace klcells
