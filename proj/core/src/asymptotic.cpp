#include "klcells/asymptotic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "klcells/errors.hpp"

namespace klcells {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Cell ids from class representatives, ordered by (a-value, first member).
std::vector<int> number_classes(UnionFind& uf, const std::vector<int>& member_a) {
  const int n = static_cast<int>(member_a.size());
  std::map<int, int> first;  // root -> first member
  for (int i = 0; i < n; ++i) first.emplace(uf.find(i), i);
  std::vector<std::pair<std::pair<int, int>, int>> order;
  for (const auto& [root, i] : first) order.push_back({{member_a[static_cast<std::size_t>(i)], i}, root});
  std::sort(order.begin(), order.end());
  std::map<int, int> id;
  for (std::size_t k = 0; k < order.size(); ++k) id[order[k].second] = static_cast<int>(k);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = id[uf.find(i)];
  return out;
}

int count_ids(const std::vector<int>& ids) {
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

/// True when the two labellings induce the same partition of [0, n).
bool same_partition(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::map<int, int> ab, ba;
  for (int i = 0; i < n; ++i) {
    auto x = a[static_cast<std::size_t>(i)], y = b[static_cast<std::size_t>(i)];
    if (auto [it, fresh] = ab.emplace(x, y); !fresh && it->second != y) return false;
    if (auto [it, fresh] = ba.emplace(y, x); !fresh && it->second != x) return false;
  }
  return true;
}

CellPartition assemble(const std::vector<int>& element, const std::vector<int>& lambda, const std::vector<int>& member_a,
                       UnionFind& left, UnionFind& right, UnionFind& two) {
  CellPartition p;
  p.element = element;
  p.lambda = lambda;
  p.member_a = member_a;
  p.left = number_classes(left, member_a);
  p.right = number_classes(right, member_a);
  p.two_sided = number_classes(two, member_a);
  p.a_value.assign(static_cast<std::size_t>(count_ids(p.two_sided)), -1);
  for (int i = 0; i < p.size(); ++i) {
    int& a = p.a_value[static_cast<std::size_t>(p.two_sided[static_cast<std::size_t>(i)])];
    if (a < 0) a = member_a[static_cast<std::size_t>(i)];
  }
  return p;
}

}  // namespace

int CellPartition::num_left() const { return count_ids(left); }
int CellPartition::num_right() const { return count_ids(right); }

std::vector<std::vector<int>> CellPartition::two_sided_members() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_two_sided()));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(two_sided[static_cast<std::size_t>(i)])].push_back(i);
  return out;
}

StructureTable::StructureTable(const LambdaGeometry& geom, int support_bound)
    : geom_(&geom), support_bound_(support_bound) {
  if (support_bound < 0) throw std::invalid_argument("StructureTable: negative bound");
  table_ = std::make_unique<CoxeterTable>(geom.table(2 * support_bound));
  hecke_ = std::make_unique<IwahoriHecke>(*table_);
  support_end_.assign(static_cast<std::size_t>(support_bound) + 1, 0);
  for (int m = 0; m <= support_bound; ++m) {
    int end = 0;
    while (end < table_->size() && table_->length(end) <= m) ++end;
    support_end_[static_cast<std::size_t>(m)] = end;
  }
  const int n = support_size();
  // best[m][z]: largest -deg over pairs whose longer factor has length m.
  std::vector<std::vector<int>> best(static_cast<std::size_t>(support_bound) + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = std::max(table_->length(x), table_->length(y));
      for (const auto& [z, r] : hecke_->c_product(x, y)) {
        if (z >= n) continue;
        int& b = best[static_cast<std::size_t>(m)][static_cast<std::size_t>(z)];
        b = std::max(b, -r.min_degree());
      }
    }
  a_.assign(static_cast<std::size_t>(support_bound) + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int m = 0; m <= support_bound; ++m)
    for (int z = 0; z < n; ++z) {
      int prev = m > 0 ? a_[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(z)] : 0;
      a_[static_cast<std::size_t>(m)][static_cast<std::size_t>(z)] = std::max(prev, best[static_cast<std::size_t>(m)][static_cast<std::size_t>(z)]);
    }
}

int StructureTable::support_size(int m) const {
  if (m < 0 || m > support_bound_) throw std::invalid_argument("support_size: bound outside the table");
  return support_end_[static_cast<std::size_t>(m)];
}

const HeckeVector& StructureTable::product(int x, int y) const { return hecke_->c_product(x, y); }

int StructureTable::a_value(int z, int m) const {
  if (z < 0 || z >= support_size(m)) throw std::invalid_argument("a_value: element outside the support");
  return a_[static_cast<std::size_t>(m)][static_cast<std::size_t>(z)];
}

std::int64_t StructureTable::leading(int x, int y, int z, int m) const {
  const HeckeVector& p = product(x, y);
  auto it = p.find(z);
  if (it == p.end()) return 0;
  return it->second.coeff(-a_value(z, m));
}

StructureTable structure_constants(const LambdaGeometry& geom, int support_bound) {
  return StructureTable(geom, support_bound);
}

AValue a_function(const StructureTable& table, const WeylElement& w) {
  int id = table.table().find(w);
  const int n = table.support_bound();
  if (id < 0 || id >= table.support_size())
    throw TruncationError("a_function: element outside the support", n);
  AValue out;
  out.value = table.a_value(id, n);
  out.stabilized = true;
  for (int m = std::max(0, n - 2); m < n; ++m)
    if (id >= table.support_size(m) || table.a_value(id, m) != out.value) out.stabilized = false;
  if (n < 2) out.stabilized = table.table().complete();
  return out;
}

JRing::JRing(const StructureTable& table) : table_(&table) {
  const int n = support_size();
  products_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      JElement& out = products_[index(x, y)];
      for (const auto& [z, r] : table.product(x, y)) {
        if (z >= n) continue;
        if (std::int64_t c = r.coeff(-table.a_value(z)); c != 0) out.emplace(z, c);
      }
    }

  const CoxeterTable& t = table.table();
  auto acts_as_unit_or_zero = [&](const JElement& p, int w) {
    return p.empty() || (p.size() == 1 && p.begin()->first == w && p.begin()->second == 1);
  };
  for (int d = 0; d < n; ++d) {
    if (t.inverse(d) != d) continue;
    bool ok = true, used = false;
    for (int w = 0; w < n && ok; ++w) {
      const JElement& l = product(d, w);
      const JElement& r = product(w, d);
      ok = acts_as_unit_or_zero(l, w) && acts_as_unit_or_zero(r, w);
      used = used || !l.empty() || !r.empty();
    }
    if (ok && used) d_.push_back(d);
  }
  // Elements far enough from the edge must see exactly one unit term per side.
  const int inner = table.support_size(table.support_bound() / 2);
  for (int w = 0; w < inner; ++w) {
    int lc = 0, rc = 0;
    for (int d : d_) {
      lc += product(d, w).empty() ? 0 : 1;
      rc += product(w, d).empty() ? 0 : 1;
    }
    if (lc != 1 || rc != 1)
      throw TruncationError("no consistent set of distinguished involutions on the support", table.support_bound());
  }
}

JElement JRing::multiply(const JElement& a, const JElement& b) const {
  JElement out;
  const int n = support_size();
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      if (x >= n || y >= n) throw std::invalid_argument("JRing::multiply: element outside the support");
      for (const auto& [z, c] : product(x, y)) {
        auto& slot = out[z];
        slot += cx * cy * c;
        if (slot == 0) out.erase(z);
      }
    }
  return out;
}

JElement JRing::unit() const {
  JElement out;
  for (int d : d_) out.emplace(d, 1);
  return out;
}

JRing j_ring(const StructureTable& table) { return JRing(table); }

HeckeVector psi(const StructureTable& table, const JRing& jring, int w) {
  const int n = table.support_size();
  if (w < 0 || w >= n) throw std::invalid_argument("psi: element outside the support");
  HeckeVector out;
  for (int d : jring.distinguished())
    for (const auto& [z, r] : table.product(w, d))
      if (z < n && table.a_value(z) == table.a_value(d)) add_term(out, z, r);
  return out;
}

HeckeVector j_multiply(const JRing& jring, const HeckeVector& a, const HeckeVector& b) {
  HeckeVector out;
  for (const auto& [x, p] : a)
    for (const auto& [y, q] : b) {
      LaurentPoly pq = p * q;
      for (const auto& [z, c] : jring.product(x, y)) add_term(out, z, pq * LaurentPoly(c));
    }
  return out;
}

CellPartition cell_closure(const StructureTable& table, int m) {
  const int n = table.support_size(m);
  UnionFind left(n), right(n), two(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, r] : table.product(x, y)) {
        if (z >= n || r.coeff(-table.a_value(z, m)) == 0) continue;
        left.unite(y, z);
        right.unite(x, z);
        two.unite(y, z);
        two.unite(x, z);
      }
  std::vector<int> element(static_cast<std::size_t>(n)), lambda(static_cast<std::size_t>(n), 0), a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    element[static_cast<std::size_t>(i)] = i;
    a[static_cast<std::size_t>(i)] = table.a_value(i, m);
  }
  return assemble(element, lambda, a, left, right, two);
}

std::vector<int> catalog_a_values(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> totals{0};
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> nodes{s};
    comp[static_cast<std::size_t>(s)] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int t = 0; t < n; ++t)
        if (comp[static_cast<std::size_t>(t)] < 0 && m[static_cast<std::size_t>(nodes[k])][static_cast<std::size_t>(t)] != 2) {
          comp[static_cast<std::size_t>(t)] = s;
          nodes.push_back(t);
        }
    std::vector<int> a;
    if (nodes.size() == 1) {
      a = {0, 1};
    } else if (nodes.size() == 2) {
      int order = m[static_cast<std::size_t>(nodes[0])][static_cast<std::size_t>(nodes[1])];
      a = order == 0 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, order};
    } else if (nodes.size() == 3) {
      std::vector<int> e;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) e.push_back(m[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)])][static_cast<std::size_t>(nodes[static_cast<std::size_t>(j)])]);
      std::sort(e.begin(), e.end());
      if (e == std::vector<int>{3, 3, 3}) a = {0, 1, 3};
      else if (e == std::vector<int>{2, 4, 4}) a = {0, 1, 2, 4};
      else if (e == std::vector<int>{2, 3, 6}) a = {0, 1, 2, 3, 6};
    }
    if (a.empty()) throw UnsupportedError("no cell catalog entry for this Coxeter group");
    std::vector<int> next;
    for (int x : totals)
      for (int y : a) next.push_back(x + y);
    totals = std::move(next);
  }
  std::sort(totals.begin(), totals.end());
  return totals;
}

CellPartition cells_of_W_lambda(const StructureTable& table) {
  const int n = table.support_bound();
  CellPartition top = cell_closure(table, n);
  const int inner = table.support_size(std::max(0, n - 2));
  top.stabilized = n >= 2 || table.table().complete();
  for (int m = std::max(0, n - 2); m < n; ++m) {
    CellPartition p = cell_closure(table, m);
    for (int i = 0; i < inner; ++i)
      if (p.member_a[static_cast<std::size_t>(i)] != top.member_a[static_cast<std::size_t>(i)]) top.stabilized = false;
    if (!same_partition(p.two_sided, top.two_sided, inner) || !same_partition(p.left, top.left, inner) ||
        !same_partition(p.right, top.right, inner))
      top.stabilized = false;
  }
  if (top.stabilized) {
    std::map<int, int> expected, got;
    for (int a : catalog_a_values(table.geometry().coxeter_matrix())) ++expected[a];
    for (int a : top.a_value) ++got[a];
    for (const auto& [a, k] : got) {
      auto it = expected.find(a);
      if (it == expected.end()) throw InvariantViolation("a-value " + std::to_string(a) + " is not in the cell catalog");
      // Too many cells with this a-value: longer elements still have to join them.
      if (k > it->second) top.stabilized = false;
    }
    for (const auto& [a, k] : expected) {
      auto it = got.find(a);
      if (it == got.end() || it->second < k) top.stabilized = false;
    }
  }
  return top;
}

CellPartition cells_of_W_lambda(const LambdaGeometry& geom, int bound) {
  StructureTable table(geom, bound);
  return cells_of_W_lambda(table);
}

namespace {

/// Per-key data shared by the constructive partition and the closure.
struct KeyInfo {
  int w = 0;
  int lam = 0;
  WeylElement z;
  int w_tilde = 0;  // id in the W_lambda structure table
};

std::vector<KeyInfo> key_infos(const OrbitCells& oc) {
  std::vector<KeyInfo> out;
  for (int w = 0; w < oc.weyl->size(); ++w)
    for (int lam = 0; lam < static_cast<int>(oc.orbit.size()); ++lam) {
      CosetFactorization f = min_coset_factorize(*oc.geometry[static_cast<std::size_t>(lam)], oc.weyl->element(w));
      const StructureTable& t = *oc.tables[static_cast<std::size_t>(lam)];
      int id = t.table().find(f.w_tilde);
      if (id < 0 || id >= t.support_size()) throw InvariantViolation("W_lambda part longer than the element");
      out.push_back({w, lam, f.z, id});
    }
  return out;
}

}  // namespace

CellPartition orbit_cell_closure(const OrbitCells& oc) {
  std::vector<KeyInfo> keys = key_infos(oc);
  const int n = static_cast<int>(keys.size());
  const int orbit_size = static_cast<int>(oc.orbit.size());
  auto position = [&](int w, int lam) { return w * orbit_size + lam; };
  UnionFind left(n), right(n), two(n);
  for (int i = 0; i < n; ++i) {
    const KeyInfo& k0 = keys[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const KeyInfo& k1 = keys[static_cast<std::size_t>(j)];
      const Lambda& l1 = oc.orbit[static_cast<std::size_t>(k1.lam)];
      if (!(act(k1.z, l1) == oc.orbit[static_cast<std::size_t>(k0.lam)])) continue;
      const StructureTable& t = *oc.tables[static_cast<std::size_t>(k1.lam)];
      const CoxeterTable& wl0 = oc.tables[static_cast<std::size_t>(k0.lam)]->table();
      WeylElement x = compose(inverse(k1.z), compose(wl0.element(k0.w_tilde), k1.z));
      int xid = t.table().find(x);
      if (xid < 0 || xid >= t.support_size()) continue;
      WeylElement z01 = compose(k0.z, k1.z);
      for (const auto& [y, r] : t.product(xid, k1.w_tilde)) {
        if (y >= t.support_size() || r.coeff(-t.a_value(y)) == 0) continue;
        int w2 = oc.weyl->find(compose(z01, t.table().element(y)));
        if (w2 < 0) continue;
        int k = position(w2, k1.lam);
        left.unite(j, k);
        right.unite(i, k);
        two.unite(j, k);
        two.unite(i, k);
      }
    }
  }
  std::vector<int> element, lambda, a;
  for (const auto& k : keys) {
    element.push_back(k.w);
    lambda.push_back(k.lam);
    a.push_back(oc.tables[static_cast<std::size_t>(k.lam)]->a_value(k.w_tilde));
  }
  return assemble(element, lambda, a, left, right, two);
}

OrbitCells cells_of_W_times_orbit(const RootDatum& d, const Lambda& lambda, int bound) {
  OrbitCells oc;
  oc.datum = &d;
  oc.orbit = orbit(d, lambda);
  oc.representative = static_cast<int>(std::lower_bound(oc.orbit.begin(), oc.orbit.end(), lambda) - oc.orbit.begin());
  oc.bound = bound;
  oc.weyl = std::make_unique<CoxeterTable>(d, d.simple(), bound);
  for (const auto& l : oc.orbit) {
    oc.geometry.push_back(std::make_unique<LambdaGeometry>(d, l));
    oc.tables.push_back(std::make_unique<StructureTable>(*oc.geometry.back(), bound));
    oc.w_lambda_cells.push_back(cells_of_W_lambda(*oc.tables.back()));
  }
  const int rep = oc.representative;
  const LambdaGeometry& g0 = *oc.geometry[static_cast<std::size_t>(rep)];
  const StructureTable& t0 = *oc.tables[static_cast<std::size_t>(rep)];
  const CellPartition& c0 = oc.w_lambda_cells[static_cast<std::size_t>(rep)];
  const int ncells = c0.num_two_sided();

  // [lambda, lambda] acting by conjugation on Cell(W_lambda).
  UnionFind orbits(ncells);
  std::vector<std::vector<int>> members = c0.two_sided_members();
  for (const WeylElement& z : groupoid_component(*oc.weyl, g0, g0.lambda())) {
    WeylElement zinv = inverse(z);
    for (int c = 0; c < ncells; ++c) {
      int w = members[static_cast<std::size_t>(c)].front();
      int img = t0.table().find(compose(z, compose(t0.table().element(w), zinv)));
      if (img < 0 || img >= c0.size()) throw InvariantViolation("conjugate left the W_lambda support");
      orbits.unite(c, c0.two_sided[static_cast<std::size_t>(img)]);
    }
  }
  std::vector<int> cell_a(c0.a_value);
  std::vector<int> orbit_of_cell = number_classes(orbits, cell_a);
  oc.cell_orbit = orbit_of_cell;

  // One element of [lambda', lambda_rep] for each lambda'.
  std::vector<std::optional<WeylElement>> to_rep(oc.orbit.size());
  for (int id = 0; id < oc.weyl->size(); ++id) {
    const WeylElement& z = oc.weyl->element(id);
    if (!g0.is_min_coset_rep(z)) continue;
    int lam = static_cast<int>(std::lower_bound(oc.orbit.begin(), oc.orbit.end(), act(z, g0.lambda())) - oc.orbit.begin());
    if (!to_rep[static_cast<std::size_t>(lam)]) to_rep[static_cast<std::size_t>(lam)] = z;
  }
  for (const auto& z : to_rep)
    if (!z) throw TruncationError("groupoid element to the representative beyond the bound", bound);

  std::vector<KeyInfo> keys = key_infos(oc);
  const int n = static_cast<int>(keys.size());
  std::vector<int> element, lam_of, a, two_label, left_label;
  for (const auto& k : keys) {
    const WeylElement& z = *to_rep[static_cast<std::size_t>(k.lam)];
    const CoxeterTable& wl = oc.tables[static_cast<std::size_t>(k.lam)]->table();
    WeylElement moved = compose(inverse(z), compose(wl.element(k.w_tilde), z));
    int id = t0.table().find(moved);
    if (id < 0 || id >= c0.size()) throw InvariantViolation("transported element left the W_lambda support");
    element.push_back(k.w);
    lam_of.push_back(k.lam);
    a.push_back(c0.member_a[static_cast<std::size_t>(id)]);
    two_label.push_back(orbit_of_cell[static_cast<std::size_t>(c0.two_sided[static_cast<std::size_t>(id)])]);
    const CellPartition& own = oc.w_lambda_cells[static_cast<std::size_t>(k.lam)];
    left_label.push_back(k.lam * 100000 + own.left[static_cast<std::size_t>(k.w_tilde)]);
  }
  UnionFind two(n), left(n), right(n);
  std::map<int, int> first_two, first_left;
  for (int i = 0; i < n; ++i) {
    two.unite(i, first_two.emplace(two_label[static_cast<std::size_t>(i)], i).first->second);
    left.unite(i, first_left.emplace(left_label[static_cast<std::size_t>(i)], i).first->second);
  }
  // Right cells: images of left cells under (w, lambda) -> (w^-1, w(lambda)).
  const int orbit_size = static_cast<int>(oc.orbit.size());
  for (int i = 0; i < n; ++i) {
    int rep_i = left.find(i);
    auto image = [&](int k) {
      int w = element[static_cast<std::size_t>(k)];
      int l = static_cast<int>(std::lower_bound(oc.orbit.begin(), oc.orbit.end(),
                                                act(oc.weyl->element(w), oc.orbit[static_cast<std::size_t>(lam_of[static_cast<std::size_t>(k)])])) -
                               oc.orbit.begin());
      return oc.weyl->inverse(w) * orbit_size + l;
    };
    right.unite(image(i), image(rep_i));
  }
  oc.cells = assemble(element, lam_of, a, left, right, two);
  oc.cells.stabilized = c0.stabilized;

  CellPartition direct = orbit_cell_closure(oc);
  if (!same_partition(direct.two_sided, oc.cells.two_sided, n) || !same_partition(direct.left, oc.cells.left, n))
    throw InvariantViolation("constructed cells of W x o differ from the closure of the t-table");
  if (direct.member_a != oc.cells.member_a) throw InvariantViolation("a-values of W x o disagree");
  return oc;
}

HeckeElement orbit_c_product(const OrbitHecke& h, const BasisKey& k0, const BasisKey& k1) {
  return h.to_c_basis(h.multiply(h.kl_basis_element(k0), h.kl_basis_element(k1)));
}

HeckeElement orbit_c_product_factored(const OrbitHecke& h, const BasisKey& k0, const BasisKey& k1) {
  CosetFactorization f0 = h.factorize(k0), f1 = h.factorize(k1);
  if (!(act(f1.z, h.lambda(k1)) == h.lambda(k0))) return {};
  const CoxeterTable& wl = h.w_lambda_table(k1.lambda);
  WeylElement x = compose(inverse(f1.z), compose(f0.w_tilde, f1.z));
  int xid = wl.find(x), wid = wl.find(f1.w_tilde);
  if (xid < 0 || wid < 0) throw TruncationError("factored product needs W_lambda elements beyond the bound", h.bound());
  WeylElement z01 = compose(f0.z, f1.z);
  HeckeElement out;
  for (const auto& [y, r] : h.abstract_hecke(k1.lambda).c_product(xid, wid)) {
    int w2 = h.weyl().find(compose(z01, wl.element(y)));
    if (w2 < 0) throw TruncationError("factored product leaves the W table", h.bound());
    add_term(out, {w2, k1.lambda}, r);
  }
  return out;
}

}  // namespace klcells
