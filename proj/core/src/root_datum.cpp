#include "klcells/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "klcells/errors.hpp"

namespace klcells {

std::string to_string(CaseFlag c) { return c == CaseFlag::A ? "A" : "B"; }

CaseFlag parse_case(const std::string& s) {
  if (s == "A" || s == "a") return CaseFlag::A;
  if (s == "B" || s == "b") return CaseFlag::B;
  throw std::invalid_argument("case must be A or B, got '" + s + "'");
}

const std::vector<std::string>& RootDatum::supported_types() {
  static const std::vector<std::string> types = {"A1", "A1xA1", "A2", "B2", "G2"};
  return types;
}

namespace {

struct CatalogEntry {
  int rank;
  std::vector<std::int64_t> cartan;  // row-major rank x rank
};

// B2: h1 long. G2: h1 short.
CatalogEntry catalog(const std::string& type) {
  if (type == "A1") return {1, {2}};
  if (type == "A1xA1") return {2, {2, 0, 0, 2}};
  if (type == "A2") return {2, {2, -1, -1, 2}};
  if (type == "B2") return {2, {2, -2, -1, 2}};
  if (type == "G2") return {2, {2, -1, -3, 2}};
  std::string msg = "unsupported Cartan type '" + type + "'; supported:";
  for (const auto& t : RootDatum::supported_types()) msg += " " + t;
  throw UnsupportedError(msg);
}

std::string normalize_type(const std::string& t) {
  if (t == "A1×A1" || t == "A1*A1" || t == "A1+A1") return "A1xA1";
  return t;
}

}  // namespace

int RootDatum::root_index(const Vec& h) const {
  auto it = index_.find(h);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t RootDatum::height(int root) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += roots_[static_cast<std::size_t>(root)][static_cast<std::size_t>(i)];
  return s;
}

std::string RootDatum::simple_label(int i) const {
  if (i < rank_) return std::to_string(i + 1);
  return "e" + std::to_string(i - rank_ + 1);
}

Vec RootDatum::vector_of(const AffineRoot& chi) const {
  Vec v = roots_.at(static_cast<std::size_t>(chi.root));
  if (case_ == CaseFlag::B) v[static_cast<std::size_t>(rank_)] = chi.level;
  return v;
}

Vec RootDatum::coroot_of(const AffineRoot& chi) const { return coroots_.at(static_cast<std::size_t>(chi.root)); }

bool RootDatum::is_positive(const AffineRoot& chi) const {
  return chi.level > 0 || (chi.level == 0 && is_positive_root(chi.root));
}

AffineRoot RootDatum::negate(const AffineRoot& chi) const { return {negative(chi.root), -chi.level}; }

std::optional<AffineRoot> RootDatum::classify(const Vec& v) const {
  Vec h = v;
  std::int64_t level = 0;
  if (case_ == CaseFlag::B) {
    level = h[static_cast<std::size_t>(rank_)];
    h[static_cast<std::size_t>(rank_)] = 0;
  } else if (v[static_cast<std::size_t>(rank_)] != 0 && rank_ < kMaxDim) {
    return std::nullopt;
  }
  int idx = root_index(h);
  if (idx < 0 || level % delta(idx) != 0) return std::nullopt;
  return AffineRoot{idx, level};
}

RootDatum build_root_datum(const std::string& type_in, CaseFlag case_flag) {
  const std::string type = normalize_type(type_in);
  CatalogEntry entry = catalog(type);
  RootDatum d;
  d.type_ = type;
  d.case_ = case_flag;
  d.rank_ = entry.rank;
  d.dim_ = entry.rank + (case_flag == CaseFlag::B ? 1 : 0);
  const auto& types = RootDatum::supported_types();
  d.tag_ = 2 * static_cast<int>(std::find(types.begin(), types.end(), type) - types.begin()) +
           (case_flag == CaseFlag::B ? 1 : 0);
  const int r = d.rank_;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) at(d.cartan_, i, j) = entry.cartan[static_cast<std::size_t>(i * r + j)];

  // Orbit of the simple roots; coroots tracked in the simple-coroot basis.
  std::vector<Vec> roots, coroots_simple;
  std::map<Vec, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < r; ++i) {
    Vec h{}, cv{};
    h[static_cast<std::size_t>(i)] = 1;
    cv[static_cast<std::size_t>(i)] = 1;
    seen[h] = static_cast<int>(roots.size());
    queue.push_back(static_cast<int>(roots.size()));
    roots.push_back(h);
    coroots_simple.push_back(cv);
  }
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Vec h = roots[static_cast<std::size_t>(k)], cv = coroots_simple[static_cast<std::size_t>(k)];
      std::int64_t hy = 0, hx = 0;  // <y, h'_i> and <h_i, x>
      for (int j = 0; j < r; ++j) {
        hy += h[static_cast<std::size_t>(j)] * at(d.cartan_, j, i);
        hx += cv[static_cast<std::size_t>(j)] * at(d.cartan_, i, j);
      }
      h[static_cast<std::size_t>(i)] -= hy;
      cv[static_cast<std::size_t>(i)] -= hx;
      if (seen.count(h)) continue;
      seen[h] = static_cast<int>(roots.size());
      queue.push_back(static_cast<int>(roots.size()));
      roots.push_back(h);
      coroots_simple.push_back(cv);
    }
  }
  // Deterministic order: positive roots by height then coordinates, then negatives.
  std::vector<int> order(roots.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  auto height_of = [&](int k) {
    std::int64_t s = 0;
    for (int i = 0; i < r; ++i) s += roots[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    return s;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    std::int64_t ha = height_of(a), hb = height_of(b);
    bool pa = ha > 0, pb = hb > 0;
    if (pa != pb) return pa;
    std::int64_t ka = pa ? ha : -ha, kb = pb ? hb : -hb;
    if (ka != kb) return ka < kb;
    return pa ? roots[static_cast<std::size_t>(a)] > roots[static_cast<std::size_t>(b)]
              : roots[static_cast<std::size_t>(a)] < roots[static_cast<std::size_t>(b)];
  });
  std::vector<std::int64_t> coroot_height;
  for (int k : order) {
    const Vec& h = roots[static_cast<std::size_t>(k)];
    const Vec& cv = coroots_simple[static_cast<std::size_t>(k)];
    Vec co{};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) co[static_cast<std::size_t>(i)] += at(d.cartan_, i, j) * cv[static_cast<std::size_t>(j)];
    d.index_[h] = static_cast<int>(d.roots_.size());
    d.roots_.push_back(h);
    d.coroots_.push_back(co);
    d.positive_.push_back(height_of(k) > 0);
    std::int64_t ht = 0;
    for (int i = 0; i < r; ++i) ht += cv[static_cast<std::size_t>(i)];
    coroot_height.push_back(ht);
  }
  const int n = d.num_roots();
  for (int k = 0; k < n; ++k) d.negative_.push_back(d.root_index(negate(d.roots_[static_cast<std::size_t>(k)])));

  // Dynkin components.
  std::vector<int> comp_of_simple(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    if (comp_of_simple[static_cast<std::size_t>(i)] >= 0) continue;
    int id = static_cast<int>(d.components_.size());
    d.components_.push_back({});
    std::deque<int> q{i};
    comp_of_simple[static_cast<std::size_t>(i)] = id;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      d.components_.back().push_back(a);
      for (int b = 0; b < r; ++b)
        if (b != a && at(d.cartan_, a, b) != 0 && comp_of_simple[static_cast<std::size_t>(b)] < 0) {
          comp_of_simple[static_cast<std::size_t>(b)] = id;
          q.push_back(b);
        }
    }
    std::sort(d.components_.back().begin(), d.components_.back().end());
  }
  for (int k = 0; k < n; ++k) {
    int c = -1;
    for (int i = 0; i < r; ++i)
      if (d.roots_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] != 0) c = comp_of_simple[static_cast<std::size_t>(i)];
    d.root_component_.push_back(c);
  }

  // Squared lengths e_j = (h_j, h_j) from A_ij e_j = A_ji e_i, scaled to integers.
  std::vector<std::int64_t> e(static_cast<std::size_t>(r), 0);
  for (const auto& comp : d.components_) {
    e[static_cast<std::size_t>(comp[0])] = 6;
    for (std::size_t t = 1; t < comp.size(); ++t) {
      int j = comp[t], i = comp[0];
      e[static_cast<std::size_t>(j)] = at(d.cartan_, j, i) * e[static_cast<std::size_t>(i)] / at(d.cartan_, i, j);
    }
  }
  auto norm2 = [&](const Vec& h) {
    std::int64_t s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        s += h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)] * at(d.cartan_, i, j) * e[static_cast<std::size_t>(j)];
    return s / 2;
  };

  // beta_e: coroot is minus the highest coroot of the component.
  for (std::size_t c = 0; c < d.components_.size(); ++c) {
    int best = -1;
    std::int64_t best_height = 0;
    for (int k = 0; k < n; ++k) {
      if (d.root_component_[static_cast<std::size_t>(k)] != static_cast<int>(c)) continue;
      std::int64_t ht = coroot_height[static_cast<std::size_t>(k)];
      if (best < 0 || ht > best_height) {
        best = k;
        best_height = ht;
      }
    }
    d.beta_.push_back(d.negative(best));
  }
  for (int k = 0; k < n; ++k) {
    int c = d.root_component_[static_cast<std::size_t>(k)];
    std::int64_t num = norm2(d.roots_[static_cast<std::size_t>(k)]);
    std::int64_t den = norm2(d.roots_[static_cast<std::size_t>(d.beta_[static_cast<std::size_t>(c)])]);
    if (num % den != 0) throw InvariantViolation("delta is not an integer");
    d.delta_.push_back(static_cast<int>(num / den));
  }

  for (int i = 0; i < r; ++i) d.simple_.push_back({i, 0});
  if (case_flag == CaseFlag::B)
    for (int b : d.beta_) d.simple_.push_back({b, 1});
  return d;
}

int delta_of(const RootDatum& datum, const Vec& h) {
  Vec hb = h;
  if (datum.rank() < kMaxDim) hb[static_cast<std::size_t>(datum.rank())] = 0;
  int idx = datum.root_index(hb);
  if (idx < 0 || (datum.case_flag() == CaseFlag::A && !is_zero(sub(h, hb))))
    throw std::invalid_argument("delta_of: " + to_string(h, datum.dim()) + " is not a root");
  return datum.delta(idx);
}

Mat reflection_matrix(const RootDatum& datum, const AffineRoot& chi, Side side) {
  const int dim = datum.dim();
  Vec y = datum.vector_of(chi), x = datum.coroot_of(chi);
  Mat m = identity_matrix(dim);
  // On V': x -> x - <chi, x> chi', matrix I - chi' chi^T. On V: I - chi chi'^T.
  const Vec& col = side == Side::OnV ? y : x;
  const Vec& row = side == Side::OnV ? x : y;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) at(m, i, j) -= col[static_cast<std::size_t>(i)] * row[static_cast<std::size_t>(j)];
  return m;
}

Mat simple_reflection(const RootDatum& datum, int i, Side side) {
  if (i < 0 || i >= datum.num_simple()) throw std::invalid_argument("simple_reflection: index out of range");
  return reflection_matrix(datum, datum.simple()[static_cast<std::size_t>(i)], side);
}

std::vector<TaggedRoot> enumerate_R(const RootDatum& datum, std::int64_t level_bound) {
  if (level_bound < 0) throw std::invalid_argument("enumerate_R: negative level bound");
  std::vector<TaggedRoot> out;
  for (int k = 0; k < datum.num_roots(); ++k) {
    if (datum.case_flag() == CaseFlag::A) {
      out.push_back({{k, 0}, datum.is_positive_root(k)});
      continue;
    }
    std::int64_t dk = datum.delta(k);
    for (std::int64_t n = -(level_bound / dk) * dk; n <= level_bound; n += dk) {
      AffineRoot chi{k, n};
      out.push_back({chi, datum.is_positive(chi)});
    }
  }
  std::sort(out.begin(), out.end(), [](const TaggedRoot& a, const TaggedRoot& b) {
    if (a.root.level != b.root.level) return a.root.level < b.root.level;
    return a.root.root < b.root.root;
  });
  return out;
}

}  // namespace klcells
