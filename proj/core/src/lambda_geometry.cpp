#include "klcells/lambda_geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "klcells/errors.hpp"

namespace klcells {

namespace {

std::int64_t pairing(const RootDatum& d, int a, int b) {
  // <h_a, h_b'>
  return dot(d.roots()[a], d.coroots()[b], d.rank());
}

}  // namespace

LambdaGeometry::LambdaGeometry(const RootDatum& d, const Lambda& lambda) : datum_(&d), lambda_(lambda) {
  if (lambda.tag() != d.tag()) throw std::invalid_argument("LambdaGeometry: point belongs to another root datum");
  const bool affine = d.case_flag() == CaseFlag::B;
  const std::int64_t q_prime = lambda.tau(d).second;

  for (int k = 0; k < d.num_roots(); ++k) {
    bool found = false;
    if (!affine) {
      found = in_R_lambda({k, 0});
    } else {
      for (std::int64_t m = 0; m < q_prime && !found; ++m) found = in_R_lambda({k, m * d.delta(k)});
    }
    if (found) rbar_.push_back(k);
  }
  std::set<int> rbar_set(rbar_.begin(), rbar_.end());
  for (int a : rbar_) {
    if (!d.is_positive_root(a)) continue;
    bool decomposable = false;
    for (int b : rbar_) {
      if (!d.is_positive_root(b) || b == a) continue;
      int c = d.root_index(sub(d.roots()[a], d.roots()[b]));
      if (c >= 0 && d.is_positive_root(c) && rbar_set.count(c)) decomposable = true;
    }
    if (!decomposable) rbar_simple_.push_back(a);
  }
  std::vector<int> comp(rbar_simple_.size(), -1);
  for (std::size_t i = 0; i < rbar_simple_.size(); ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(rbar_components_.size());
    rbar_components_.push_back({});
    std::deque<std::size_t> q{i};
    comp[i] = id;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      rbar_components_.back().push_back(rbar_simple_[a]);
      for (std::size_t b = 0; b < rbar_simple_.size(); ++b)
        if (comp[b] < 0 && pairing(d, rbar_simple_[a], rbar_simple_[b]) != 0) {
          comp[b] = id;
          q.push_back(b);
        }
    }
    std::sort(rbar_components_.back().begin(), rbar_components_.back().end());
  }

  // Pi_lambda: reflections of lambda-length one.
  const std::int64_t level_bound = affine ? 6 * q_prime + 3 : 0;
  for (int k : rbar_) {
    for (std::int64_t n = 0; n <= level_bound; n += d.delta(k)) {
      AffineRoot chi{k, n};
      if (!d.is_positive(chi) || !in_R_lambda(chi)) continue;
      if (inversions_lambda(WeylElement::reflection(d, chi)) == 1) simple_.push_back(chi);
    }
  }
  std::sort(simple_.begin(), simple_.end(), [](const AffineRoot& a, const AffineRoot& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.root < b.root;
  });
  const std::size_t expected = rbar_simple_.size() + (affine ? rbar_components_.size() : 0);
  if (simple_.size() != expected)
    throw InvariantViolation("simple system of W_lambda has " + std::to_string(simple_.size()) +
                             " elements, expected " + std::to_string(expected));

  for (const auto& chi : simple_) {
    int c = -1;
    for (std::size_t u = 0; u < rbar_components_.size() && c < 0; ++u)
      for (int b : rbar_components_[u])
        if (pairing(d, chi.root, b) != 0) c = static_cast<int>(u);
    simple_component_.push_back(c);
  }

  const std::size_t n = simple_.size();
  coxeter_.assign(n, std::vector<int>(n, 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b)
        coxeter_[a][b] = coxeter_order(pairing(d, simple_[a].root, simple_[b].root) *
                                       pairing(d, simple_[b].root, simple_[a].root));
}

std::vector<int> LambdaGeometry::hat_simple_system() const {
  std::vector<int> out;
  for (const auto& chi : simple_) out.push_back(chi.root);
  return out;
}

int LambdaGeometry::inversions_lambda(const WeylElement& w) const {
  int count = 0;
  for_each_inversion(*datum_, w, [&](const AffineRoot& chi) {
    if (in_R_lambda(chi)) ++count;
  });
  return count;
}

bool LambdaGeometry::is_min_coset_rep(const WeylElement& z) const {
  for (const auto& chi : simple_)
    if (sends_negative(*datum_, z, chi)) return false;
  return true;
}

bool LambdaGeometry::in_W_lambda(const WeylElement& w) const {
  return min_coset_factorize(*this, w).z.is_identity();
}

std::vector<Lambda> orbit(const RootDatum& d, const Lambda& lambda) {
  std::set<Lambda> seen{lambda};
  std::deque<Lambda> queue{lambda};
  std::vector<WeylElement> gens;
  for (int i = 0; i < d.num_simple(); ++i) gens.push_back(WeylElement::simple(d, i));
  while (!queue.empty()) {
    Lambda cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Lambda next = act(s, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<AffineRoot> R_lambda_positive(const LambdaGeometry& geom, std::int64_t level_bound) {
  std::vector<AffineRoot> out;
  for (const auto& t : enumerate_R(geom.datum(), level_bound))
    if (t.positive && geom.in_R_lambda(t.root)) out.push_back(t.root);
  return out;
}

LambdaGeometry simple_system(const RootDatum& d, const Lambda& lambda) { return LambdaGeometry(d, lambda); }

int length_lambda(const LambdaGeometry& geom, const WeylElement& w) {
  if (!geom.in_W_lambda(w)) throw std::invalid_argument("length_lambda: element is not in W_lambda");
  return geom.inversions_lambda(w);
}

CosetFactorization min_coset_factorize(const LambdaGeometry& geom, const WeylElement& w) {
  const RootDatum& d = geom.datum();
  WeylElement z = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& chi : geom.simple_system()) {
      if (sends_negative(d, z, chi)) {
        z = compose(z, WeylElement::reflection(d, chi));
        changed = true;
        break;
      }
    }
  }
  return {z, compose(inverse(z), w)};
}

std::vector<WeylElement> groupoid_component(const CoxeterTable& w_table, const LambdaGeometry& geom,
                                            const Lambda& lambda_prime) {
  std::vector<WeylElement> out;
  for (int id = 0; id < w_table.size(); ++id) {
    const WeylElement& z = w_table.element(id);
    if (act(z, geom.lambda()) == lambda_prime && geom.is_min_coset_rep(z)) out.push_back(z);
  }
  return out;
}

CoxeterTable finite_weyl_table(const RootDatum& d) {
  std::vector<AffineRoot> gens(d.simple().begin(), d.simple().begin() + d.rank());
  int positive = 0;
  for (int k = 0; k < d.num_roots(); ++k) positive += d.is_positive_root(k) ? 1 : 0;
  return CoxeterTable(d, gens, positive);
}

std::vector<WeylElement> omega_bar_lambda(const LambdaGeometry& geom) {
  const RootDatum& d = geom.datum();
  if (geom.lambda().tau(d).first != 0)
    throw std::invalid_argument("omega_bar_lambda: lambda must lie in V-bar'_0");
  CoxeterTable wbar = finite_weyl_table(d);
  std::vector<WeylElement> out;
  for (int id = 0; id < wbar.size(); ++id) {
    const WeylElement& z = wbar.element(id);
    if (!(act(z, geom.lambda()) == geom.lambda())) continue;
    bool keeps = true;
    for (int b : geom.rbar_simple())
      if (sends_negative(d, z, {b, 0})) keeps = false;
    if (keeps) out.push_back(z);
  }
  return out;
}

RankOneBranch rank_one_branch(const RootDatum& d, const Lambda& lambda) {
  if (d.rank() != 1 || d.case_flag() != CaseFlag::B)
    throw std::invalid_argument("rank_one_branch: needs a rank-one datum in case B");
  auto [p_prime, q_prime] = lambda.tau(d);
  if (p_prime == 0) throw std::invalid_argument("rank_one_branch: needs tau != 0");
  std::int64_t p = lambda.num()[0];
  if (p == 0) throw std::invalid_argument("rank_one_branch: needs p != 0");
  RankOneBranch out;
  out.q_prime = q_prime;
  // (p/q) + (p'/q') m in Z, with everything over the common denominator den.
  std::int64_t den = lambda.den();
  std::int64_t step = lambda.num()[1];
  for (std::int64_t m = 1; m < q_prime; ++m) {
    if (pos_mod(p + m * step, den) == 0) {
      out.empty = false;
      out.m1 = m;
      break;
    }
  }
  if (!out.empty) out.m2 = q_prime - out.m1;
  return out;
}

}  // namespace klcells
