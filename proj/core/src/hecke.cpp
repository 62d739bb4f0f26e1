#include "klcells/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "klcells/errors.hpp"

namespace klcells {

namespace {

const LaurentPoly kVminusVinv = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);

}  // namespace

void add_term(HeckeElement& a, const BasisKey& k, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = a.find(k);
  if (it == a.end()) {
    a.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) a.erase(it);
}

void add_into(HeckeElement& a, const HeckeElement& b, const LaurentPoly& coeff) {
  for (const auto& [k, c] : b) add_term(a, k, c * coeff);
}

OrbitHecke::OrbitHecke(const RootDatum& d, const Lambda& lambda, int bound)
    : datum_(&d), bound_(bound), orbit_(klcells::orbit(d, lambda)), weyl_(d, d.simple(), bound) {
  per_lambda_.resize(orbit_.size());
}

int OrbitHecke::orbit_index(const Lambda& lambda) const {
  auto it = std::lower_bound(orbit_.begin(), orbit_.end(), lambda);
  if (it == orbit_.end() || !(*it == lambda))
    throw std::invalid_argument("point " + lambda.to_string() + " is not in the orbit");
  return static_cast<int>(it - orbit_.begin());
}

OrbitHecke::PerLambda& OrbitHecke::slot(int lam) const {
  PerLambda& p = per_lambda_.at(static_cast<std::size_t>(lam));
  if (!p.geometry) {
    p.geometry = std::make_unique<LambdaGeometry>(*datum_, orbit_[static_cast<std::size_t>(lam)]);
    p.table = std::make_unique<CoxeterTable>(p.geometry->table(bound_));
    p.hecke = std::make_unique<IwahoriHecke>(*p.table);
  }
  return p;
}

const LambdaGeometry& OrbitHecke::geometry(int lam) const { return *slot(lam).geometry; }
const CoxeterTable& OrbitHecke::w_lambda_table(int lam) const { return *slot(lam).table; }
const IwahoriHecke& OrbitHecke::abstract_hecke(int lam) const { return *slot(lam).hecke; }

bool OrbitHecke::simple_in_W_lambda(int i, int lam) const {
  return orbit_[static_cast<std::size_t>(lam)].pairs_to_zero(*datum_, datum_->simple()[static_cast<std::size_t>(i)]);
}

void OrbitHecke::require_key(int w, const char* what) const {
  if (w < 0) throw TruncationError(std::string(what) + " needs an element of W beyond the length bound", bound_);
}

BasisKey OrbitHecke::key(const WeylElement& w, const Lambda& lambda) const {
  int id = weyl_.find(w);
  require_key(id, "basis lookup");
  return {id, orbit_index(lambda)};
}

HeckeElement OrbitHecke::unit() const {
  HeckeElement out;
  for (int lam = 0; lam < orbit_size(); ++lam) out.emplace(BasisKey{0, lam}, LaurentPoly(1));
  return out;
}

HeckeElement OrbitHecke::T(int w) const {
  HeckeElement out;
  for (int lam = 0; lam < orbit_size(); ++lam) out.emplace(BasisKey{w, lam}, LaurentPoly(1));
  return out;
}

HeckeElement OrbitHecke::left_mul_simple(int s, const HeckeElement& a) const {
  HeckeElement out;
  for (const auto& [k, c] : a) {
    int sy = weyl_.left(s, k.w);
    require_key(sy, "left multiplication");
    add_term(out, {sy, k.lambda}, c);
    if (weyl_.is_left_descent(s, k.w)) {
      int target = orbit_index(act(weyl_.element(k.w), lambda(k)));
      if (simple_in_W_lambda(s, target)) add_term(out, k, c * kVminusVinv);
    }
  }
  return out;
}

HeckeElement OrbitHecke::left_mul_simple_inverse(int s, const HeckeElement& a) const {
  HeckeElement out = left_mul_simple(s, a);
  for (const auto& [k, c] : a) {
    int target = orbit_index(act(weyl_.element(k.w), lambda(k)));
    if (simple_in_W_lambda(s, target)) add_term(out, k, -(c * kVminusVinv));
  }
  return out;
}

HeckeElement OrbitHecke::multiply(const HeckeElement& a, const HeckeElement& b) const {
  // Group the right factor by the idempotent on its left: T~_y 1_mu = 1_{y(mu)} T~_y.
  std::map<int, HeckeElement> by_target;
  for (const auto& [k, c] : b) {
    int target = orbit_index(act(weyl_.element(k.w), lambda(k)));
    by_target[target].emplace(k, c);
  }
  HeckeElement out;
  for (const auto& [k, c] : a) {
    auto it = by_target.find(k.lambda);
    if (it == by_target.end()) continue;
    HeckeElement cur = it->second;
    const auto& word = weyl_.word(k.w);
    for (auto s = word.rbegin(); s != word.rend(); ++s) cur = left_mul_simple(*s, cur);
    add_into(out, cur, c);
  }
  return out;
}

HeckeElement OrbitHecke::bar(const HeckeElement& a) const {
  HeckeElement out;
  for (const auto& [k, c] : a) {
    // T~_{w^-1}^-1 = T~_{s_1}^-1 ... T~_{s_r}^-1 for w = s_1 ... s_r reduced.
    HeckeElement cur = idempotent(k.lambda);
    const auto& word = weyl_.word(k.w);
    for (auto s = word.rbegin(); s != word.rend(); ++s) cur = left_mul_simple_inverse(*s, cur);
    add_into(out, cur, c.bar());
  }
  return out;
}

CosetFactorization OrbitHecke::factorize(const BasisKey& k) const {
  return min_coset_factorize(geometry(k.lambda), element(k));
}

HeckeElement OrbitHecke::vartheta(int lam, const HeckeVector& abstract) const {
  const CoxeterTable& wl = w_lambda_table(lam);
  HeckeElement out;
  for (const auto& [y, p] : abstract) {
    int id = weyl_.find(wl.element(y));
    require_key(id, "vartheta");
    add_term(out, {id, lam}, p);
  }
  return out;
}

HeckeElement OrbitHecke::kl_basis_element(const BasisKey& k) const {
  if (auto it = kl_memo_.find(k); it != kl_memo_.end()) return it->second;
  CosetFactorization f = factorize(k);
  int id = w_lambda_table(k.lambda).find(f.w_tilde);
  if (id < 0) throw TruncationError("W_lambda table does not reach the element", bound_);
  HeckeElement inner = vartheta(k.lambda, abstract_hecke(k.lambda).c_in_T(id));
  int z = weyl_.find(f.z);
  require_key(z, "KL element");
  HeckeElement out = multiply(basis(z, k.lambda), inner);
  kl_memo_.emplace(k, out);
  return out;
}

HeckeElement OrbitHecke::to_c_basis(const HeckeElement& a) const {
  HeckeElement rest = a, out;
  while (!rest.empty()) {
    // Ids grow with length and c_{w,lambda} - T~_w 1_lambda only involves shorter elements.
    auto [k, c] = *rest.rbegin();
    add_term(out, k, c);
    add_into(rest, kl_basis_element(k), -c);
  }
  return out;
}

HeckeElement OrbitHecke::iota(const WeylElement& z, int lam, const HeckeElement& a) const {
  const LambdaGeometry& g = geometry(lam);
  if (!g.is_min_coset_rep(z)) throw std::invalid_argument("iota: z is not minimal in z W_lambda");
  int target = orbit_index(act(z, orbit_[static_cast<std::size_t>(lam)]));
  WeylElement zinv = inverse(z);
  HeckeElement out;
  for (const auto& [k, c] : a) {
    if (k.lambda != lam || !g.in_W_lambda(element(k)))
      throw std::invalid_argument("iota: argument is not in H_lambda");
    int id = weyl_.find(compose(z, compose(element(k), zinv)));
    require_key(id, "iota");
    add_term(out, {id, target}, c);
  }
  return out;
}

BlockAlgebra::BlockAlgebra(const OrbitHecke& h) : hecke_(&h) {
  const CoxeterTable& w = h.weyl();
  for (int lam = 0; lam < h.orbit_size(); ++lam) {
    const LambdaGeometry& g = h.geometry(lam);
    for (int id = 0; id < w.size(); ++id) {
      if (!g.is_min_coset_rep(w.element(id))) continue;
      int target = h.orbit_index(act(w.element(id), g.lambda()));
      index_.emplace(std::make_tuple(target, w.element(id), lam), static_cast<int>(triples_.size()));
      triples_.push_back({target, w.element(id), lam});
    }
  }
}

int BlockAlgebra::find_triple(int target, const WeylElement& z, int source) const {
  auto it = index_.find(std::make_tuple(target, z, source));
  return it == index_.end() ? -1 : it->second;
}

BlockElement BlockAlgebra::multiply(const BlockElement& a, const BlockElement& b) const {
  const OrbitHecke& h = *hecke_;
  const CoxeterTable& w = h.weyl();
  BlockElement out;
  for (const auto& [ka, ca] : a) {
    const XiTriple& t1 = triples_[static_cast<std::size_t>(ka.xi)];
    for (const auto& [kb, cb] : b) {
      const XiTriple& t2 = triples_[static_cast<std::size_t>(kb.xi)];
      if (t2.target != t1.source) continue;
      // iota_{z2}^-1 moves the left factor into H_{source of t2}.
      WeylElement x = compose(inverse(t2.z), compose(w.element(ka.w), t2.z));
      int xid = w.find(x);
      if (xid < 0) throw TruncationError("block product needs a conjugate beyond the bound", h.bound());
      HeckeElement prod = h.multiply(h.basis(xid, t2.source), h.basis(kb.w, t2.source));
      int xi = find_triple(t1.target, compose(t1.z, t2.z), t2.source);
      if (xi < 0) throw TruncationError("block product needs a groupoid element beyond the bound", h.bound());
      for (const auto& [k, c] : prod) {
        BlockKey key{xi, k.w};
        LaurentPoly coeff = c * ca * cb;
        auto it = out.find(key);
        if (it == out.end()) {
          if (!coeff.is_zero()) out.emplace(key, coeff);
        } else {
          it->second += coeff;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

HeckeElement BlockAlgebra::theta(const BlockElement& a) const {
  const OrbitHecke& h = *hecke_;
  HeckeElement out;
  for (const auto& [k, c] : a) {
    const XiTriple& t = triples_[static_cast<std::size_t>(k.xi)];
    int z = h.weyl().find(t.z);
    add_into(out, h.multiply(h.basis(z, t.source), h.basis(k.w, t.source)), c);
  }
  return out;
}

BlockElement BlockAlgebra::theta_inverse(const HeckeElement& a) const {
  const OrbitHecke& h = *hecke_;
  BlockElement out;
  for (const auto& [k, c] : a) {
    CosetFactorization f = h.factorize(k);
    int target = h.orbit_index(act(f.z, h.lambda(k)));
    int xi = find_triple(target, f.z, k.lambda);
    int wid = h.weyl().find(f.w_tilde);
    if (xi < 0 || wid < 0) throw TruncationError("theta_inverse: factor beyond the bound", h.bound());
    out[{xi, wid}] += c;
  }
  return out;
}

BlockAlgebra assemble_block_algebra(const OrbitHecke& h) { return BlockAlgebra(h); }

}  // namespace klcells
