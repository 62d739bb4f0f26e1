#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "klcells/coxeter_table.hpp"
#include "klcells/iwahori_hecke.hpp"
#include "klcells/lambda.hpp"
#include "klcells/lambda_geometry.hpp"
#include "klcells/laurent.hpp"
#include "klcells/root_datum.hpp"
#include "klcells/weyl.hpp"

namespace klcells {

/// Index of the basis element T~_w 1_lambda: w is an id in the W table of the
/// algebra, lambda an index into its sorted orbit.
struct BasisKey {
  int w = 0;
  int lambda = 0;

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Finite sum of basis elements with Laurent coefficients. The same container
/// is used for T~-basis and c-basis expansions; functions say which.
using HeckeElement = std::map<BasisKey, LaurentPoly>;

void add_term(HeckeElement& a, const BasisKey& k, const LaurentPoly& coeff);
void add_into(HeckeElement& a, const HeckeElement& b, const LaurentPoly& coeff = LaurentPoly(1));

/// The algebra H_o for the orbit of a point, truncated to the span of
/// T~_w 1_lambda with |w| <= bound. T~_w = v^-|w| T_w.
///
/// Products that would leave the span throw TruncationError. Tables for the
/// groups W_lambda are built on first use; an instance is not safe for
/// concurrent use. The datum must outlive the algebra.
class OrbitHecke {
 public:
  OrbitHecke(const RootDatum& d, const Lambda& lambda, int bound);

  const RootDatum& datum() const { return *datum_; }
  int bound() const { return bound_; }
  const std::vector<Lambda>& orbit() const { return orbit_; }
  int orbit_size() const { return static_cast<int>(orbit_.size()); }
  /// Throws std::invalid_argument if lambda is not in the orbit.
  int orbit_index(const Lambda& lambda) const;
  /// W, generated by the simple reflections, up to the bound.
  const CoxeterTable& weyl() const { return weyl_; }

  const LambdaGeometry& geometry(int lam) const;
  /// W_lambda up to the bound (its lengths are |.|_lambda <= |.|).
  const CoxeterTable& w_lambda_table(int lam) const;
  /// Abstract Hecke algebra of (W_lambda, |.|_lambda).
  const IwahoriHecke& abstract_hecke(int lam) const;

  /// s_i in W_lambda, i.e. (h_i, lambda) = 0.
  bool simple_in_W_lambda(int i, int lam) const;

  /// Throws TruncationError if |w| exceeds the bound.
  BasisKey key(const WeylElement& w, const Lambda& lambda) const;
  const WeylElement& element(const BasisKey& k) const { return weyl_.element(k.w); }
  const Lambda& lambda(const BasisKey& k) const { return orbit_[static_cast<std::size_t>(k.lambda)]; }

  HeckeElement basis(int w, int lam) const { return {{{w, lam}, LaurentPoly(1)}}; }
  HeckeElement idempotent(int lam) const { return basis(0, lam); }
  /// T_1 = sum of all 1_lambda.
  HeckeElement unit() const;
  /// T~_w = sum over lambda of T~_w 1_lambda.
  HeckeElement T(int w) const;

  /// T~_s * a.
  HeckeElement left_mul_simple(int s, const HeckeElement& a) const;
  /// T~_s^-1 * a, with T~_s^-1 = T~_s + (v^-1 - v) sum_{s in W_mu} 1_mu.
  HeckeElement left_mul_simple_inverse(int s, const HeckeElement& a) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  /// The ring involution with T~_w -> T~_{w^-1}^-1, v -> v^-1, 1_lambda fixed.
  HeckeElement bar(const HeckeElement& a) const;

  /// w = z * w_tilde with w_tilde in W_lambda and z minimal in z W_lambda.
  CosetFactorization factorize(const BasisKey& k) const;

  /// theta_lambda: abstract element of H(W_lambda) (keys are ids in
  /// w_lambda_table) to sum p_y T~_y 1_lambda.
  HeckeElement vartheta(int lam, const HeckeVector& abstract) const;
  /// c_{w,lambda} in the T~-basis.
  HeckeElement kl_basis_element(const BasisKey& k) const;
  /// Rewrites a T~-basis expansion in the c-basis (keys then index c_{w,lambda}).
  HeckeElement to_c_basis(const HeckeElement& a) const;

  /// iota_z: H_lambda -> H_{z(lambda)}, T~_w 1_lambda -> T~_{zwz^-1} 1_{z(lambda)}.
  /// Throws std::invalid_argument unless z is minimal in z W_lambda and a is
  /// supported on W_lambda x {lambda}.
  HeckeElement iota(const WeylElement& z, int lam, const HeckeElement& a) const;

 private:
  struct PerLambda {
    std::unique_ptr<LambdaGeometry> geometry;
    std::unique_ptr<CoxeterTable> table;
    std::unique_ptr<IwahoriHecke> hecke;
  };

  PerLambda& slot(int lam) const;
  void require_key(int w, const char* what) const;

  const RootDatum* datum_;
  int bound_;
  std::vector<Lambda> orbit_;
  CoxeterTable weyl_;
  mutable std::vector<PerLambda> per_lambda_;
  mutable std::map<BasisKey, HeckeElement> kl_memo_;
};

/// (lambda', z, lambda) with z in [lambda', lambda]; orbit indices.
struct XiTriple {
  int target = 0;
  WeylElement z;
  int source = 0;
};

/// Basis element (xi, w) of the block algebra: T~_w 1_source placed in the
/// summand indexed by the triple xi; w is an id in the W table and lies in
/// W_source.
struct BlockKey {
  int xi = 0;
  int w = 0;

  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};
using BlockElement = std::map<BlockKey, LaurentPoly>;

/// Direct sum over triples of copies of H_lambda, with the groupoid product,
/// and the map theta(xi) = T~_z xi into H_o. Triples are those with |z| within
/// the bound of the underlying algebra.
class BlockAlgebra {
 public:
  explicit BlockAlgebra(const OrbitHecke& h);

  const OrbitHecke& hecke() const { return *hecke_; }
  const std::vector<XiTriple>& triples() const { return triples_; }
  /// -1 when absent (z beyond the bound or not in [target, source]).
  int find_triple(int target, const WeylElement& z, int source) const;

  BlockElement basis(int xi, int w) const { return {{{xi, w}, LaurentPoly(1)}}; }
  /// Zero unless the target of the right factor is the source of the left one.
  BlockElement multiply(const BlockElement& a, const BlockElement& b) const;
  HeckeElement theta(const BlockElement& a) const;
  /// Inverse of theta on the truncated span.
  BlockElement theta_inverse(const HeckeElement& a) const;

 private:
  const OrbitHecke* hecke_;
  std::vector<XiTriple> triples_;
  std::map<std::tuple<int, WeylElement, int>, int> index_;
};

BlockAlgebra assemble_block_algebra(const OrbitHecke& h);

}  // namespace klcells
