#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klcells/coxeter_table.hpp"
#include "klcells/lambda.hpp"
#include "klcells/root_datum.hpp"
#include "klcells/weyl.hpp"

namespace klcells {

/// R_lambda, its simple system Pi_lambda and the Coxeter data of W_lambda.
/// Pi_lambda is found as the set of chi in R_lambda^+ whose reflection has
/// lambda-length 1, searched over c-levels up to a bound large enough for the
/// catalog; the size is checked against rank(R-bar_lambda) (+ #components in
/// case B).
class LambdaGeometry {
 public:
  LambdaGeometry(const RootDatum& d, const Lambda& lambda);

  const RootDatum& datum() const { return *datum_; }
  const Lambda& lambda() const { return lambda_; }

  bool in_R_lambda(const AffineRoot& chi) const { return lambda_.pairs_to_zero(*datum_, chi); }

  /// Pi_lambda ordered by (level, root index).
  const std::vector<AffineRoot>& simple_system() const { return simple_; }
  /// Finite parts of Pi_lambda (the map chi -> chi-hat), as root indices.
  std::vector<int> hat_simple_system() const;
  /// 0 encodes infinity.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }

  /// Root indices of R-bar_lambda, its positive simple roots, and the
  /// partition of those simple roots into irreducible components.
  const std::vector<int>& rbar_lambda() const { return rbar_; }
  const std::vector<int>& rbar_simple() const { return rbar_simple_; }
  const std::vector<std::vector<int>>& rbar_components() const { return rbar_components_; }
  /// Component (index into rbar_components) of each element of Pi_lambda.
  int component_of_simple(int k) const { return simple_component_[k]; }

  /// #{chi in R_lambda^+ : w(chi) in R^-}; defined for every w.
  int inversions_lambda(const WeylElement& w) const;
  bool in_W_lambda(const WeylElement& w) const;
  /// z(Pi_lambda) inside R^+.
  bool is_min_coset_rep(const WeylElement& z) const;

  /// Truncated table of W_lambda with generators Pi_lambda.
  CoxeterTable table(int bound) const { return CoxeterTable(*datum_, simple_, bound); }

 private:
  const RootDatum* datum_;
  Lambda lambda_;
  std::vector<AffineRoot> simple_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<int> rbar_;
  std::vector<int> rbar_simple_;
  std::vector<std::vector<int>> rbar_components_;
  std::vector<int> simple_component_;
};

/// Closure of {lambda} under the simple reflections; sorted.
std::vector<Lambda> orbit(const RootDatum& d, const Lambda& lambda);

/// Positive roots chi with (chi, lambda) = 0 and |level| <= level_bound.
std::vector<AffineRoot> R_lambda_positive(const LambdaGeometry& geom, std::int64_t level_bound);

LambdaGeometry simple_system(const RootDatum& d, const Lambda& lambda);

/// |w|_lambda; throws std::invalid_argument if w is not in W_lambda.
int length_lambda(const LambdaGeometry& geom, const WeylElement& w);

struct CosetFactorization {
  WeylElement z;        // minimal in z W_lambda
  WeylElement w_tilde;  // in W_lambda
};
/// w = z * w_tilde, by right-multiplying with reflections in Pi_lambda while
/// some simple root is sent to a negative root.
CosetFactorization min_coset_factorize(const LambdaGeometry& geom, const WeylElement& w);

/// [lambda', lambda] = {z : z(lambda) = lambda', z minimal in z W_lambda},
/// restricted to the elements of the table (|z| <= bound).
std::vector<WeylElement> groupoid_component(const CoxeterTable& w_table, const LambdaGeometry& geom,
                                            const Lambda& lambda_prime);

/// Full finite Weyl group table (all of W-bar).
CoxeterTable finite_weyl_table(const RootDatum& d);

/// {z in W-bar : z(lambda) = lambda, z(R-bar_lambda^+) = R-bar_lambda^+}.
/// Requires lambda in V-bar'_0 in case B.
std::vector<WeylElement> omega_bar_lambda(const LambdaGeometry& geom);

/// The explicit rank-one description for tau != 0: positive roots
/// h_1 + m c (m = m1 mod q') and -h_1 + m c (m = m2 mod q').
struct RankOneBranch {
  bool empty = true;  // q' not a multiple of q
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t q_prime = 1;
};
/// Requires rank 1, case B and lambda = (p/q) h'_1/2 + (p'/q') c' with p != 0, 0 < p' < q'.
RankOneBranch rank_one_branch(const RootDatum& d, const Lambda& lambda);

}  // namespace klcells
