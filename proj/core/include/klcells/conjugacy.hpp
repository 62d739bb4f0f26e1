#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klcells/asymptotic.hpp"
#include "klcells/coxeter_table.hpp"
#include "klcells/lambda_geometry.hpp"
#include "klcells/weyl.hpp"

namespace klcells {

/// A permutation of Pi_lambda (indices into geom.simple_system()).
using SimplePermutation = std::vector<int>;

/// The affine Weyl group W_lambda (case B) as a Coxeter system: its
/// translations up to a length bound, the subset S_0 and the groups A, A_0.
struct AffineAutomorphismData {
  /// Component of each simple reflection (by the Coxeter graph).
  std::vector<int> component;
  int num_components = 0;
  /// Translations of W_lambda found in the table, as ids.
  std::vector<int> translations;
  /// Flags on Pi_lambda.
  std::vector<bool> s0;
  /// Permutations of Pi_lambda preserving the Coxeter matrix.
  std::vector<SimplePermutation> automorphisms;
  std::vector<SimplePermutation> a0;
};

/// Graph components of a Coxeter matrix (m != 2 joins two generators).
std::vector<int> coxeter_components(const std::vector<std::vector<int>>& coxeter_matrix);

/// Finite Weyl group generated by the reflections in R-bar_lambda.
CoxeterTable finite_w_lambda(const LambdaGeometry& geom);

/// Ids of the nontrivial translations in a W_lambda table.
std::vector<int> translations_in(const CoxeterTable& w_lambda);

/// s in S_0 iff S - {s} and the translations generate W_lambda, tested per
/// component on linear parts. Throws std::invalid_argument unless W_lambda is
/// a nontrivial affine group.
std::vector<bool> s0_subset(const LambdaGeometry& geom);

std::vector<SimplePermutation> automorphism_group(const std::vector<std::vector<int>>& coxeter_matrix);
/// Component preserving, and on each S_0^u either the identity or without fixed points.
bool in_a0(const SimplePermutation& sigma, const std::vector<int>& component, const std::vector<bool>& s0);

/// Builds everything above; the table must be a table of W_lambda whose
/// translations span the translation lattice (TruncationError otherwise).
AffineAutomorphismData affine_automorphisms(const LambdaGeometry& geom, const CoxeterTable& w_lambda);

/// sigma applied to a table element by substituting letters of its word.
int apply_automorphism(const CoxeterTable& w_lambda, const SimplePermutation& sigma, int id);

/// w-bar in W-bar_lambda with sigma(t) = w t w^-1 on the table's
/// translations, if one exists. This is the class of w modulo translations.
std::optional<WeylElement> is_inner_on_translations(const LambdaGeometry& geom, const CoxeterTable& w_lambda,
                                                    const SimplePermutation& sigma);

/// The unique w in W-bar_lambda with w(h) = rho-hat(h) on Pi-hat_lambda.
/// rho must define an element of A_0 (std::invalid_argument otherwise); no or
/// several witnesses throw InvariantViolation.
WeylElement unique_wbar_for_rho(const LambdaGeometry& geom, const SimplePermutation& rho);

/// True when sigma maps every listed member of a two-sided cell into the same cell.
bool fixes_cells(const StructureTable& table, const CellPartition& cells, const SimplePermutation& sigma);

struct OmegaOrbits {
  /// Orbit id per two-sided cell of W_lambda, ordered like the cells.
  std::vector<int> omega_bar;
  std::vector<int> omega;
  /// Every element of Omega-bar preserves Pi_lambda.
  bool omega_bar_in_omega = true;
  bool coincide = true;
  int num_orbits() const;
};

/// Orbits of Omega-bar_lambda and of [lambda, lambda] (elements of w_table)
/// on the two-sided cells, both acting by conjugation.
OmegaOrbits omega_orbits_on_cells(const LambdaGeometry& geom, const StructureTable& table, const CellPartition& cells,
                                  const CoxeterTable& w_table);

struct CentralizerType {
  /// "empty", or component types joined by 'x', e.g. "A1xA1".
  std::string label;
  std::vector<std::string> component_types;
  /// Components of R-bar_lambda as in the geometry.
  std::vector<std::vector<int>> components;
};

/// Type of R-bar_lambda. In case B also checks that W_lambda has the Coxeter
/// matrix of the affine group of that type (InvariantViolation otherwise).
CentralizerType centralizer_type(const LambdaGeometry& geom);

struct UnipotentClass {
  std::string label;
  int dim = 0;
  bool special = true;
  /// Class index in each factor.
  std::vector<int> parts;
};

struct UnipotentClassTable {
  std::string type;
  std::vector<std::string> factors;
  std::vector<UnipotentClass> classes;
};

/// Classes for "empty", A1, A2, B2, G2 and products such as "A1xA1".
/// Throws UnsupportedError for other labels.
UnipotentClassTable unipotent_classes(const std::string& type);

/// Orbits of Omega-bar_lambda on the classes of a table built for
/// centralizer_type(geom).label; orbit ids ordered by first member.
std::vector<int> omega_action_on_classes(const LambdaGeometry& geom, const UnipotentClassTable& table);

struct ClassOrbit {
  std::vector<std::string> labels;
  int dim = 0;
  friend bool operator==(const ClassOrbit&, const ClassOrbit&) = default;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string type;
  CaseFlag case_flag = CaseFlag::A;
  std::vector<Lambda> orbit;
  int bound = 0;
  std::string centralizer;
  /// a-value of each two-sided cell of W x o.
  std::vector<int> cell_a;
  std::vector<ClassOrbit> class_orbits;
  std::vector<Check> checks;
  /// Several cells share an a-value, so only multisets were compared.
  bool ambiguous = false;
  /// cell id -> class orbit id when the matching is forced by a-values.
  std::vector<int> matching;

  bool pass() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Cells of W x o against Omega-bar-orbits of (special, in case A)
/// unipotent classes of Z(lambda)^0. lambda must have tau = 0.
VerificationReport verify_theorem(const RootDatum& d, const Lambda& lambda, int bound);

}  // namespace klcells
