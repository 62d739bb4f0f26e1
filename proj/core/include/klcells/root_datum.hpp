#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klcells/lattice.hpp"

namespace klcells {

enum class CaseFlag { A, B };

std::string to_string(CaseFlag c);
CaseFlag parse_case(const std::string& s);

/// chi = h + level*c, h given by its index in RootDatum::roots.
/// level is always a multiple of delta(h); in case A it is 0.
struct AffineRoot {
  int root = 0;
  std::int64_t level = 0;

  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

enum class Side { OnV, OnVprime };

/// Coordinates. V-bar uses the simple roots h_i as basis, V-bar' the dual
/// basis, so the pairing matrix is the identity and h'_j is column j of the
/// Cartan matrix A_ij = <h_i, h'_j>. Case B appends c (resp. c') as the last
/// coordinate, with <c, c'> = 1.
class RootDatum {
 public:
  static const std::vector<std::string>& supported_types();

  const std::string& type() const { return type_; }
  CaseFlag case_flag() const { return case_; }
  int rank() const { return rank_; }
  /// rank, plus one in case B.
  int dim() const { return dim_; }
  /// Small integer identifying (type, case); elements carry it to catch mixing.
  int tag() const { return tag_; }

  std::int64_t cartan(int i, int j) const { return at(cartan_, i, j); }
  const Mat& cartan_matrix() const { return cartan_; }
  Mat pairing_matrix() const { return identity_matrix(dim_); }

  const std::vector<Vec>& roots() const { return roots_; }
  const std::vector<Vec>& coroots() const { return coroots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int root_index(const Vec& h) const;
  int negative(int root) const { return negative_[static_cast<std::size_t>(root)]; }
  bool is_positive_root(int root) const { return positive_[static_cast<std::size_t>(root)]; }
  /// Height in the simple-root basis.
  std::int64_t height(int root) const;
  int delta(int root) const { return delta_[static_cast<std::size_t>(root)]; }
  /// Component of the Dynkin diagram containing the root.
  int component_of_root(int root) const { return root_component_[static_cast<std::size_t>(root)]; }

  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Root index of beta_e for each component e; -beta'_e is the highest coroot.
  const std::vector<int>& beta() const { return beta_; }

  /// The simple affine roots h_i, i in I (rank entries, then one per
  /// component in case B).
  const std::vector<AffineRoot>& simple() const { return simple_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  std::string simple_label(int i) const;

  Vec vector_of(const AffineRoot& chi) const;
  Vec coroot_of(const AffineRoot& chi) const;
  bool is_positive(const AffineRoot& chi) const;
  AffineRoot negate(const AffineRoot& chi) const;
  /// Inverse of vector_of; nullopt if v is not in R.
  std::optional<AffineRoot> classify(const Vec& v) const;

  bool operator==(const RootDatum& o) const { return tag_ == o.tag_; }

 private:
  friend RootDatum build_root_datum(const std::string&, CaseFlag);

  std::string type_;
  CaseFlag case_ = CaseFlag::A;
  int rank_ = 0;
  int dim_ = 0;
  int tag_ = 0;
  Mat cartan_{};
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  std::vector<int> negative_;
  std::vector<bool> positive_;
  std::vector<int> delta_;
  std::vector<int> root_component_;
  std::vector<std::vector<int>> components_;
  std::vector<int> beta_;
  std::vector<AffineRoot> simple_;
  std::map<Vec, int> index_;
};

/// Accepts A1, A1xA1 (also A1×A1), A2, B2, G2.
RootDatum build_root_datum(const std::string& type, CaseFlag case_flag);

/// Throws std::invalid_argument when h is not a root.
int delta_of(const RootDatum& datum, const Vec& h);

/// Matrix of s_i; on V: y -> y - <y,h'_i> h_i, on V': x -> x - <h_i,x> h'_i.
Mat simple_reflection(const RootDatum& datum, int i, Side side);
/// Same formulas for an arbitrary affine root.
Mat reflection_matrix(const RootDatum& datum, const AffineRoot& chi, Side side);

struct TaggedRoot {
  AffineRoot root;
  bool positive;
};

/// All h + m*delta_h*c with |m*delta_h| <= bound (R-bar in case A).
std::vector<TaggedRoot> enumerate_R(const RootDatum& datum, std::int64_t level_bound);

}  // namespace klcells
