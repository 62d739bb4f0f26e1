#pragma once

#include <map>
#include <vector>

#include "klcells/root_datum.hpp"
#include "klcells/weyl.hpp"

namespace klcells {

/// The reflection subgroup of W generated by s_chi for the given roots,
/// which must form a simple system of it, enumerated up to a length bound.
/// Lengths are the Coxeter lengths in those generators; descents are read off
/// root signs. Ids are ordered by length, then by lexicographically smallest
/// reduced word, so id 0 is the identity.
class CoxeterTable {
 public:
  CoxeterTable(const RootDatum& d, std::vector<AffineRoot> generators, int bound);

  const RootDatum& datum() const { return *datum_; }
  int bound() const { return bound_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  const std::vector<AffineRoot>& generators() const { return generators_; }
  const WeylElement& generator_element(int s) const { return gen_elements_[s]; }

  const WeylElement& element(int id) const { return elements_[id]; }
  int length(int id) const { return lengths_[id]; }
  const std::vector<int>& word(int id) const { return words_[id]; }
  /// -1 if w is not in the group or is longer than the bound.
  int find(const WeylElement& w) const;

  /// id of s*w (resp. w*s), -1 beyond the bound.
  int left(int s, int id) const { return left_[id][s]; }
  int right(int id, int s) const { return right_[id][s]; }
  bool is_left_descent(int s, int id) const { return (left_desc_[id] >> s) & 1U; }
  bool is_right_descent(int id, int s) const { return (right_desc_[id] >> s) & 1U; }
  int first_left_descent(int id) const;
  int inverse(int id) const { return inverse_[id]; }
  /// id of a*b, or -1 when the product exceeds the bound.
  int multiply(int a, int b) const;
  /// Product of a generator word, -1 beyond the bound.
  int from_word(const std::vector<int>& word) const;

  /// Orders m(s,t) of s*t; 0 stands for infinity.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  /// True when no element of length bound has a non-descent, i.e. the whole
  /// (finite) group is present.
  bool complete() const { return complete_; }

 private:
  const RootDatum* datum_;
  std::vector<AffineRoot> generators_;
  std::vector<WeylElement> gen_elements_;
  int bound_;
  std::vector<WeylElement> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::map<WeylElement, int> index_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<unsigned> left_desc_, right_desc_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> coxeter_;
  bool complete_ = false;
};

/// Order of s_a s_b from the product of Cartan-type integers
/// <a, b'><b, a'>: 0,1,2,3 give 2,3,4,6; larger products give infinity (0).
int coxeter_order(std::int64_t cartan_product);

}  // namespace klcells
