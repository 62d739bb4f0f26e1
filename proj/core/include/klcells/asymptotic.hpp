#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "klcells/coxeter_table.hpp"
#include "klcells/hecke.hpp"
#include "klcells/iwahori_hecke.hpp"
#include "klcells/lambda_geometry.hpp"

namespace klcells {

/// Structure constants r^z_{x,y} of the KL basis of H(W_lambda) for x, y in
/// the support |.|_lambda <= N, computed in a table of bound 2N so that every
/// product is exact. The a-function and leading coefficients are read from
/// these products; restricting to a smaller support M <= N gives what a table
/// built for M would give.
class StructureTable {
 public:
  StructureTable(const LambdaGeometry& geom, int support_bound);

  const LambdaGeometry& geometry() const { return *geom_; }
  const CoxeterTable& table() const { return *table_; }
  const IwahoriHecke& hecke() const { return *hecke_; }
  int support_bound() const { return support_bound_; }
  /// Ids below this are exactly the elements with |w|_lambda <= M.
  int support_size(int m) const;
  int support_size() const { return support_size(support_bound_); }

  /// c_x c_y in the c-basis (all terms, including those outside the support).
  const HeckeVector& product(int x, int y) const;
  /// a(z) from products of elements of length <= m; z in the m-support.
  int a_value(int z, int m) const;
  int a_value(int z) const { return a_value(z, support_bound_); }
  /// Coefficient of v^-a(z) in r^z_{x,y}.
  std::int64_t leading(int x, int y, int z, int m) const;
  std::int64_t leading(int x, int y, int z) const { return leading(x, y, z, support_bound_); }

 private:
  const LambdaGeometry* geom_;
  int support_bound_;
  std::unique_ptr<CoxeterTable> table_;
  std::unique_ptr<IwahoriHecke> hecke_;
  std::vector<int> support_end_;
  /// a_[m][z] for m <= support_bound.
  std::vector<std::vector<int>> a_;
};

StructureTable structure_constants(const LambdaGeometry& geom, int support_bound);

struct AValue {
  int value = 0;
  bool stabilized = false;
};
/// a(w) at the table's bound, flagged stable when the bounds N-2, N-1, N agree.
AValue a_function(const StructureTable& table, const WeylElement& w);

/// Element of the J-ring: table id -> integer coefficient.
using JElement = std::map<int, std::int64_t>;

/// The ring H_lambda^oo truncated to the support: t_x t_y = sum rbar t_z, kept
/// for z in the support. D_lambda is found from the unit property.
class JRing {
 public:
  /// Throws TruncationError when no set of involutions acts as the unit on
  /// the inner half of the support.
  explicit JRing(const StructureTable& table);

  const StructureTable& table() const { return *table_; }
  const std::vector<int>& distinguished() const { return d_; }
  int support_size() const { return table_->support_size(); }

  const JElement& product(int x, int y) const { return products_[index(x, y)]; }
  JElement multiply(const JElement& a, const JElement& b) const;
  JElement basis(int w) const { return {{w, 1}}; }
  JElement unit() const;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(support_size()) + static_cast<std::size_t>(y);
  }

  const StructureTable* table_;
  std::vector<JElement> products_;
  std::vector<int> d_;
};

JRing j_ring(const StructureTable& table);

/// psi(c_w) = sum over z, d in D with a(z) = a(d) of r^z_{w,d} t_z, as an
/// element of A (x) J keyed by table id.
HeckeVector psi(const StructureTable& table, const JRing& jring, int w);
/// Product in A (x) J.
HeckeVector j_multiply(const JRing& jring, const HeckeVector& a, const HeckeVector& b);

/// Left, right and two-sided cells of a finite support. Members are indexed
/// by position; element[i] is an id in the relevant table (W_lambda table for
/// cells of W_lambda, W table for cells of W x o) and lambda[i] an orbit index.
/// Cell ids are ordered by (a-value, first member).
struct CellPartition {
  std::vector<int> element;
  std::vector<int> lambda;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<int> two_sided;
  /// Indexed by two-sided cell id.
  std::vector<int> a_value;
  /// a-value of each member.
  std::vector<int> member_a;
  bool stabilized = false;

  int size() const { return static_cast<int>(element.size()); }
  int num_left() const;
  int num_right() const;
  int num_two_sided() const { return static_cast<int>(a_value.size()); }
  std::vector<std::vector<int>> two_sided_members() const;
};

/// Closure of the t-basis relations on the m-support of the table.
CellPartition cell_closure(const StructureTable& table, int m);

/// Sorted a-values of the two-sided cells predicted for the Coxeter group of
/// W_lambda (products of trivial, finite dihedral, infinite dihedral and
/// affine rank-2 groups). Throws UnsupportedError for anything else.
std::vector<int> catalog_a_values(const std::vector<std::vector<int>>& coxeter_matrix);

/// Cells of W_lambda at support bound N. Flagged stable when the partitions at
/// N-2, N-1, N agree on the (N-2)-support and the cell a-values are those of
/// the catalog. An a-value outside the catalog throws InvariantViolation; a
/// cell count that only differs from it leaves the flag false.
CellPartition cells_of_W_lambda(const StructureTable& table);
CellPartition cells_of_W_lambda(const LambdaGeometry& geom, int bound);

/// Everything computed for W x o: per-point structure tables, the
/// constructive partition and the direct closure it was checked against.
struct OrbitCells {
  const RootDatum* datum = nullptr;
  std::vector<Lambda> orbit;
  int representative = 0;
  int bound = 0;
  std::unique_ptr<CoxeterTable> weyl;
  std::vector<std::unique_ptr<LambdaGeometry>> geometry;
  std::vector<std::unique_ptr<StructureTable>> tables;
  std::vector<CellPartition> w_lambda_cells;
  CellPartition cells;
  /// Orbits of [lambda, lambda] (representative point) on the two-sided cells
  /// of W_lambda; orbit id per cell, numbered like cells.two_sided.
  std::vector<int> cell_orbit;
};

/// Cells of W x o on the support |w| <= bound. Two-sided cells are built
/// from [lambda, lambda]-orbits on Cell(W_lambda) and compared with the
/// closure of the truncated t-table of H_o^oo; any difference throws
/// InvariantViolation.
OrbitCells cells_of_W_times_orbit(const RootDatum& d, const Lambda& lambda, int bound);

/// Closure partition of W x o from the factored product rule, on the same
/// support as OrbitCells::cells.
CellPartition orbit_cell_closure(const OrbitCells& oc);

/// c_{k0} c_{k1} computed in H_o and rewritten in the c-basis.
HeckeElement orbit_c_product(const OrbitHecke& h, const BasisKey& k0, const BasisKey& k1);
/// The same product from the structure constants of W_lambda1 via
/// R = r^{w2}_{z1^-1 w0 z1, w1} when lambda0 = z1(lambda1), and 0 otherwise.
HeckeElement orbit_c_product_factored(const OrbitHecke& h, const BasisKey& k0, const BasisKey& k1);

}  // namespace klcells
