#include <gtest/gtest.h>

#include "suites.hpp"

using namespace klcells;

namespace {

std::multiset<int> a_values(const CellPartition& c) { return {c.a_value.begin(), c.a_value.end()}; }

/// Partition induced by a labelling, as a set of member sets.
std::set<std::set<int>> blocks(const std::vector<int>& label, int n) {
  std::map<int, std::set<int>> by;
  for (int i = 0; i < n; ++i) by[label[static_cast<std::size_t>(i)]].insert(i);
  std::set<std::set<int>> out;
  for (auto& [k, s] : by) out.insert(s);
  return out;
}

/// Dihedral left cells: the identity, the longest element, and the other
/// elements grouped by their last letter.
std::set<std::set<int>> dihedral_left_cells(const CoxeterTable& t, int n) {
  std::map<int, std::set<int>> by;
  for (int i = 0; i < n; ++i) {
    const auto& w = t.word(i);
    int key = w.empty() ? -1 : (t.complete() && t.length(i) == t.length(t.size() - 1) ? -2 : w.back());
    by[key].insert(i);
  }
  std::set<std::set<int>> out;
  for (auto& [k, s] : by) out.insert(s);
  return out;
}

void expect_partition_axioms(const CellPartition& c, const CoxeterTable& t) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(c.member_a[i], c.a_value[c.two_sided[i]]);
    for (int j = 0; j < n; ++j) {
      if (c.left[i] == c.left[j] || c.right[i] == c.right[j]) EXPECT_EQ(c.two_sided[i], c.two_sided[j]);
      int ii = t.inverse(c.element[i]), jj = t.inverse(c.element[j]);
      if (ii < n && jj < n) EXPECT_EQ(c.left[i] == c.left[j], c.right[ii] == c.right[jj]);
    }
  }
  for (int k = 1; k < c.num_two_sided(); ++k) EXPECT_LE(c.a_value[k - 1], c.a_value[k]);
}

}  // namespace

TEST(Cells, AffineA1StableWithTwoCells) {
  RootDatum d = build_root_datum("A1", CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  for (int n : {6, 8, 10}) {
    StructureTable st(g, n);
    CellPartition c = cells_of_W_lambda(st);
    EXPECT_TRUE(c.stabilized) << n;
    EXPECT_EQ(c.a_value, (std::vector<int>{0, 1}));
    EXPECT_EQ(c.two_sided_members()[0], std::vector<int>{0});
    EXPECT_EQ(blocks(c.left, c.size()), dihedral_left_cells(st.table(), c.size()));
    expect_partition_axioms(c, st.table());
  }
}

TEST(Cells, FiniteGroupsMatchDihedralCatalog) {
  std::map<std::string, int> order{{"A1xA1", 2}, {"A2", 3}, {"B2", 4}, {"G2", 6}};
  for (const auto& [type, m] : order) {
    RootDatum d = build_root_datum(type, CaseFlag::A);
    LambdaGeometry g(d, Lambda::zero(d));
    StructureTable st(g, 2 * m);
    CellPartition c = cells_of_W_lambda(st);
    ASSERT_TRUE(st.table().complete());
    ASSERT_EQ(c.size(), 2 * m);
    auto expected = oracle::dihedral_cell_a_values(m);
    EXPECT_EQ(c.a_value, expected) << type;
    EXPECT_TRUE(c.stabilized);
    if (m > 2) EXPECT_EQ(blocks(c.left, c.size()), dihedral_left_cells(st.table(), c.size())) << type;
    else EXPECT_EQ(c.num_left(), 4);
    expect_partition_axioms(c, st.table());
  }
}

TEST(Cells, TypeAValuesAreSpringerFibreDimensions) {
  // Two-sided cells of the finite and affine Weyl groups of type A2 match
  // partitions of 3 with a = n(partition).
  std::multiset<int> expected;
  for (const auto& p : oracle::partitions(3)) expected.insert(oracle::n_of_partition(p));
  for (CaseFlag flag : {CaseFlag::A, CaseFlag::B}) {
    RootDatum d = build_root_datum("A2", flag);
    LambdaGeometry g(d, Lambda::zero(d));
    CellPartition c = cells_of_W_lambda(g, 8);
    EXPECT_TRUE(c.stabilized);
    EXPECT_EQ(a_values(c), expected);
  }
}

TEST(Cells, AffineA2HasTenLeftCells) {
  // 3!/(prod of factorials of the dual partition parts) left cells per cell: 1 + 3 + 6.
  RootDatum d = build_root_datum("A2", CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  StructureTable st(g, 8);
  CellPartition c = cells_of_W_lambda(st);
  EXPECT_EQ(c.num_left(), 10);
  std::map<int, std::set<int>> per_cell;
  for (int i = 0; i < c.size(); ++i) per_cell[c.a_value[c.two_sided[i]]].insert(c.left[i]);
  EXPECT_EQ(per_cell[0].size(), 1u);
  EXPECT_EQ(per_cell[1].size(), 3u);
  EXPECT_EQ(per_cell[3].size(), 6u);
  expect_partition_axioms(c, st.table());
}

TEST(Cells, AffineRankTwoValues) {
  std::map<std::string, std::pair<int, std::vector<int>>> expected{
      {"B2", {10, {0, 1, 2, 4}}},
      {"G2", {8, {0, 1, 2, 3, 6}}},
  };
  for (const auto& [type, e] : expected) {
    RootDatum d = build_root_datum(type, CaseFlag::B);
    LambdaGeometry g(d, Lambda::zero(d));
    StructureTable st(g, e.first);
    CellPartition c = cells_of_W_lambda(st);
    EXPECT_TRUE(c.stabilized) << type;
    EXPECT_EQ(c.a_value, e.second) << type;
    expect_partition_axioms(c, st.table());
  }
}

TEST(Cells, TrivialGroupIsOneCell) {
  RootDatum d = build_root_datum("A2", CaseFlag::A);
  LambdaGeometry g(d, Lambda::parse(d, {"1/3", "1/3"}));
  CellPartition c = cells_of_W_lambda(g, 4);
  EXPECT_EQ(c.size(), 1);
  EXPECT_EQ(c.a_value, std::vector<int>{0});
  EXPECT_TRUE(c.stabilized);
}

TEST(Cells, ClosureRestrictsToSmallerSupports) {
  RootDatum d = build_root_datum("A2", CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  StructureTable big(g, 8);
  StructureTable small(g, 6);
  CellPartition a = cell_closure(big, 6), b = cell_closure(small, 6);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(blocks(a.two_sided, a.size()), blocks(b.two_sided, b.size()));
  EXPECT_EQ(blocks(a.left, a.size()), blocks(b.left, b.size()));
  for (int z = 0; z < a.size(); ++z) EXPECT_EQ(big.a_value(z, 6), small.a_value(z, 6));
}

TEST(Cells, AValueOfElementIsStableAtTheTop) {
  RootDatum d = build_root_datum("B2", CaseFlag::B);
  LambdaGeometry g(d, Lambda::zero(d));
  StructureTable st(g, 10);
  AValue a0 = a_function(st, WeylElement::identity(d));
  EXPECT_EQ(a0.value, 0);
  EXPECT_TRUE(a0.stabilized);
  AValue a1 = a_function(st, WeylElement::simple(d, 0));
  EXPECT_EQ(a1.value, 1);
  EXPECT_TRUE(a1.stabilized);
}

TEST(Catalog, KnownGroups) {
  EXPECT_EQ(catalog_a_values({}), std::vector<int>{0});
  EXPECT_EQ(catalog_a_values({{1, 0}, {0, 1}}), (std::vector<int>{0, 1}));
  EXPECT_EQ(catalog_a_values({{1, 2}, {2, 1}}), (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(catalog_a_values({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(catalog_a_values({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}), (std::vector<int>{0, 1, 2, 4}));
  EXPECT_EQ(catalog_a_values({{1, 6, 2}, {6, 1, 3}, {2, 3, 1}}), (std::vector<int>{0, 1, 2, 3, 6}));
  EXPECT_THROW(catalog_a_values({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}), UnsupportedError);
}

TEST(OrbitCells, CountsForSmallOrbits) {
  struct Case {
    std::string type;
    CaseFlag flag;
    std::vector<std::string> lambda;
    int bound;
    std::multiset<int> a;
  };
  for (const Case& c : std::vector<Case>{
           {"A2", CaseFlag::A, {"0", "0"}, 6, {0, 1, 3}},
           {"A2", CaseFlag::A, {"1/2", "0"}, 6, {0, 1}},
           {"A2", CaseFlag::A, {"1/3", "1/3"}, 6, {0}},
           {"A1", CaseFlag::B, {"0"}, 8, {0, 1}},
           {"A1", CaseFlag::B, {"1/2"}, 8, {0}},
       }) {
    RootDatum d = build_root_datum(c.type, c.flag);
    OrbitCells oc = cells_of_W_times_orbit(d, Lambda::parse(d, c.lambda), c.bound);
    EXPECT_EQ(a_values(oc.cells), c.a) << c.type << " " << c.lambda[0];
    CellPartition direct = orbit_cell_closure(oc);
    EXPECT_EQ(blocks(direct.two_sided, direct.size()), blocks(oc.cells.two_sided, oc.cells.size()));
    EXPECT_EQ(oc.cells.size(), direct.size());
  }
}

TEST(OrbitCells, OmegaMergesCellsOfAffineB2) {
  RootDatum d = build_root_datum("B2", CaseFlag::B);
  Lambda lambda = Lambda::parse(d, {"0", "1/2"});
  LambdaGeometry g(d, lambda);
  CellPartition w_lambda_cells = cells_of_W_lambda(g, 8);
  OrbitCells oc = cells_of_W_times_orbit(d, lambda, 6);
  EXPECT_EQ(oc.cells.num_two_sided() + 1, w_lambda_cells.num_two_sided());
}

class OmegaOnCells : public ::testing::TestWithParam<std::tuple<std::string, CaseFlag, std::vector<std::string>>> {};

TEST_P(OmegaOnCells, OrbitsAgreeAndA0FixesCells) {
  auto [type, flag, coords] = GetParam();
  RootDatum d = build_root_datum(type, flag);
  suites::Report r = suites::omega_cells(d, Lambda::parse(d, coords), flag == CaseFlag::B ? 8 : 12);
  EXPECT_TRUE(r.ok()) << r.summary();
}

INSTANTIATE_TEST_SUITE_P(
    Points, OmegaOnCells,
    ::testing::Values(std::make_tuple("A1", CaseFlag::B, std::vector<std::string>{"0"}),
                      std::make_tuple("A1", CaseFlag::B, std::vector<std::string>{"1/2"}),
                      std::make_tuple("A2", CaseFlag::A, std::vector<std::string>{"1/3", "1/3"}),
                      std::make_tuple("A2", CaseFlag::A, std::vector<std::string>{"1/2", "0"}),
                      std::make_tuple("A2", CaseFlag::B, std::vector<std::string>{"0", "0"}),
                      std::make_tuple("A2", CaseFlag::B, std::vector<std::string>{"1/3", "1/3"}),
                      std::make_tuple("A1xA1", CaseFlag::B, std::vector<std::string>{"1/2", "0"}),
                      std::make_tuple("A1xA1", CaseFlag::B, std::vector<std::string>{"1/2", "1/2"}),
                      std::make_tuple("B2", CaseFlag::B, std::vector<std::string>{"0", "1/2"}),
                      std::make_tuple("B2", CaseFlag::B, std::vector<std::string>{"1/2", "0"}),
                      std::make_tuple("G2", CaseFlag::B, std::vector<std::string>{"1/2", "0"})));
