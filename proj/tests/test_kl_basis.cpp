#include <gtest/gtest.h>

#include "suites.hpp"

using namespace klcells;

namespace {

struct Config {
  std::string type;
  CaseFlag case_flag;
  std::vector<std::string> lambda;
  int bound;
};

std::string name_of(const Config& c) {
  std::string s = c.type + (c.case_flag == CaseFlag::A ? "_A" : "_B");
  for (const auto& x : c.lambda) {
    s += "_";
    for (char ch : x) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  }
  return s;
}

std::vector<Config> configs() {
  return {
      {"A1", CaseFlag::B, {"0"}, 8},         {"A1", CaseFlag::B, {"1/2"}, 8},      {"A1", CaseFlag::B, {"1/3"}, 8},
      {"A2", CaseFlag::A, {"0", "0"}, 6},    {"A2", CaseFlag::A, {"1/2", "0"}, 6}, {"A2", CaseFlag::A, {"1/3", "1/3"}, 6},
      {"B2", CaseFlag::A, {"0", "0"}, 8},    {"B2", CaseFlag::A, {"0", "1/2"}, 8}, {"G2", CaseFlag::A, {"1/2", "0"}, 12},
      {"A1xA1", CaseFlag::B, {"1/2", "0"}, 4}, {"A2", CaseFlag::B, {"0", "0"}, 4}, {"A2", CaseFlag::B, {"1/3", "1/3"}, 4},
      {"B2", CaseFlag::B, {"0", "1/2"}, 4},  {"G2", CaseFlag::B, {"1/2", "0"}, 4},
  };
}

class BarAndKL : public ::testing::TestWithParam<Config> {};

/// T_s^-1 = T_s - (v - v^-1), and bar(T_w) = T_{w^-1}^-1 is the product of these along a reduced word of w.
HeckeVector bar_by_words(const IwahoriHecke& h, const HeckeVector& a) {
  const CoxeterTable& t = h.table();
  HeckeVector out;
  for (const auto& [w, p] : a) {
    HeckeVector acc{{0, LaurentPoly(1)}};
    for (int s : t.word(w)) {
      HeckeVector inv{{t.from_word({s}), LaurentPoly(1)}, {0, -suites::v_minus_vinv()}};
      acc = h.multiply_T(acc, inv);
    }
    add_into(out, acc, p.bar());
  }
  return out;
}

void expect_kl_characterization(const CoxeterTable& t, int limit) {
  IwahoriHecke h(t);
  for (int w = 0; w < t.size() && t.length(w) <= limit; ++w) {
    HeckeVector c = h.c_in_T(w);
    EXPECT_EQ(bar_by_words(h, c), c) << "c_" << w;
    EXPECT_EQ(oracle::get(c, w), LaurentPoly(1));
    for (const auto& [y, p] : c) {
      if (y == w) continue;
      EXPECT_TRUE(p.in_negative_part());
      EXPECT_LT(t.length(y), t.length(w));
      for (auto [e, coeff] : p.terms()) EXPECT_GT(coeff, 0) << "KL coefficients are nonnegative";
      EXPECT_EQ(h.p(y, w), p);
    }
    EXPECT_EQ(h.T_to_c(c), (HeckeVector{{w, LaurentPoly(1)}}));
  }
}

}  // namespace

TEST_P(BarAndKL, BarInvolutionAndCanonicalBasis) {
  const Config& c = GetParam();
  RootDatum d = build_root_datum(c.type, c.case_flag);
  Lambda lambda = Lambda::parse(d, c.lambda);
  suites::Report r = suites::bar_kl(d, lambda, c.bound);
  EXPECT_TRUE(r.ok()) << r.summary();
  RecordProperty("checks", static_cast<int>(r.checks));
}

INSTANTIATE_TEST_SUITE_P(Configs, BarAndKL, ::testing::ValuesIn(configs()),
                         [](const auto& info) { return name_of(info.param); });

TEST(IwahoriHecke, QuadraticRelation) {
  RootDatum d = build_root_datum("A2", CaseFlag::B);
  CoxeterTable t(d, d.simple(), 4);
  IwahoriHecke h(t);
  for (int s = 0; s < t.num_generators(); ++s) {
    int id = t.from_word({s});
    HeckeVector ts{{id, LaurentPoly(1)}};
    HeckeVector expected{{0, LaurentPoly(1)}, {id, suites::v_minus_vinv()}};
    EXPECT_EQ(h.multiply_T(ts, ts), expected);
    EXPECT_EQ(bar_by_words(h, ts), h.bar_T(ts));
  }
}

TEST(IwahoriHecke, BarAgreesWithWordProducts) {
  for (std::string type : {"A2", "B2", "G2"}) {
    RootDatum d = build_root_datum(type, CaseFlag::B);
    CoxeterTable t(d, d.simple(), 5);
    IwahoriHecke h(t);
    for (int w = 0; w < t.size(); ++w) {
      HeckeVector tw{{w, LaurentPoly::monomial(2) + LaurentPoly(3)}};
      EXPECT_EQ(h.bar_T(tw), bar_by_words(h, tw)) << type;
    }
  }
}

TEST(IwahoriHecke, DihedralClosedForm) {
  for (std::string type : {"A1", "A1xA1", "A2", "B2", "G2"}) {
    RootDatum d = build_root_datum(type, CaseFlag::A);
    CoxeterTable t(d, d.simple(), 20);
    IwahoriHecke h(t);
    for (int w = 0; w < t.size(); ++w) EXPECT_EQ(h.c_in_T(w), oracle::dihedral_c(t, w)) << type << " " << w;
  }
  RootDatum a1 = build_root_datum("A1", CaseFlag::B);
  CoxeterTable t(a1, a1.simple(), 10);
  IwahoriHecke h(t);
  for (int w = 0; w < t.size(); ++w) EXPECT_EQ(h.c_in_T(w), oracle::dihedral_c(t, w));
}

TEST(IwahoriHecke, AffineRankTwoCharacterization) {
  for (std::string type : {"A2", "B2", "G2"}) {
    RootDatum d = build_root_datum(type, CaseFlag::B);
    CoxeterTable t(d, d.simple(), 7);
    expect_kl_characterization(t, 7);
  }
}

TEST(IwahoriHecke, AffineA2HasNontrivialPolynomials) {
  RootDatum d = build_root_datum("A2", CaseFlag::B);
  CoxeterTable t(d, d.simple(), 6);
  IwahoriHecke h(t);
  bool nontrivial = false;
  for (int w = 0; w < t.size(); ++w)
    for (const auto& [y, p] : h.kl_column(w))
      nontrivial = nontrivial || p.terms().size() > 1;
  EXPECT_TRUE(nontrivial);
}

TEST(IwahoriHecke, GeneratorTimesBasisElement) {
  RootDatum d = build_root_datum("B2", CaseFlag::B);
  CoxeterTable t(d, d.simple(), 6);
  IwahoriHecke h(t);
  for (int x = 0; x < t.size() && t.length(x) < 6; ++x)
    for (int s = 0; s < t.num_generators(); ++s) {
      int sid = t.from_word({s});
      HeckeVector expected;
      if (t.is_left_descent(s, x)) {
        expected[x] = LaurentPoly::quantum_two();
      } else {
        expected[t.left(s, x)] = LaurentPoly(1);
        for (auto [y, mu] : h.mu_column(x))
          if (t.is_left_descent(s, y)) add_term(expected, y, LaurentPoly(mu));
      }
      EXPECT_EQ(h.c_generator_times(s, x), expected);
      EXPECT_EQ(h.c_product(sid, x), expected);
      EXPECT_EQ(h.T_to_c(h.multiply_T(h.c_in_T(sid), h.c_in_T(x))), expected);
    }
}

TEST(IwahoriHecke, ProductsBeyondTheTableThrow) {
  RootDatum d = build_root_datum("A1", CaseFlag::B);
  CoxeterTable t(d, d.simple(), 3);
  IwahoriHecke h(t);
  HeckeVector top{{t.size() - 1, LaurentPoly(1)}};
  EXPECT_THROW(h.multiply_T(top, top), TruncationError);
}

TEST(OrbitHecke, SigmaSquaredIsQuantumTwoSigma) {
  RootDatum d = build_root_datum("A1", CaseFlag::B);
  OrbitHecke h(d, Lambda::zero(d), 6);
  for (int i = 0; i < 2; ++i) {
    BasisKey k{h.weyl().from_word({i}), 0};
    HeckeElement c = h.kl_basis_element(k);
    HeckeElement expected;
    add_into(expected, c, LaurentPoly::quantum_two());
    EXPECT_EQ(h.multiply(c, c), expected);
  }
}

TEST(OrbitHecke, ThetaIsoOnBlockAlgebra) {
  RootDatum d = build_root_datum("A2", CaseFlag::A);
  OrbitHecke h(d, Lambda::parse(d, {"1/2", "0"}), 6);
  BlockAlgebra b = assemble_block_algebra(h);
  ASSERT_FALSE(b.triples().empty());
  for (int xi = 0; xi < static_cast<int>(b.triples().size()); ++xi) {
    const XiTriple& t = b.triples()[xi];
    for (int w = 0; w < h.weyl().size(); ++w) {
      if (!h.geometry(t.source).in_W_lambda(h.weyl().element(w))) continue;
      BlockElement e = b.basis(xi, w);
      HeckeElement img = b.theta(e);
      EXPECT_EQ(b.theta_inverse(img), e);
      for (int xj = 0; xj < static_cast<int>(b.triples().size()); ++xj)
        for (int w2 = 0; w2 < h.weyl().size(); ++w2) {
          if (!h.geometry(b.triples()[xj].source).in_W_lambda(h.weyl().element(w2))) continue;
          BlockElement f = b.basis(xj, w2);
          EXPECT_EQ(b.theta(b.multiply(e, f)), h.multiply(img, b.theta(f)));
        }
    }
  }
}
