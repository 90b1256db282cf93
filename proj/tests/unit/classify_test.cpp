#include <gtest/gtest.h>

#include "coxinv/classify.hpp"
#include "coxinv/oracle.hpp"
#include "support.hpp"

namespace coxinv {
namespace {

std::string type_of(const std::string& name) {
  return to_string(classify_irreducible(parse_name(name)));
}

std::string decomposition_of(const CoxeterMatrix& m, VertexSet J) {
  return to_string(decompose(m, J));
}

const CoxeterMatrix& g2_matrix() {
  static const auto m =
      parse_matrix(R"({"matrix":[[1,6,2],[6,1,3],[2,3,1]]})");
  return m;
}

TEST(Classify, Examples) {
  EXPECT_EQ(type_of("H3"), "H3");
  EXPECT_EQ(classify_irreducible(parse_name("H3")).family, Family::H);
  EXPECT_EQ(classify_irreducible(parse_name("Delta(2,3,6)")).family,
            Family::NonSpherical);
  EXPECT_EQ(classify_irreducible(g2_matrix()).family, Family::NonSpherical);
  EXPECT_EQ(type_of("A1"), "A1");
}

TEST(Classify, Normalization) {
  EXPECT_EQ(type_of("I2(3)"), "A2");
  EXPECT_EQ(type_of("I2(4)"), "B2");
  EXPECT_EQ(type_of("I2(6)"), "G2");
  EXPECT_EQ(type_of("H2"), "I2(5)");
  EXPECT_EQ(type_of("I2(5)"), "I2(5)");
  EXPECT_EQ(type_of("C5"), "B5");
  EXPECT_EQ(type_of("I2(inf)"), "X2");
}

TEST(Classify, EmptyOrDisconnectedIsAnError) {
  EXPECT_THROW(classify_irreducible(CoxeterMatrix{}), ValidationError);
  EXPECT_THROW(classify_irreducible(parse_name("A1+A1")), ValidationError);
}

TEST(Classify, NamedFiniteTypesRoundTrip) {
  std::vector<std::string> names;
  for (int n = 1; n <= 7; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) names.push_back("B" + std::to_string(n));
  for (int n = 4; n <= 7; ++n) names.push_back("D" + std::to_string(n));
  for (const char* x : {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}) {
    names.push_back(x);
  }
  for (int m : {5, 7, 8, 9, 10, 12, 30}) {
    names.push_back("I2(" + std::to_string(m) + ")");
  }
  for (const auto& name : names) EXPECT_EQ(type_of(name), name);
}

TEST(Classify, NonSphericalShapes) {
  for (const char* name :
       {"~A2", "~A5", "~B3", "~B6", "~C2", "~C4", "~D4", "~D7", "~E6", "~E7",
        "~E8", "~F4", "~G2", "~I1", "U3", "Delta(3,3,3)", "Delta(2,4,4)",
        "Delta(2,3,7)", "Delta(2,5,5)"}) {
    EXPECT_EQ(classify_irreducible(parse_name(name)).family,
              Family::NonSpherical)
        << name;
  }
  using testing::path;
  // label >= 7 in rank 3, two labelled edges, 5 in the middle, 6 in rank 3
  for (const auto& bonds : std::vector<std::vector<BondOrder>>{
           {3, 7}, {4, 4}, {4, 3, 4}, {3, 5, 3}, {5, 5}, {6, 3}, {3, 3, 4, 3},
           {4, 3, 3, 4}, {5, 3, 3, 3}, {3, 3, 3, 3, 4, 3}}) {
    EXPECT_EQ(classify_irreducible(path(bonds)).family, Family::NonSpherical);
  }
}

TEST(Classify, PathTypes) {
  using testing::path;
  EXPECT_EQ(to_string(classify_irreducible(path({3, 4, 3}))), "F4");
  EXPECT_EQ(to_string(classify_irreducible(path({4, 3, 3}))), "B4");
  EXPECT_EQ(to_string(classify_irreducible(path({3, 3, 5}))), "H4");
  EXPECT_EQ(to_string(classify_irreducible(path({5, 3}))), "H3");
  EXPECT_EQ(to_string(classify_irreducible(path({3, 3, 3}))), "A4");
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decomposition_of(g2_matrix(), VertexSet::of({0, 2})), "A1+A1");
  EXPECT_EQ(decomposition_of(g2_matrix(), VertexSet::of({1, 2})), "A2");
  EXPECT_EQ(decomposition_of(g2_matrix(), VertexSet::of({0, 1})), "G2");
  EXPECT_EQ(decomposition_of(g2_matrix(), VertexSet{}), "");
  EXPECT_EQ(decomposition_of(parse_name("~E7"), VertexSet::of({0, 2, 3, 4, 7})),
            "A1+D4");
  EXPECT_EQ(decompose(g2_matrix(), VertexSet::of({0, 2})).rank(), 2);
}

TEST(Decompose, PartsAreSorted) {
  const auto m = parse_name("B3+A1+A2+A1");
  EXPECT_EQ(decomposition_of(m, m.vertices()), "A1+A1+A2+B3");
}

TEST(Spherical, Examples) {
  EXPECT_TRUE(is_spherical(decompose(parse_name("A1+A1+A1"),
                                     VertexSet::first(3))));
  EXPECT_FALSE(is_spherical(TypeDecomposition({IrreducibleType::non_spherical(3)})));
  const auto c2 = parse_name("~C2");
  EXPECT_FALSE(is_spherical(decompose(c2, c2.vertices())));
}

TEST(CentralLongest, Examples) {
  auto central = [](const std::string& name) {
    const auto m = parse_name(name);
    return has_central_longest(decompose(m, m.vertices()));
  };
  EXPECT_TRUE(central("E7"));
  EXPECT_FALSE(central("E6"));
  EXPECT_TRUE(central("D4"));
  EXPECT_FALSE(central("D5"));
  EXPECT_TRUE(central("D6"));
  EXPECT_FALSE(central("I2(5)"));
  EXPECT_TRUE(central("I2(8)"));
  for (const char* yes : {"A1", "B2", "B7", "E8", "F4", "G2", "H3", "H4",
                          "A1+B3+I2(10)"}) {
    EXPECT_TRUE(central(yes)) << yes;
  }
  for (const char* no : {"A2", "A3", "A1+A2", "~A3", "~C2", "I2(inf)"}) {
    EXPECT_FALSE(central(no)) << no;
  }
  EXPECT_TRUE(has_central_longest(TypeDecomposition{}));
}

TEST(CoxeterNumber, Examples) {
  auto h = [](const std::string& name) {
    return coxeter_number(classify_irreducible(parse_name(name)));
  };
  EXPECT_EQ(h("A1"), 2);
  EXPECT_EQ(h("E7"), 18);
  EXPECT_EQ(h("I2(8)"), 8);
  EXPECT_EQ(h("A5"), 6);
  EXPECT_EQ(h("B4"), 8);
  EXPECT_EQ(h("D6"), 10);
  EXPECT_EQ(h("E6"), 12);
  EXPECT_EQ(h("E8"), 30);
  EXPECT_EQ(h("F4"), 12);
  EXPECT_EQ(h("G2"), 6);
  EXPECT_EQ(h("H3"), 10);
  EXPECT_EQ(h("H4"), 30);
  EXPECT_EQ(h("H2"), 5);
  EXPECT_THROW(coxeter_number(IrreducibleType::non_spherical(3)), DomainError);
}

TEST(CoxeterNumber, MatchesOrderOfACoxeterElement) {
  for (const char* name : {"A1", "A4", "A7", "B3", "B6", "D4", "D5", "D7",
                           "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)",
                           "I2(12)"}) {
    const auto m = parse_name(name);
    EXPECT_EQ(testing::coxeter_element_order(m),
              coxeter_number(classify_irreducible(m)))
        << name;
  }
}

TEST(GroupOrder, Examples) {
  auto order = [](const std::string& name) {
    const auto m = parse_name(name);
    return group_order(decompose(m, m.vertices()));
  };
  EXPECT_EQ(order("A1+A1"), 4);
  EXPECT_EQ(order("H3"), 120);
  EXPECT_EQ(order("B3"), 48);
  EXPECT_EQ(order("E8"), 696729600);
  EXPECT_EQ(order("A1+E8+E8"),
            BigInt(2) * BigInt(696729600) * BigInt(696729600));
  EXPECT_EQ(order("D5"), 1920);
  EXPECT_THROW(group_order(IrreducibleType::non_spherical(4)), DomainError);
}

TEST(GroupOrder, MatchesBruteForceEnumeration) {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5",
        "E6", "F4", "G2", "H3", "H4", "I2(7)", "A2+B3", "H3+I2(5)"}) {
    const auto m = parse_name(name);
    const auto table = oracle::enumerate(m);
    EXPECT_EQ(BigInt(table.size()), group_order(decompose(m, m.vertices())))
        << name;
  }
}

class ClassifyProperties : public ::testing::Test {
 protected:
  testing::Rng rng{7};
};

TEST_F(ClassifyProperties, InvariantUnderRelabelling) {
  for (const char* name :
       {"A1", "A5", "A7", "B2", "B5", "B7", "D4", "D5", "D7", "E6", "E7", "E8",
        "F4", "G2", "H3", "H4", "I2(5)", "I2(9)", "~A4", "~D5", "~E6", "~B4"}) {
    const auto m = parse_name(name);
    const auto expected = classify_irreducible(m);
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = testing::permuted(m, testing::random_permutation(rng, m.rank()));
      ASSERT_EQ(classify_irreducible(p), expected) << name;
    }
  }
}

TEST_F(ClassifyProperties, SphericalIffGramPositiveDefinite) {
  const std::vector<BondOrder> bonds{2, 2, 2, 3, 3, 4, 5, 6, 7, kInfinity};
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 8;
    const auto m = testing::random_matrix(rng, n, bonds);
    const auto dec = decompose(m, m.vertices());
    ASSERT_EQ(is_spherical(dec), testing::gram_positive_definite(m))
        << to_json(m) << " " << to_string(dec);
    if (has_central_longest(dec)) ASSERT_TRUE(is_spherical(dec));
    int rank = 0;
    for (const auto& part : dec.parts()) rank += part.rank;
    ASSERT_EQ(rank, n);
  }
}

}  // namespace
}  // namespace coxinv
