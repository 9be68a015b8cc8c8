#include <gtest/gtest.h>

#include "clifford/serialize.hpp"

namespace {

using namespace clifford;
using nlohmann::json;

TEST(Serialize, GroupTableRoundTrip) {
  const GroupTable g = generate_group(AlgebraSignature(1, 2));
  const json j = to_json(g);
  EXPECT_EQ(j.at("order"), 16);
  EXPECT_EQ(j.at("elements").size(), 16u);
  EXPECT_EQ(j.at("table").size(), 16u);
  const GroupTable back = group_from_json(json::parse(j.dump()));
  EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), back.table().begin(), back.table().end()));
  EXPECT_TRUE(std::equal(g.labels().begin(), g.labels().end(), back.labels().begin(), back.labels().end()));
}

TEST(Serialize, GroupTableRejectsInconsistentOrder) {
  json j = to_json(standard_group(StandardGroup::z4));
  j["order"] = 5;
  EXPECT_THROW(group_from_json(j), std::invalid_argument);
}

TEST(Serialize, MatrixAsReImPairs) {
  const GaussianMatrix m = pauli(2);
  const json j = to_json(m);
  EXPECT_EQ(j, json::parse("[[[0,0],[0,-1]],[[0,1],[0,0]]]"));
  EXPECT_EQ(matrix_from_json(j), m);
}

TEST(Serialize, BasisRoundTrip) {
  for (const auto& name : fixture_names()) {
    const GammaBasis b = fixture_basis(name);
    const json j = to_json(b);
    for (const char* key : {"name", "p", "q", "dim", "gammas"}) EXPECT_TRUE(j.contains(key)) << key;
    const GammaBasis back = basis_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.gammas(), b.gammas());
    EXPECT_EQ(back.signature(), b.signature());
    EXPECT_EQ(back.first_label(), b.first_label());
  }
}

TEST(Serialize, BasisRejectsBrokenInput) {
  json j = to_json(fixture_basis("weyl"));
  j["dim"] = 8;
  EXPECT_THROW(basis_from_json(j), std::invalid_argument);
  j = to_json(fixture_basis("weyl"));
  j["q"] = 2;
  j["p"] = 2;
  EXPECT_THROW(basis_from_json(j), std::invalid_argument);
}

TEST(Serialize, ExtGroupSchema) {
  const ExtGroup e = derive_ext_group(fixture_basis("canonical"));
  const json j = to_json(e);
  EXPECT_EQ(j.at("signature"), "--+--++");
  EXPECT_EQ(j.at("blade_labels").size(), 8u);
  EXPECT_EQ(j.at("blade_labels")[4], "g013");
  ASSERT_EQ(j.at("table").size(), 8u);
  EXPECT_EQ(j.at("table")[1][1].at("key"), "I");
  EXPECT_EQ(j.at("table")[1][1].at("phase"), "-1");
  EXPECT_TRUE(j.at("pi_solved").get<bool>());
  EXPECT_EQ(basis_from_json(j.at("basis")).gammas(), e.basis.gammas());
}

}  // namespace
