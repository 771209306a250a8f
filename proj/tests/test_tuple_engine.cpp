#include <gtest/gtest.h>

#include <set>

#include "obk/tuple_engine.hpp"
#include "obk/verify.hpp"
#include "test_helpers.hpp"

using namespace obk;

namespace {

const TupleStore& store() {
  static const TupleStore s = TupleStore::load(test_data_dir());
  return s;
}

std::set<Vertex> cols(std::initializer_list<int> cs) {
  std::set<Vertex> out;
  for (int c : cs) {
    out.insert(x(c));
    out.insert(y(c));
  }
  return out;
}

BaseTuple with_path(BaseTuple t, char which, std::vector<Vertex> vs) {
  DiPath p(std::move(vs));
  switch (which) {
    case 'Q': t.out_path = p; break;
    case 'R': t.back_path = p; break;
    case 'S': t.out_link = p; break;
    case 'T': t.back_link = p; break;
  }
  return t;
}

}  // namespace

TEST(Regions, IntersectionTable) {
  const int p = 7, k = 3, m = p + 4 * k;
  const auto rs = regions(p, k, m);
  ASSERT_EQ(rs.regions.size(), 4u);
  for (int j = 1; j <= k; ++j) EXPECT_EQ(rs.regions[j].size(), 12u);
  EXPECT_EQ(rs.intersection(0, 1), cols({p, p + 1}));
  EXPECT_EQ(rs.intersection(0, k), cols({0, 1}));
  EXPECT_EQ(rs.intersection(1, 2), cols({p + 4, p + 5}));
  EXPECT_TRUE(rs.intersection(1, 3).empty());
  EXPECT_EQ(rs.v0_dagger, cols({2, 3, 4, 5, 6}));
}

TEST(Regions, ZeroKCoversHost) {
  const auto rs = regions(7, 0, 7);
  EXPECT_EQ(rs.regions[0].size(), 14u);
  EXPECT_THROW(regions(7, 1, 7), InvalidArgument);
}

TEST(Validate, AllStoredTuplesPass) {
  int n = 0;
  for (const auto& [key, tuples] : store().cases()) {
    for (const auto& t : tuples) {
      const auto r = validate_base_tuple(t);
      for (const auto& c : r.results) {
        EXPECT_TRUE(c.pass) << key.first << "," << key.second << "#" << t.index << " "
                            << to_string(c.condition) << ": " << c.detail;
      }
      ++n;
    }
  }
  EXPECT_EQ(n, 64);
}

TEST(Validate, QThroughColumnZeroFailsB1) {
  auto t = store().load_case(4, 10).front();  // Q = y7 x5 y6 y4 x6 x7
  t = with_path(t, 'Q', {y(7), x(5), y(6), y(4), x(6), x(0)});
  const auto r = validate_base_tuple(t);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.at(Condition::B1).pass);
  EXPECT_EQ(r.at(Condition::B1).vertices, std::vector<Vertex>{x(0)});
}

TEST(Validate, LengthSumFailsB2) {
  auto t = store().load_case(4, 10).front();
  t = with_path(t, 'T', {y(11), x(10), y(8)});
  const auto r = validate_base_tuple(t);
  EXPECT_FALSE(r.at(Condition::B2).pass);
}

TEST(Validate, SharedVertexFailsB3) {
  auto t = store().load_case(4, 10).front();  // X = x4 x3 y5 y3
  t = with_path(t, 'Q', {y(7), x(5), y(6), y(4), x(4), x(6)});
  const auto r = validate_base_tuple(t);
  EXPECT_FALSE(r.at(Condition::B3).pass);
}

TEST(Validate, BrokenJunctionFailsB4B5) {
  auto t = store().load_case(4, 10).front();  // R = x0 y2 x1 x2 y1 y0
  t = with_path(t, 'R', {x(0), y(2), x(1), x(2), y(1), x(3)});
  const auto r = validate_base_tuple(t);
  EXPECT_FALSE(r.at(Condition::B4).pass);
}

TEST(Validate, SwappedLinkFailsB6) {
  auto t = store().load_case(4, 10).front();  // S = x7 y9 x9 x8 y10 x11
  t = with_path(t, 'S', {x(7), y(9), x(9), x(8), y(10), y(11)});
  const auto r = validate_base_tuple(t);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.at(Condition::B5).pass && r.at(Condition::B6).pass);
}

TEST(BuildFactor, SmallCases) {
  const auto& t = store().load_case(4, 10).front();
  const auto f0 = build_factor(t, 0);
  EXPECT_EQ(f0.host, host_w_star(14));
  EXPECT_EQ(f0.lengths(), (std::vector<std::size_t>{4, 10}));
  EXPECT_TRUE(verify_two_factor(f0, host_w_star(14), {4, 10}).pass());
  const auto f1 = build_factor(t, 1);
  EXPECT_EQ(f1.lengths(), (std::vector<std::size_t>{4, 18}));
  EXPECT_TRUE(verify_two_factor(f1, host_w_star(22), {4, 18}).pass());
  EXPECT_THROW(build_factor(t, -1), InvalidArgument);
}

TEST(BuildFactor, AnyTupleAtKFive) {
  for (const auto& [key, tuples] : store().cases()) {
    for (const auto& t : tuples) {
      const auto f = build_factor(t, 5);
      ASSERT_EQ(f.cycles.size(), 2u);
      EXPECT_EQ(f.lengths(), (std::vector<std::size_t>{std::size_t(t.t1), std::size_t(t.q + 40)}));
    }
  }
}

TEST(BuildFactor, LinksStayInTheirRegions) {
  const auto& t = store().load_case(6, 14)[2];
  const int p = t.half_order(), k = 3, m = p + 4 * k;
  const auto rs = regions(p, k, m);
  for (int j = 1; j <= k; ++j) {
    for (const auto& path : {translate(t.out_link, 4 * (j - 1), m),
                             translate(t.back_link, 4 * (j - 1), m)}) {
      for (const auto& v : path.vertices()) EXPECT_TRUE(rs.regions[j].contains(v));
    }
  }
}

TEST(Assemble, CensusAcrossK) {
  for (const auto& [key, tuples] : store().cases()) {
    for (int k = 0; k <= 6; ++k) {
      const auto fs = assemble_w_factorization(tuples, k);
      const int m = (key.first + key.second) / 2 + 4 * k;
      const auto host = host_w_star(2 * m);
      EXPECT_EQ(fs.size() * 2 * m, host.arc_count());
      EXPECT_TRUE(verify_factorization(
                      fs, host, {std::size_t(key.first), std::size_t(key.second + 8 * k)})
                      .pass());
    }
  }
}

TEST(Assemble, SmallCensusExamples) {
  EXPECT_EQ(assemble_w_factorization(store().load_case(4, 10), 0).size() * 14, 126u);
  EXPECT_EQ(assemble_w_factorization(store().load_case(6, 14), 0).size() * 20, 140u);
  EXPECT_EQ(assemble_w_factorization(store().load_case(4, 16), 3).size() * 40, 280u);
}

TEST(Assemble, HypothesesHold) {
  for (const auto& [key, tuples] : store().cases()) {
    EXPECT_TRUE(check_assembly_hypotheses(tuples).empty()) << key.first << "," << key.second;
  }
}

TEST(Assemble, WrongCountOrDuplicateTupleRejected) {
  auto tuples = store().load_case(4, 10);
  tuples.pop_back();
  EXPECT_THROW(assemble_w_factorization(tuples, 0), InvalidArgument);
  auto dup = store().load_case(4, 10);
  dup[1] = dup[0];
  try {
    assemble_w_factorization(dup, 0);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.failure().a, 0);
    EXPECT_EQ(e.failure().b, 1);
  }
  std::vector<BaseTuple> mixed = store().load_case(4, 10);
  mixed[0] = store().load_case(4, 14)[0];
  EXPECT_THROW(assemble_w_factorization(mixed, 0), InvalidArgument);
}
