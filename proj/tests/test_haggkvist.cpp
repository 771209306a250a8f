#include <gtest/gtest.h>

#include <set>

#include "obk/haggkvist.hpp"
#include "obk/verify.hpp"

using namespace obk;

namespace {

std::vector<int> identity(int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = i;
  return c;
}

std::set<std::pair<Vertex, Vertex>> undirected_edges(const UndirectedFactor& f) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const auto& c : f)
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto a = c[i], b = c[(i + 1) % c.size()];
      out.insert({std::min(a, b), std::max(a, b)});
    }
  return out;
}

}  // namespace

TEST(Haggkvist, BlockOfTwo) {
  const auto fs = f_factorize_blowup(identity(4), {4, 4});
  EXPECT_EQ(fs[0][0], (std::vector<Vertex>{x(0), y(1), y(2), x(1)}));
}

TEST(Haggkvist, UndirectedFactorsPartitionEdges) {
  const auto order = std::vector<int>{0, 2, 4, 1, 3};
  const auto fs = f_factorize_blowup(order, {4, 6});
  const auto e0 = undirected_edges(fs[0]), e1 = undirected_edges(fs[1]);
  EXPECT_EQ(e0.size(), 10u);
  EXPECT_EQ(e1.size(), 10u);
  const auto host = blown_cycle(order);
  std::set<std::pair<Vertex, Vertex>> all;
  for (const auto& a : host.arcs())
    if (a.tail < a.head) all.insert({a.tail, a.head});
  EXPECT_EQ(all.size(), 20u);
  auto both = e0;
  both.insert(e1.begin(), e1.end());
  EXPECT_EQ(both, all);
  for (const auto& f : fs) {
    std::vector<std::size_t> ls;
    for (const auto& c : f) ls.push_back(c.size());
    std::sort(ls.begin(), ls.end());
    EXPECT_EQ(ls, (std::vector<std::size_t>{4, 6}));
  }
}

TEST(Haggkvist, RejectsShortOrBadLengths) {
  EXPECT_THROW(f_factorize_blowup(identity(5), {2, 8}), InvalidArgument);
  EXPECT_THROW(f_factorize_blowup(identity(5), {5, 5}), InvalidArgument);
  EXPECT_THROW(f_factorize_blowup(identity(5), {4, 4}), InvalidArgument);
  EXPECT_THROW(d_factorize_blowup_star(identity(5), 2, 8), InvalidArgument);
}

TEST(Haggkvist, DirectedExamples) {
  struct Case {
    int m, t1, t2;
  };
  for (auto [m, t1, t2] : {Case{7, 4, 10}, Case{7, 6, 8}, Case{10, 4, 16}}) {
    const auto order = identity(m);
    const auto fs = d_factorize_blowup_star(order, t1, t2);
    ASSERT_EQ(fs.size(), 4u);
    EXPECT_TRUE(verify_factorization(fs, blown_cycle(order), {std::size_t(t1), std::size_t(t2)})
                    .pass());
    std::size_t arcs = 0;
    for (const auto& f : fs) arcs += f.arcs().size();
    EXPECT_EQ(arcs, static_cast<std::size_t>(8 * m));
  }
}

TEST(Haggkvist, OrientationsAreComplementary) {
  const auto fs = d_factorize_blowup_star(identity(6), 4, 8);
  for (int i : {0, 2}) {
    auto a = fs[i].arcs(), b = fs[i + 1].arcs();
    std::set<Arc> sa(a.begin(), a.end());
    for (const auto& arc : b) {
      EXPECT_FALSE(sa.contains(arc));
      EXPECT_TRUE(sa.contains(Arc{arc.head, arc.tail}));
    }
  }
}

TEST(Haggkvist, NoVerticalArcs) {
  for (const auto& f : d_factorize_blowup_star({3, 1, 4, 0, 2, 5}, 6, 6))
    for (const auto& a : f.arcs()) EXPECT_NE(a.tail.column, a.head.column);
}

TEST(Haggkvist, MoreThanTwoBlocks) {
  const auto order = identity(9);
  const auto fs = d_factorize_blowup_star(order, std::vector<int>{4, 6, 8});
  EXPECT_TRUE(verify_factorization(fs, blown_cycle(order), {4, 6, 8}).pass());
}
