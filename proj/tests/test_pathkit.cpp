#include <gtest/gtest.h>

#include "obk/pathkit.hpp"

using namespace obk;

namespace {

std::vector<Vertex> vs(std::initializer_list<const char*> toks) {
  std::vector<Vertex> out;
  for (auto t : toks) out.push_back(parse_token(t));
  return out;
}

}  // namespace

TEST(Pathkit, PathBasics) {
  DiPath p(vs({"x1", "y2", "x3"}));
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.source(), x(1));
  EXPECT_EQ(p.terminal(), x(3));
  EXPECT_EQ(p.arcs().size(), 2u);
  EXPECT_THROW(DiPath(vs({"x1"})), InvalidArgument);
  EXPECT_THROW(DiPath(vs({"x1", "y2", "x1"})), InvalidArgument);
}

TEST(Pathkit, CycleAcceptsClosedOrOpen) {
  DiCycle open(vs({"x4", "x3", "y5", "y3"}));
  DiCycle closed(vs({"x4", "x3", "y5", "y3", "x4"}));
  EXPECT_EQ(open, closed);
  EXPECT_EQ(open.length(), 4u);
  EXPECT_EQ(to_string(open), "x4 x3 y5 y3 x4");
  EXPECT_EQ(open.canonical().vertices().front(), x(3));
  EXPECT_EQ(open.reversed().arcs().front(), (Arc{y(3), y(5)}));
}

TEST(Pathkit, TranslateInZAndModulo) {
  DiPath p(vs({"x7", "y9", "x9"}));
  EXPECT_EQ(translate(p, 4).vertices(), vs({"x11", "y13", "x13"}));
  EXPECT_EQ(translate(p, 4, 12).vertices(), vs({"x11", "y1", "x1"}));
  EXPECT_EQ(translate(p, -9, 12).vertices(), vs({"x10", "y0", "x0"}));
}

TEST(Pathkit, TranslateInHostRejectsOddShiftOfEvenWStar) {
  const auto w20 = host_w_star(20);  // m = 10
  DiPath p(vs({"x0", "x3"}));
  EXPECT_NO_THROW(translate(p, 2, w20));
  EXPECT_THROW(translate(p, 1, w20), InvalidArgument);
  const auto w14 = host_w_star(14);
  EXPECT_NO_THROW(translate(DiPath(vs({"x0", "x2"})), 1, w14));
}

TEST(Pathkit, PlaceChecksArcs) {
  const auto w14 = host_w_star(14);
  EXPECT_EQ(place(DiPath(vs({"x6", "y8"})), w14).vertices(), vs({"x6", "y1"}));
  EXPECT_THROW(place(DiPath(vs({"x0", "x3"})), w14), InvalidArgument);
}

TEST(Pathkit, ConcatenateJoinsAndReports) {
  DiPath a(vs({"x0", "x1"})), b(vs({"x1", "y2"})), c(vs({"y2", "x0"}));
  std::vector<DiPath> ab{a, b};
  EXPECT_EQ(concatenate(ab).vertices(), vs({"x0", "x1", "y2"}));
  std::vector<DiPath> abc{a, b, c};
  EXPECT_EQ(cyclic_concatenate(abc).length(), 3u);

  std::vector<DiPath> gap{a, c};
  try {
    concatenate(gap);
    FAIL();
  } catch (const ConcatenationError& e) {
    EXPECT_EQ(e.reason(), ConcatenationError::Reason::EndpointMismatch);
    EXPECT_EQ(e.index(), 0u);
  }
  DiPath back(vs({"y2", "x1"}));
  std::vector<DiPath> reuse{a, b, back};
  try {
    concatenate(reuse);
    FAIL();
  } catch (const ConcatenationError& e) {
    EXPECT_EQ(e.reason(), ConcatenationError::Reason::VertexReuse);
    EXPECT_EQ(e.vertex(), x(1));
  }
  std::vector<DiPath> none;
  EXPECT_THROW(concatenate(none), ConcatenationError);
}

TEST(Pathkit, DigonFromTwoArcs) {
  std::vector<DiPath> seq{DiPath(vs({"x0", "x1"})), DiPath(vs({"x1", "x0"}))};
  EXPECT_EQ(cyclic_concatenate(seq).length(), 2u);
}

TEST(Pathkit, VertexDisjoint) {
  EXPECT_TRUE(vertex_disjoint(DiPath(vs({"x0", "x1"})), DiPath(vs({"y0", "y1"}))));
  EXPECT_FALSE(vertex_disjoint(DiPath(vs({"x0", "x1"})), DiPath(vs({"y0", "x1"}))));
}
