#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "obk/hamdecomp.hpp"
#include "obk/error.hpp"
#include "test_helpers.hpp"

using namespace obk;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edges_of(const HamCycle& c) {
  EdgeSet out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

EdgeSet circulant_edges(int m, std::initializer_list<int> ds) {
  EdgeSet out;
  for (int d : ds)
    for (int i = 0; i < m; ++i) {
      int a = i, b = (i + d) % m;
      out.insert({std::min(a, b), std::max(a, b)});
    }
  return out;
}

bool hamiltonian(const HamCycle& c, int m) {
  auto s = c;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < m; ++i)
    if (static_cast<int>(s.size()) != m || s[i] != i) return false;
  return true;
}

void expect_pair_splits(int m, int a, int b) {
  const auto pair = ham_pair_circulant(m, a, b);
  EXPECT_TRUE(hamiltonian(pair[0], m));
  EXPECT_TRUE(hamiltonian(pair[1], m));
  auto e0 = edges_of(pair[0]), e1 = edges_of(pair[1]);
  EdgeSet both = e0;
  both.insert(e1.begin(), e1.end());
  EXPECT_EQ(both.size(), static_cast<std::size_t>(2 * m));
  EXPECT_EQ(both, circulant_edges(m, {a, b}));
}

}  // namespace

TEST(HamPair, K5) { expect_pair_splits(5, 1, 2); }
TEST(HamPair, Nine) { expect_pair_splits(9, 1, 2); }
TEST(HamPair, HardBranchNonCoprime) { expect_pair_splits(15, 3, 5); }

TEST(HamPair, ManyPairs) {
  for (int m = 7; m <= 35; m += 2) {
    for (int a = 1; a <= (m - 1) / 2; ++a)
      for (int b = a + 1; b <= (m - 1) / 2; ++b) {
        if (std::gcd(std::gcd(a, b), m) != 1) continue;
        expect_pair_splits(m, a, b);
      }
  }
}

TEST(HamPair, Preconditions) {
  EXPECT_THROW(ham_pair_circulant(15, 3, 6), InvalidArgument);  // gcd 3
  EXPECT_THROW(ham_pair_circulant(9, 2, 2), InvalidArgument);
  EXPECT_THROW(ham_pair_circulant(9, 1, 5), InvalidArgument);
}

TEST(SingleClass, Stepping) {
  EXPECT_EQ(single_class_cycle(7, 3), (HamCycle{0, 3, 6, 2, 5, 1, 4}));
  EXPECT_TRUE(hamiltonian(single_class_cycle(9, 4), 9));
  EXPECT_THROW(single_class_cycle(9, 3), InvalidArgument);
}

TEST(OddFamily, ClassesCoverExactly) {
  for (int m = 7; m <= 61; m += 2) {
    std::vector<int> seen;
    for (const auto& cls : odd_class_family(m)) seen.insert(seen.end(), cls.begin(), cls.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> want;
    for (int d = 3; d <= (m - 1) / 2; ++d) want.push_back(d);
    EXPECT_EQ(seen, want) << m;
  }
  EXPECT_EQ(odd_class_family(7), (std::vector<std::vector<int>>{{3}}));
  EXPECT_EQ(odd_class_family(11), (std::vector<std::vector<int>>{{3, 5}, {4}}));
  EXPECT_EQ(odd_class_family(9), (std::vector<std::vector<int>>{{3, 4}}));
  EXPECT_THROW(odd_class_family(8), InvalidArgument);
}

TEST(DecomposeOdd, Counts) {
  EXPECT_EQ(decompose_k_odd(7).ham_cycles.size(), 1u);
  EXPECT_EQ(decompose_k_odd(9).ham_cycles.size(), 2u);
  EXPECT_EQ(decompose_k_odd(11).ham_cycles.size(), 3u);
  EXPECT_EQ(decompose_k_odd(9).reserved, circulant(9, {1, 2}));
  EXPECT_THROW(decompose_k_odd(5), InvalidArgument);
}

TEST(DecomposeOdd, PartitionIndependentCheck) {
  for (int m = 7; m <= 49; m += 2) {
    const auto s = decompose_k_odd(m);
    EdgeSet all = circulant_edges(m, {1, 2});
    std::size_t total = all.size();
    for (const auto& c : s.ham_cycles) {
      ASSERT_TRUE(hamiltonian(c, m));
      auto e = edges_of(c);
      total += e.size();
      all.insert(e.begin(), e.end());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(m * (m - 1) / 2));
    EXPECT_EQ(all.size(), total);
  }
}

TEST(DecomposeEven, Counts) {
  EXPECT_EQ(decompose_k_even(8).ham_cycles.size(), 2u);
  EXPECT_EQ(decompose_k_even(10).ham_cycles.size(), 3u);
  EXPECT_EQ(decompose_k_even(14).ham_cycles.size(), 5u);
  EXPECT_THROW(decompose_k_even(9), InvalidArgument);
  EXPECT_THROW(decompose_k_even(6), InvalidArgument);
}

TEST(DecomposeEven, SearchIsDeterministic) {
  EXPECT_EQ(decompose_k_even(24, {7, std::nullopt}), decompose_k_even(24, {7, std::nullopt}));
}

TEST(DecomposeEven, CacheMatchesVerification) {
  for (int m = 8; m <= 40; m += 2) {
    const auto s = decompose_k_even(m, {kDefaultSeed, test_data_dir() / "km"});
    EXPECT_NE(s.origin.find("cache"), std::string::npos) << m;
    EXPECT_NO_THROW(verify_km_split(s));
  }
}

TEST(KmSplitFormat, RoundTripAndTamper) {
  const auto s = decompose_k_even(12);
  const auto text = serialize_km_split(s);
  EXPECT_EQ(parse_km_split(text), s);
  std::string bad = text;
  bad.replace(bad.find('\n') + 1, 1, "9");  // first cycle's first vertex
  EXPECT_THROW(parse_km_split(bad), FormatError);
  EXPECT_THROW(parse_km_split("kn 8\n"), FormatError);
  EXPECT_THROW(parse_km_split("km 8\n0 1 2\n"), FormatError);
}

TEST(VerifySplit, CatchesReservedEdge) {
  auto s = decompose_k_odd(9);
  s.ham_cycles[0] = single_class_cycle(9, 1);
  EXPECT_THROW(verify_km_split(s), InternalError);
}

TEST(Canonical, NormalForm) {
  EXPECT_EQ(canonical_cycle({3, 0, 4, 1, 2}), (HamCycle{0, 3, 2, 1, 4}));
}
