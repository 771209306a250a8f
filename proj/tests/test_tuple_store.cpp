#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "obk/tuple_store.hpp"
#include "test_helpers.hpp"

using namespace obk;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kOne =
    "case t1=4 q=10 r=9\n"
    "X: x4 x3 y5 y3 x4\n"
    "Q: y7 x5 y6 y4 x6 x7\n"
    "R: x0 y2 x1 x2 y1 y0\n"
    "S: x7 y9 x9 x8 y10 x11\n"
    "T: y11 x10 y8 y7\n";

}  // namespace

TEST(TupleStore, LoadsAllCases) {
  const auto store = TupleStore::load(test_data_dir());
  EXPECT_EQ(store.cases().size(), 8u);
  std::size_t total = 0;
  for (const auto& [key, tuples] : store.cases()) {
    EXPECT_EQ(static_cast<int>(tuples.size()), factor_count_for(key.first, key.second));
    total += tuples.size();
  }
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(store.specials().size(), 4u);
  EXPECT_EQ(store.checksums().size(), 2u);
}

TEST(TupleStore, FirstTupleMatchesTable) {
  const auto store = TupleStore::load(test_data_dir());
  const auto& t = store.load_case(4, 10).front();
  EXPECT_EQ(t.out_path.length(), 5u);
  EXPECT_EQ(t.back_path.length(), 5u);
  EXPECT_EQ(t.out_link.length(), 5u);
  EXPECT_EQ(t.back_link.length(), 3u);
  EXPECT_EQ(to_string(t.short_cycle), "x4 x3 y5 y3 x4");
  EXPECT_EQ(t.half_order(), 7);
}

TEST(TupleStore, RepairedShortCycleIsClosed) {
  const auto store = TupleStore::load(test_data_dir());
  const auto& t = store.load_case(6, 16)[5];
  EXPECT_EQ(t.short_cycle.length(), 6u);
  EXPECT_EQ(t.short_cycle.vertices().front(), y(6));
}

TEST(TupleStore, FactorCounts) {
  EXPECT_EQ(factor_count_for(4, 10), 9);
  EXPECT_EQ(factor_count_for(4, 16), 7);
  EXPECT_EQ(factor_count_for(6, 16), 9);
  EXPECT_EQ(factor_count_for(6, 14), 7);
}

TEST(TupleStore, UnknownLookupsThrow) {
  const auto store = TupleStore::load(test_data_dir());
  EXPECT_THROW(store.load_case(4, 12), InvalidArgument);
  EXPECT_THROW(store.load_special(4, 10), InvalidArgument);
  EXPECT_EQ(store.load_special(6, 8).factors.size(), 9u);
}

TEST(TupleStore, SerializeParseRoundTrip) {
  const auto store = TupleStore::load(test_data_dir());
  const std::string text = serialize_case_table(store.cases());
  EXPECT_EQ(parse_case_table(std::string_view(text)), store.cases());
  EXPECT_EQ(serialize_case_table(parse_case_table(std::string_view(text))), text);
  const std::string sp = serialize_special_table(store.specials());
  EXPECT_EQ(parse_special_table(std::string_view(sp)), store.specials());
  EXPECT_EQ(serialize_special_table(parse_special_table(std::string_view(sp))), sp);
}

TEST(TupleStore, RejectsWrongTupleCount) {
  try {
    parse_case_table(std::string_view(kOne), "one.txt");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.source(), "one.txt");
    EXPECT_NE(std::string(e.what()).find("expected 9"), std::string::npos);
  }
}

TEST(TupleStore, RejectsBadHeaderAndLengths) {
  EXPECT_THROW(parse_case_table(std::string_view("case t1=4 q=10 r=7\n")), FormatError);
  EXPECT_THROW(parse_case_table(std::string_view("case t1=4 q=12 r=9\n")), FormatError);
  EXPECT_THROW(parse_case_table(std::string_view("# nothing\n")), FormatError);
  EXPECT_THROW(parse_case_table(std::string_view("case t1=4 q=10 r=9\n")), FormatError);

  std::string shortq = kOne;
  shortq.replace(shortq.find("Q: y7 x5"), 8, "Q: y7");
  try {
    parse_case_table(std::string_view(shortq));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("B2"), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(TupleStore, RejectsForeignArcAndBadToken) {
  std::string foreign = kOne;
  foreign.replace(foreign.find("X: x4 x3"), 8, "X: x4 x0");
  EXPECT_THROW(parse_case_table(std::string_view(foreign)), FormatError);
  std::string token = kOne;
  token.replace(token.find("y11 x10"), 3, "z11");
  try {
    parse_case_table(std::string_view(token));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 6);
  }
}

TEST(TupleStore, SpecialFactorsHaveRightShape) {
  const auto store = TupleStore::load(test_data_dir());
  const std::map<std::pair<int, int>, std::size_t> counts = {
      {{4, 12}, 7}, {{6, 8}, 9}, {{6, 10}, 7}, {{6, 12}, 9}};
  for (const auto& [key, n] : counts) {
    const auto& sc = store.load_special(key.first, key.second);
    EXPECT_EQ(sc.factors.size(), n);
    for (const auto& f : sc.factors) {
      EXPECT_EQ(f.host, host_w_star(key.first + key.second));
      EXPECT_EQ(f.lengths(),
                (std::vector<std::size_t>{std::size_t(key.first), std::size_t(key.second)}));
    }
  }
}

TEST(TupleStore, ChecksumIsFnv1a) {
  EXPECT_EQ(checksum_hex(""), "cbf29ce484222325");
  EXPECT_EQ(checksum_hex("a"), "af63dc4c8601ec8c");
  const auto store = TupleStore::load(test_data_dir());
  EXPECT_EQ(store.checksums().at("base_tuples.txt"),
            checksum_hex(read(test_data_dir() / "base_tuples.txt")));
}

TEST(TupleStore, DataDirFromEnvironment) {
  setenv("OBK_DATA_DIR", "/some/where", 1);
  EXPECT_EQ(default_data_dir(), std::filesystem::path("/some/where"));
  unsetenv("OBK_DATA_DIR");
  EXPECT_NE(default_data_dir(), std::filesystem::path("/some/where"));
}

TEST(TupleStore, MissingDirectoryThrows) {
  EXPECT_THROW(TupleStore::load("/nonexistent/obk"), InvalidArgument);
}
