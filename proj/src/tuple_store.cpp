#include "obk/tuple_store.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/core.h>

#ifndef OBK_SOURCE_DATA_DIR
#define OBK_SOURCE_DATA_DIR "data"
#endif

namespace obk {

namespace {

constexpr std::string_view kTupleLabels = "XQRST";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  int number;
  std::string_view text;
};

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

int parse_int(std::string_view s, const std::string& source, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError(source, line, fmt::format("expected an integer, got '{}'", s));
  }
  return value;
}

// Parses "word key=value key=value ..." and returns the values in key order.
std::vector<int> parse_header(const Line& line, std::string_view word,
                              const std::vector<std::string_view>& keys,
                              const std::string& source) {
  const auto parts = split_ws(line.text);
  if (parts.size() != keys.size() + 1 || parts[0] != word) {
    std::string expected(word);
    for (auto k : keys) expected += fmt::format(" {}=<int>", k);
    throw FormatError(source, line.number,
                      fmt::format("expected header '{}', got '{}'", expected, line.text));
  }
  std::vector<int> values;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto eq = parts[i + 1].find('=');
    if (eq == std::string_view::npos || parts[i + 1].substr(0, eq) != keys[i]) {
      throw FormatError(source, line.number,
                        fmt::format("expected '{}=<int>', got '{}'", keys[i], parts[i + 1]));
    }
    values.push_back(parse_int(parts[i + 1].substr(eq + 1), source, line.number));
  }
  return values;
}

std::vector<Vertex> parse_vertices(std::string_view body, const Line& line,
                                   const std::string& source) {
  std::vector<Vertex> out;
  for (auto tok : split_ws(body)) {
    try {
      out.push_back(parse_token(tok));
    } catch (const InvalidArgument& e) {
      throw FormatError(source, line.number, e.what());
    }
  }
  if (out.empty()) throw FormatError(source, line.number, "no vertices");
  return out;
}

// Splits "L: body" into label and body.
std::pair<std::string_view, std::string_view> labelled(const Line& line,
                                                       const std::string& source) {
  const auto colon = line.text.find(':');
  if (colon == std::string_view::npos) {
    throw FormatError(source, line.number, fmt::format("expected '<label>: ...', got '{}'",
                                                       line.text));
  }
  return {trim(line.text.substr(0, colon)), trim(line.text.substr(colon + 1))};
}

template <typename F>
auto rethrow_at(const std::string& source, int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(source, line, e.what());
  }
}

std::string path_line(char label, const std::vector<Vertex>& vs) {
  std::string out(1, label);
  out += ':';
  for (const auto& v : vs) out += ' ' + to_token(v);
  return out;
}

std::vector<Vertex> closed(const DiCycle& c) {
  auto vs = c.vertices();
  vs.push_back(vs.front());
  return vs;
}

void check_columns(const std::vector<Vertex>& vs, int limit, const std::string& source,
                   int line) {
  for (const auto& v : vs) {
    if (v.column < 0 || v.column >= limit) {
      throw FormatError(source, line,
                        fmt::format("subscript of {} outside 0..{}", to_token(v), limit - 1));
    }
  }
}

}  // namespace

int factor_count_for(int t1, int q) { return (t1 + q) % 4 == 2 ? 9 : 7; }

const std::vector<std::pair<int, int>>& known_cases() {
  static const std::vector<std::pair<int, int>> cases = {
      {4, 10}, {4, 14}, {6, 16}, {6, 20}, {4, 16}, {4, 20}, {6, 14}, {6, 18}};
  return cases;
}

const std::vector<std::pair<int, int>>& special_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {{4, 12}, {6, 8}, {6, 10}, {6, 12}};
  return pairs;
}

bool SpecialCaseFactorization::operator==(const SpecialCaseFactorization& other) const {
  if (t1 != other.t1 || t2 != other.t2 || factors.size() != other.factors.size()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].cycles != other.factors[i].cycles) return false;
  }
  return true;
}

CaseTable parse_case_table(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  CaseTable table;
  std::size_t i = 0;
  if (lines.empty()) throw FormatError(source, 1, "zero tuples: file has no content");
  while (i < lines.size()) {
    const Line& header = lines[i++];
    const auto h = parse_header(header, "case", {"t1", "q", "r"}, source);
    const int t1 = h[0], q = h[1], r = h[2];
    if (std::find(known_cases().begin(), known_cases().end(), std::pair{t1, q}) ==
        known_cases().end()) {
      throw FormatError(source, header.number, fmt::format("unknown case t1={} q={}", t1, q));
    }
    if (r != factor_count_for(t1, q)) {
      throw FormatError(source, header.number,
                        fmt::format("case t1={} q={} needs r={}, header says r={}", t1, q,
                                    factor_count_for(t1, q), r));
    }
    if (table.contains({t1, q})) {
      throw FormatError(source, header.number,
                        fmt::format("duplicate case t1={} q={}", t1, q));
    }
    const int p = (t1 + q) / 2;
    const HostSpec host = host_w_star(t1 + q + 24);
    std::vector<BaseTuple> tuples;
    while (i < lines.size() && !lines[i].text.starts_with("case")) {
      if (i + kTupleLabels.size() > lines.size()) {
        throw FormatError(source, lines[i].number, "truncated tuple: expected X, Q, R, S, T lines");
      }
      std::vector<std::vector<Vertex>> parts;
      for (char label : kTupleLabels) {
        const Line& line = lines[i++];
        auto [lab, body] = labelled(line, source);
        if (lab != std::string_view(&label, 1)) {
          throw FormatError(source, line.number,
                            fmt::format("expected '{}:' line, got '{}:'", label, lab));
        }
        auto vs = parse_vertices(body, line, source);
        check_columns(vs, p + 12, source, line.number);
        parts.push_back(std::move(vs));
      }
      const int at = lines[i - 5].number;
      const int index = static_cast<int>(tuples.size());
      BaseTuple t = rethrow_at(source, at, [&] {
        return BaseTuple{t1,
                         q,
                         index,
                         DiCycle(parts[0]),
                         DiPath(parts[1]),
                         DiPath(parts[2]),
                         DiPath(parts[3]),
                         DiPath(parts[4])};
      });
      if (static_cast<int>(t.short_cycle.length()) != t1) {
        throw FormatError(source, at,
                          fmt::format("tuple {}: X has length {}, expected t1={}", index,
                                      t.short_cycle.length(), t1));
      }
      if (static_cast<int>(t.out_path.length() + t.back_path.length()) != q) {
        throw FormatError(source, lines[i - 4].number,
                          fmt::format("tuple {}: B2 violated, len(Q)+len(R)={}+{} != q={}",
                                      index, t.out_path.length(), t.back_path.length(), q));
      }
      if (t.out_link.length() + t.back_link.length() != 8) {
        throw FormatError(source, lines[i - 2].number,
                          fmt::format("tuple {}: B2 violated, len(S)+len(T)={}+{} != 8", index,
                                      t.out_link.length(), t.back_link.length()));
      }
      rethrow_at(source, at, [&] {
        place(t.short_cycle, host);
        place(t.out_path, host);
        place(t.back_path, host);
        place(t.out_link, host);
        place(t.back_link, host);
        return 0;
      });
      tuples.push_back(std::move(t));
    }
    if (tuples.empty()) {
      throw FormatError(source, header.number, "zero tuples in case block");
    }
    if (static_cast<int>(tuples.size()) != r) {
      throw FormatError(source, header.number,
                        fmt::format("case t1={} q={} has {} tuples, expected {}", t1, q,
                                    tuples.size(), r));
    }
    table.emplace(std::pair{t1, q}, std::move(tuples));
  }
  return table;
}

CaseTable parse_case_table(std::istream& in, const std::string& source) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_case_table(std::string_view(buf.str()), source);
}

std::string serialize_case_table(const CaseTable& table) {
  std::string out;
  for (const auto& [key, tuples] : table) {
    const auto [t1, q] = key;
    if (!out.empty()) out += '\n';
    out += fmt::format("case t1={} q={} r={}\n", t1, q, tuples.size());
    for (const auto& t : tuples) {
      out += '\n';
      out += path_line('X', closed(t.short_cycle)) + '\n';
      out += path_line('Q', t.out_path.vertices()) + '\n';
      out += path_line('R', t.back_path.vertices()) + '\n';
      out += path_line('S', t.out_link.vertices()) + '\n';
      out += path_line('T', t.back_link.vertices()) + '\n';
    }
  }
  return out;
}

SpecialTable parse_special_table(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError(source, 1, "zero factorizations: file has no content");
  SpecialTable table;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& header = lines[i++];
    const auto h = parse_header(header, "special", {"t1", "t2"}, source);
    const int t1 = h[0], t2 = h[1];
    if (std::find(special_pairs().begin(), special_pairs().end(), std::pair{t1, t2}) ==
        special_pairs().end()) {
      throw FormatError(source, header.number,
                        fmt::format("t1={} t2={} is not a special case", t1, t2));
    }
    if (table.contains({t1, t2})) {
      throw FormatError(source, header.number,
                        fmt::format("duplicate special case t1={} t2={}", t1, t2));
    }
    const HostSpec host = host_w_star(t1 + t2);
    SpecialCaseFactorization sc{t1, t2, {}};
    while (i < lines.size() && !lines[i].text.starts_with("special")) {
      const Line& line = lines[i++];
      auto [label, body] = labelled(line, source);
      const auto expected = fmt::format("F{}", sc.factors.size());
      if (label != expected) {
        throw FormatError(source, line.number,
                          fmt::format("expected '{}:' line, got '{}:'", expected, label));
      }
      TwoFactor f{{}, host};
      std::size_t start = 0;
      while (start <= body.size()) {
        const auto semi = body.find(';', start);
        const auto piece = trim(body.substr(
            start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
        auto vs = parse_vertices(piece, line, source);
        check_columns(vs, host.columns(), source, line.number);
        f.cycles.push_back(rethrow_at(source, line.number,
                                      [&] { return place(DiCycle(std::move(vs)), host); }));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
      const auto lengths = f.lengths();
      if (lengths != std::vector<std::size_t>{static_cast<std::size_t>(std::min(t1, t2)),
                                              static_cast<std::size_t>(std::max(t1, t2))}) {
        throw FormatError(source, line.number,
                          fmt::format("factor {} does not have cycle lengths {{{}, {}}}",
                                      sc.factors.size(), t1, t2));
      }
      sc.factors.push_back(std::move(f));
    }
    const int r = ((t1 + t2) / 2) % 2 != 0 ? 9 : 7;
    if (static_cast<int>(sc.factors.size()) != r) {
      throw FormatError(source, header.number,
                        fmt::format("special case t1={} t2={} has {} factors, expected {}", t1,
                                    t2, sc.factors.size(), r));
    }
    table.emplace(std::pair{t1, t2}, std::move(sc));
  }
  return table;
}

SpecialTable parse_special_table(std::istream& in, const std::string& source) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_special_table(std::string_view(buf.str()), source);
}

std::string serialize_special_table(const SpecialTable& table) {
  std::string out;
  for (const auto& [key, sc] : table) {
    if (!out.empty()) out += '\n';
    out += fmt::format("special t1={} t2={}\n", sc.t1, sc.t2);
    for (std::size_t k = 0; k < sc.factors.size(); ++k) {
      out += fmt::format("F{}:", k);
      bool first = true;
      for (const auto& c : sc.factors[k].cycles) {
        if (!first) out += " ;";
        first = false;
        for (const auto& v : closed(c)) out += ' ' + to_token(v);
      }
      out += '\n';
    }
  }
  return out;
}

std::string checksum_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument(fmt::format("cannot open data file {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TupleStore TupleStore::load(const std::filesystem::path& dir) {
  TupleStore store;
  store.dir_ = dir;
  const auto tuple_path = dir / kTupleFile;
  const auto special_path = dir / kSpecialFile;
  const std::string tuples = read_file(tuple_path);
  const std::string specials = read_file(special_path);
  store.cases_ = parse_case_table(std::string_view(tuples), tuple_path.string());
  store.specials_ = parse_special_table(std::string_view(specials), special_path.string());
  store.checksums_[std::string(kTupleFile)] = checksum_hex(tuples);
  store.checksums_[std::string(kSpecialFile)] = checksum_hex(specials);
  return store;
}

TupleStore TupleStore::load_default() { return load(default_data_dir()); }

const std::vector<BaseTuple>& TupleStore::load_case(int t1, int q) const {
  const auto it = cases_.find({t1, q});
  if (it == cases_.end()) {
    throw InvalidArgument(fmt::format("unknown case t1={} q={}", t1, q));
  }
  return it->second;
}

const SpecialCaseFactorization& TupleStore::load_special(int t1, int t2) const {
  const auto it = specials_.find({t1, t2});
  if (it == specials_.end()) {
    throw InvalidArgument(fmt::format("t1={} t2={} is not a special case", t1, t2));
  }
  return it->second;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("OBK_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return OBK_SOURCE_DATA_DIR;
}

}  // namespace obk
