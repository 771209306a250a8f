#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obk/pathkit.hpp"

namespace obk {

/// One base tuple for a (t1, q) case. Subscripts are kept exactly as
/// tabulated, in Z; they are reduced only when placed into a host.
///
/// The long cycle built from a tuple runs out_path, the translated chain of
/// out_link copies, back_path, then the chain of back_link copies in
/// reverse. In the data files these are the X, Q, R, S and T lines.
struct BaseTuple {
  int t1 = 0;
  int q = 0;
  int index = 0;
  DiCycle short_cycle;  // X, length t1
  DiPath out_path;      // Q
  DiPath back_path;     // R
  DiPath out_link;      // S
  DiPath back_link;     // T

  /// p = (t1 + q) / 2.
  int half_order() const noexcept { return (t1 + q) / 2; }

  bool operator==(const BaseTuple&) const = default;
};

/// Number of tuples (equivalently, factors of W*) a case needs: 9 when
/// t1 + q = 2 (mod 4), 7 when t1 + q = 0 (mod 4).
int factor_count_for(int t1, int q);

/// The (t1, q) pairs for which base tuples are tabulated.
const std::vector<std::pair<int, int>>& known_cases();
/// The (t1, t2) pairs handled by explicit W* factorizations.
const std::vector<std::pair<int, int>>& special_pairs();

using CaseTable = std::map<std::pair<int, int>, std::vector<BaseTuple>>;

struct SpecialCaseFactorization {
  int t1 = 0;
  int t2 = 0;
  std::vector<TwoFactor> factors;

  bool operator==(const SpecialCaseFactorization& other) const;
};

using SpecialTable = std::map<std::pair<int, int>, SpecialCaseFactorization>;

/// Parse a base-tuple file. Format:
///
///   # comment
///   case t1=<int> q=<int> r=<int>
///   X: x4 x3 y5 y3 x4
///   Q: ...
///   R: ...
///   S: ...
///   T: ...
///   (r groups of five lines, blank lines ignored; more case blocks may follow)
///
/// Each tuple is schema-checked (lengths, subscript range, dipaths of
/// W*_{t1+q+24}). Throws FormatError with the offending line.
CaseTable parse_case_table(std::istream& in, const std::string& source = "<input>");
CaseTable parse_case_table(std::string_view text, const std::string& source = "<input>");
std::string serialize_case_table(const CaseTable& table);

/// Parse a special-case file: `special t1=<int> t2=<int>` followed by
/// `F<k>: <cycle> ; <cycle>` lines. Cycles are placed in W*_{t1+t2}.
SpecialTable parse_special_table(std::istream& in, const std::string& source = "<input>");
SpecialTable parse_special_table(std::string_view text, const std::string& source = "<input>");
std::string serialize_special_table(const SpecialTable& table);

/// FNV-1a 64-bit digest, hex encoded. Used to record data provenance.
std::string checksum_hex(std::string_view bytes);

/// Read-only view of the shipped data directory.
class TupleStore {
 public:
  static constexpr std::string_view kTupleFile = "base_tuples.txt";
  static constexpr std::string_view kSpecialFile = "special_cases.txt";

  /// Loads both data files from `dir`.
  static TupleStore load(const std::filesystem::path& dir);
  /// Loads from default_data_dir().
  static TupleStore load_default();

  /// Throws InvalidArgument for a pair outside known_cases().
  const std::vector<BaseTuple>& load_case(int t1, int q) const;
  /// Throws InvalidArgument for a pair outside special_pairs().
  const SpecialCaseFactorization& load_special(int t1, int t2) const;

  const CaseTable& cases() const noexcept { return cases_; }
  const SpecialTable& specials() const noexcept { return specials_; }
  /// File name -> checksum_hex of its bytes.
  const std::map<std::string, std::string>& checksums() const noexcept { return checksums_; }
  const std::filesystem::path& directory() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  CaseTable cases_;
  SpecialTable specials_;
  std::map<std::string, std::string> checksums_;
};

/// $OBK_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

}  // namespace obk
