#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obk/digraph.hpp"

namespace obk {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// An undirected Hamilton cycle of K_m, as a vertex order over Z_m.
using HamCycle = std::vector<int>;

/// K_m split into the reserved circulant and Hamilton cycles.
struct KmSplit {
  int m = 0;
  HostSpec reserved;  // Circ(m,{1,2}) for m odd, Circ(m,{1,3e}) for m even
  std::vector<HamCycle> ham_cycles;
  std::string origin;  // how the cycles were obtained, for provenance

  bool operator==(const KmSplit& o) const {
    return m == o.m && reserved == o.reserved && ham_cycles == o.ham_cycles;
  }
};

/// Two edge-disjoint Hamilton cycles whose union is Circ(m,{a,b}).
/// Pre: a != b in 1..(m-1)/2 and gcd(a,b,m) = 1; throws InvalidArgument
/// otherwise, SearchExhausted if the search gives up.
std::array<HamCycle, 2> ham_pair_circulant(int m, int a, int b,
                                           std::uint64_t seed = kDefaultSeed);

/// (0, c, 2c, ...). Throws InvalidArgument unless gcd(c, m) = 1.
HamCycle single_class_cycle(int m, int c);

/// The distance classes used for odd m, in order: singletons and pairs.
std::vector<std::vector<int>> odd_class_family(int m);

KmSplit decompose_k_odd(int m, std::uint64_t seed = kDefaultSeed);

struct EvenOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Directory holding km_<m>.txt files; consulted first when set.
  std::optional<std::filesystem::path> cache_dir;
};

KmSplit decompose_k_even(int m, const EvenOptions& opts = {});

/// Dispatches on the parity of m.
KmSplit decompose_km(int m, const EvenOptions& opts = {});

/// Throws InternalError unless the cycles are Hamiltonian, pairwise
/// edge-disjoint, avoid the reserved graph, and together with it cover
/// every edge of K_m exactly once.
void verify_km_split(const KmSplit& split);

/// Normal form: starts at 0, second vertex smaller than the last.
HamCycle canonical_cycle(HamCycle c);

/// Cache file: "km <m>" then one cycle per line.
std::string serialize_km_split(const KmSplit& split);
/// Parses and re-verifies; throws FormatError on any problem.
KmSplit parse_km_split(std::string_view text, const std::string& source = "<input>");
std::filesystem::path km_cache_path(const std::filesystem::path& dir, int m);

/// Decomposes a 2k-regular graph on Z_m, given as k edge-disjoint 2-factors,
/// into k Hamilton cycles by swapping alternating 4-cycles between factors.
/// Each factor is a list of m edges. Throws SearchExhausted on failure.
std::vector<HamCycle> hamilton_decompose(int m,
                                         const std::vector<std::vector<std::array<int, 2>>>& factors,
                                         std::uint64_t seed);

}  // namespace obk
