#include "obk/hamdecomp.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "obk/error.hpp"

namespace obk {

namespace {

using Edge = std::array<int, 2>;

// 2-regular graph on Z_m as a neighbour table.
struct Factor {
  std::vector<std::array<int, 2>> nb;

  bool adjacent(int u, int v) const { return nb[u][0] == v || nb[u][1] == v; }
  void relink(int u, int from, int to) {
    if (nb[u][0] == from) {
      nb[u][0] = to;
    } else {
      nb[u][1] = to;
    }
  }
  int cycle_count() const {
    const int m = static_cast<int>(nb.size());
    std::vector<char> seen(m, 0);
    int count = 0;
    for (int s = 0; s < m; ++s) {
      if (seen[s]) continue;
      ++count;
      int prev = -1, cur = s;
      while (!seen[cur]) {
        seen[cur] = 1;
        const int next = nb[cur][0] != prev ? nb[cur][0] : nb[cur][1];
        prev = cur;
        cur = next;
      }
    }
    return count;
  }
  HamCycle walk() const {
    HamCycle out{0};
    int prev = 0, cur = nb[0][0];
    while (cur != 0) {
      out.push_back(cur);
      const int next = nb[cur][0] != prev ? nb[cur][0] : nb[cur][1];
      prev = cur;
      cur = next;
    }
    return out;
  }
};

Factor to_factor(int m, const std::vector<Edge>& edges) {
  Factor f;
  f.nb.assign(m, {-1, -1});
  for (const auto& [u, v] : edges) {
    for (const auto& [a, b] : {Edge{u, v}, Edge{v, u}}) {
      if (a < 0 || a >= m || a == b) throw InvalidArgument("bad edge in 2-factor");
      if (f.nb[a][0] < 0) {
        f.nb[a][0] = b;
      } else if (f.nb[a][1] < 0) {
        f.nb[a][1] = b;
      } else {
        throw InvalidArgument(fmt::format("vertex {} has degree > 2 in a 2-factor", a));
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    if (f.nb[v][1] < 0) throw InvalidArgument(fmt::format("vertex {} has degree < 2", v));
  }
  return f;
}

std::vector<Edge> class_edges(int m, int d) {
  std::vector<Edge> out;
  for (int i = 0; i < m; ++i) out.push_back({i, (i + d) % m});
  return out;
}

std::set<Edge> cycle_edges(const HamCycle& c) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

bool in_reserved(const HostSpec& g, int a, int b) { return g.has_arc(x(a), x(b)); }

}  // namespace

HamCycle canonical_cycle(HamCycle c) {
  if (c.empty()) return c;
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

std::vector<HamCycle> hamilton_decompose(int m, const std::vector<std::vector<Edge>>& initial,
                                         std::uint64_t seed) {
  const int k = static_cast<int>(initial.size());
  if (k == 0) return {};
  std::vector<Factor> start;
  for (const auto& edges : initial) start.push_back(to_factor(m, edges));

  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
  constexpr int kRestarts = 50;
  const long budget = 4000L * m * std::max(k, 2);

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    auto fs = start;
    std::vector<int> cycles(k);
    int excess = 0;
    for (int i = 0; i < k; ++i) {
      cycles[i] = fs[i].cycle_count();
      excess += cycles[i] - 1;
    }
    for (long it = 0; it < budget && excess > 0; ++it) {
      // Favour factors that still have several cycles.
      int fi = pick(k);
      if (cycles[fi] == 1 && pick(4) != 0) continue;
      int gi = pick(k - 1 + (k == 1));
      if (k == 1) break;
      if (gi >= fi) ++gi;
      Factor& F = fs[fi];
      Factor& G = fs[gi];
      const int u = pick(m);
      const int v = F.nb[u][pick(2)];
      const int w = G.nb[v][pick(2)];
      if (w == u) continue;
      const int x = F.nb[w][pick(2)];
      if (x == v || x == u || !G.adjacent(x, u)) continue;

      // uv, wx in F and vw, xu in G trade places.
      const Factor saved_f = F, saved_g = G;
      F.relink(u, v, x);
      F.relink(v, u, w);
      F.relink(w, x, v);
      F.relink(x, w, u);
      G.relink(v, w, u);
      G.relink(w, v, x);
      G.relink(x, u, w);
      G.relink(u, x, v);
      const int cf = F.cycle_count(), cg = G.cycle_count();
      const int delta = (cf - cycles[fi]) + (cg - cycles[gi]);
      if (delta <= 0 || pick(100) == 0) {
        cycles[fi] = cf;
        cycles[gi] = cg;
        excess += delta;
      } else {
        F = saved_f;
        G = saved_g;
      }
    }
    if (excess == 0) {
      std::vector<HamCycle> out;
      for (const auto& f : fs) out.push_back(canonical_cycle(f.walk()));
      return out;
    }
  }
  throw SearchExhausted(
      fmt::format("no Hamilton decomposition found for a {}-regular graph on {} vertices", 2 * k,
                  m));
}

std::array<HamCycle, 2> ham_pair_circulant(int m, int a, int b, std::uint64_t seed) {
  const int top = (m - 1) / 2;
  if (a == b || a < 1 || b < 1 || a > top || b > top) {
    throw InvalidArgument(
        fmt::format("Circ({},{{{},{}}}) needs distinct distances in 1..{}", m, a, b, top));
  }
  if (std::gcd(std::gcd(a, b), m) != 1) {
    throw InvalidArgument(fmt::format("gcd({}, {}, {}) != 1", a, b, m));
  }
  if (std::gcd(a, m) == 1 && std::gcd(b, m) == 1) {
    return {single_class_cycle(m, a), single_class_cycle(m, b)};
  }
  auto cycles = hamilton_decompose(m, {class_edges(m, a), class_edges(m, b)}, seed);
  return {cycles[0], cycles[1]};
}

HamCycle single_class_cycle(int m, int c) {
  if (m < 3 || c < 1 || std::gcd(c, m) != 1) {
    throw InvalidArgument(fmt::format("Circ({},{{{}}}) is not a Hamilton cycle", m, c));
  }
  HamCycle out;
  for (int i = 0; i < m; ++i) out.push_back(static_cast<int>((1L * i * c) % m));
  return out;
}

std::vector<std::vector<int>> odd_class_family(int m) {
  if (m < 7 || m % 2 == 0) {
    throw InvalidArgument(fmt::format("odd K_m split needs m odd and >= 7, got {}", m));
  }
  if (m == 7) return {{3}};
  std::vector<std::vector<int>> out;
  int d = 3;
  if (m % 4 == 3) {
    out = {{3, 5}, {4}};
    d = 6;
  }
  for (; d + 1 <= (m - 1) / 2; d += 2) out.push_back({d, d + 1});
  return out;
}

KmSplit decompose_k_odd(int m, std::uint64_t seed) {
  KmSplit split{m, circulant(m, {1, 2}), {}, "odd class family"};
  for (const auto& cls : odd_class_family(m)) {
    if (cls.size() == 1) {
      split.ham_cycles.push_back(canonical_cycle(single_class_cycle(m, cls[0])));
    } else {
      for (auto& c : ham_pair_circulant(m, cls[0], cls[1], seed)) {
        split.ham_cycles.push_back(canonical_cycle(std::move(c)));
      }
    }
  }
  verify_km_split(split);
  return split;
}

std::filesystem::path km_cache_path(const std::filesystem::path& dir, int m) {
  return dir / fmt::format("km_{}.txt", m);
}

KmSplit decompose_k_even(int m, const EvenOptions& opts) {
  if (m < 8 || m % 2 != 0) {
    throw InvalidArgument(fmt::format("even K_m split needs m even and >= 8, got {}", m));
  }
  if (opts.cache_dir) {
    const auto path = km_cache_path(*opts.cache_dir, m);
    if (std::ifstream in(path); in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      KmSplit split = parse_km_split(buf.str(), path.string());
      if (split.m != m) {
        throw FormatError(path.string(), 1, fmt::format("cache holds m={}, wanted {}", split.m, m));
      }
      split.origin = fmt::format("cache {}", path.filename().string());
      return split;
    }
  }
  // K_m minus Circ(m,{1,3e}): distance classes 2, 4, ..., m/2-1 are 2-factors;
  // the odd-start distance-3 edges plus the diameters form the last one.
  std::vector<std::vector<Edge>> factors;
  for (int d = 2; d < m / 2; ++d) {
    if (d != 3) factors.push_back(class_edges(m, d));
  }
  std::vector<Edge> last;
  for (int i = 1; i < m; i += 2) last.push_back({i, (i + 3) % m});
  for (int i = 0; i < m / 2; ++i) last.push_back({i, i + m / 2});
  factors.push_back(std::move(last));

  KmSplit split{m, circulant_one_three_even(m), hamilton_decompose(m, factors, opts.seed),
                fmt::format("search seed={}", opts.seed)};
  verify_km_split(split);
  return split;
}

KmSplit decompose_km(int m, const EvenOptions& opts) {
  return m % 2 != 0 ? decompose_k_odd(m, opts.seed) : decompose_k_even(m, opts);
}

void verify_km_split(const KmSplit& split) {
  const int m = split.m;
  const std::size_t want = m % 2 != 0 ? (m - 5) / 2 : (m - 4) / 2;
  if (split.ham_cycles.size() != want) {
    throw InternalError(fmt::format("K_{} split has {} Hamilton cycles, expected {}", m,
                                    split.ham_cycles.size(), want));
  }
  std::set<Edge> used;
  for (std::size_t i = 0; i < split.ham_cycles.size(); ++i) {
    const auto& c = split.ham_cycles[i];
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    if (sorted != all) {
      throw InternalError(fmt::format("cycle {} of the K_{} split is not Hamiltonian", i, m));
    }
    for (const auto& e : cycle_edges(c)) {
      if (in_reserved(split.reserved, e[0], e[1])) {
        throw InternalError(fmt::format("cycle {} uses edge {}{} of the reserved graph", i,
                                        e[0], e[1]));
      }
      if (!used.insert(e).second) {
        throw InternalError(fmt::format("edge {}-{} appears in two Hamilton cycles", e[0], e[1]));
      }
    }
  }
  const std::size_t total = used.size() + split.reserved.edge_count();
  if (total != static_cast<std::size_t>(m) * (m - 1) / 2) {
    throw InternalError(
        fmt::format("K_{} split covers {} of {} edges", m, total, m * (m - 1) / 2));
  }
}

std::string serialize_km_split(const KmSplit& split) {
  std::string out = fmt::format("km {}\n", split.m);
  for (const auto& c : split.ham_cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out += fmt::format("{}{}", i ? " " : "", c[i]);
    out += '\n';
  }
  return out;
}

KmSplit parse_km_split(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  std::optional<KmSplit> split;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!split) {
      int m = 0;
      if (words.size() != 2 || words[0] != "km" ||
          !(std::istringstream(words[1]) >> m) || m < 7) {
        throw FormatError(source, number, "expected header 'km <m>'");
      }
      split = KmSplit{m, m % 2 != 0 ? circulant(m, {1, 2}) : circulant_one_three_even(m), {}, ""};
      continue;
    }
    HamCycle c;
    for (const auto& w : words) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(w, &used);
      } catch (const std::exception&) {
      }
      if (used != w.size() || v < 0 || v >= split->m) {
        throw FormatError(source, number, fmt::format("bad vertex '{}'", w));
      }
      c.push_back(v);
    }
    split->ham_cycles.push_back(std::move(c));
  }
  if (!split) throw FormatError(source, number, "missing 'km <m>' header");
  try {
    verify_km_split(*split);
  } catch (const InternalError& e) {
    throw FormatError(source, number, e.what());
  }
  return *split;
}

}  // namespace obk
