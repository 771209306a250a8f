#include "obk/verify.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <set>

#include <fmt/core.h>

namespace obk {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingArc:
      return "MissingArc";
    case ViolationKind::DuplicateArc:
      return "DuplicateArc";
    case ViolationKind::ForeignArc:
      return "ForeignArc";
    case ViolationKind::NotSpanning:
      return "NotSpanning";
    case ViolationKind::BadCycleLengths:
      return "BadCycleLengths";
    case ViolationKind::OverlappingCycles:
      return "OverlappingCycles";
  }
  return "?";
}

std::string_view to_string(OracleResult::Status s) {
  switch (s) {
    case OracleResult::Status::Found:
      return "Found";
    case OracleResult::Status::ExhaustedNone:
      return "ExhaustedNone";
    case OracleResult::Status::Timeout:
      return "Timeout";
  }
  return "?";
}

bool VerifyOutcome::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

RawFactor raw(const TwoFactor& f) {
  RawFactor out;
  for (const auto& c : f.cycles) out.push_back(c.vertices());
  return out;
}

namespace {

void add(VerifyOutcome& out, ViolationKind kind, std::string witness, int factor = -1,
         std::optional<Arc> arc = std::nullopt, std::optional<Vertex> vertex = std::nullopt) {
  out.violations.push_back({kind, std::move(witness), factor, arc, vertex});
}

bool in_host(const HostSpec& h, Vertex v) {
  if (v.column < 0 || v.column >= h.columns()) return false;
  return h.rows() == 2 || v.row == Row::X;
}

// Column adjacency, written out again from the definitions.
bool columns_joined(const HostSpec& h, int a, int b) {
  const int m = h.columns();
  const int d = ((b - a) % m + m) % m;
  const int back = (m - d) % m;
  const auto dist3_from_even = [&] {
    return (d == 3 && a % 2 == 0) || (back == 3 && b % 2 == 0);
  };
  switch (h.kind()) {
    case HostKind::CompleteSymmetric:
      return true;
    case HostKind::Circulant: {
      const auto& s = h.distances();
      return std::find(s.begin(), s.end(), std::min(d, back)) != s.end();
    }
    case HostKind::CirculantOneThreeEven:
      return std::min(d, back) == 1 || dist3_from_even();
    case HostKind::BlownCycle: {
      const auto& order = h.column_order();
      const auto ia = std::find(order.begin(), order.end(), a) - order.begin();
      const auto ib = std::find(order.begin(), order.end(), b) - order.begin();
      const long step = ((ib - ia) % m + m) % m;
      return step == 1 || step == m - 1;
    }
    case HostKind::WStar:
      if (m % 2 != 0) return std::min(d, back) <= 2;
      return std::min(d, back) == 1 || dist3_from_even();
  }
  return false;
}

}  // namespace

bool host_contains_arc(const HostSpec& host, Vertex u, Vertex v) {
  if (!in_host(host, u) || !in_host(host, v) || u == v) return false;
  if (u.column == v.column) {
    return host.kind() == HostKind::CompleteSymmetric || host.kind() == HostKind::WStar ||
           (host.kind() == HostKind::BlownCycle && host.vertical());
  }
  return columns_joined(host, u.column, v.column);
}

namespace {

std::vector<Vertex> host_vertices(const HostSpec& h) {
  std::vector<Vertex> out;
  for (int c = 0; c < h.columns(); ++c) {
    out.push_back(x(c));
    if (h.rows() == 2) out.push_back(y(c));
  }
  return out;
}

std::string tokens(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto v : xs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "{" + s + "}";
}

void check_factor(const RawFactor& f, const HostSpec& host, const std::vector<std::size_t>& want,
                  int index, VerifyOutcome& out) {
  const std::string where = index >= 0 ? fmt::format("factor {}: ", index) : "";
  std::set<Vertex> covered;
  std::vector<std::size_t> lengths;
  for (const auto& c : f) {
    lengths.push_back(c.size());
    if (c.size() < 2) {
      add(out, ViolationKind::BadCycleLengths,
          where + fmt::format("cycle of length {}", c.size()), index);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex u = c[i];
      const Vertex v = c[(i + 1) % c.size()];
      if (!covered.insert(u).second) {
        add(out, ViolationKind::OverlappingCycles,
            where + fmt::format("vertex {} is visited twice", to_token(u)),
            index, std::nullopt, u);
      }
      if (c.size() >= 2 && !host_contains_arc(host, u, v)) {
        add(out, ViolationKind::ForeignArc,
            where + fmt::format("{} is not an arc of {}", to_string(Arc{u, v}), host.name()),
            index, Arc{u, v});
      }
    }
  }
  for (const auto& v : host_vertices(host)) {
    if (!covered.contains(v)) {
      add(out, ViolationKind::NotSpanning,
          where + fmt::format("vertex {} is not covered", to_token(v)),
          index, std::nullopt, v);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths != want) {
    add(out, ViolationKind::BadCycleLengths,
        where + fmt::format("cycle lengths {} but expected {}", tokens(lengths), tokens(want)),
        index);
  }
}

}  // namespace

VerifyOutcome verify_two_factor(const RawFactor& f, const HostSpec& host,
                                std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end());
  VerifyOutcome out;
  check_factor(f, host, lengths, -1, out);
  return out;
}

VerifyOutcome verify_two_factor(const TwoFactor& f, const HostSpec& host,
                                std::vector<std::size_t> lengths) {
  return verify_two_factor(raw(f), host, std::move(lengths));
}

VerifyOutcome verify_factorization(const std::vector<RawFactor>& factors, const HostSpec& host,
                                   std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end());
  VerifyOutcome out;
  std::map<Arc, int> owner;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int idx = static_cast<int>(i);
    check_factor(factors[i], host, lengths, idx, out);
    for (const auto& c : factors[i]) {
      for (std::size_t j = 0; j < c.size() && c.size() >= 2; ++j) {
        const Arc a{c[j], c[(j + 1) % c.size()]};
        auto [it, fresh] = owner.emplace(a, idx);
        if (!fresh) {
          add(out, ViolationKind::DuplicateArc,
              fmt::format("{} is used by factors {} and {}", to_string(a), it->second, idx), idx,
              a);
        }
      }
    }
  }
  const auto vs = host_vertices(host);
  std::size_t host_arcs = 0;
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      if (!host_contains_arc(host, u, v)) continue;
      ++host_arcs;
      if (!owner.contains(Arc{u, v})) {
        add(out, ViolationKind::MissingArc,
            fmt::format("{} is in no factor", to_string(Arc{u, v})), -1,
            Arc{u, v});
      }
    }
  }
  const std::size_t per_factor = vs.size();
  if (per_factor == 0 || host_arcs % per_factor != 0 ||
      factors.size() != host_arcs / per_factor) {
    const bool few = per_factor == 0 || factors.size() * per_factor < host_arcs;
    add(out, few ? ViolationKind::MissingArc : ViolationKind::DuplicateArc,
        fmt::format("{} factors given; {} has {} arcs, so {} are needed", factors.size(),
        host.name(), host_arcs, per_factor ? host_arcs / per_factor : 0));
  }
  return out;
}

VerifyOutcome verify_factorization(const std::vector<TwoFactor>& factors, const HostSpec& host,
                                   std::vector<std::size_t> lengths) {
  std::vector<RawFactor> rs;
  for (const auto& f : factors) rs.push_back(raw(f));
  return verify_factorization(rs, host, std::move(lengths));
}

namespace {

using ArcSet = std::bitset<128>;

struct Candidate {
  ArcSet arcs;
  std::vector<int> succ;
};

// Every permutation of 0..n-1 whose cycle type is `lengths`.
void enumerate(int n, std::multiset<int> remaining, std::vector<int>& succ,
               std::vector<char>& used, std::vector<Candidate>& out) {
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[v]) {
      start = v;
      break;
    }
  }
  if (start < 0) {
    Candidate c{{}, succ};
    for (int v = 0; v < n; ++v) c.arcs.set(v * n + succ[v]);
    out.push_back(std::move(c));
    return;
  }
  std::set<int> tried;
  for (int len : remaining) {
    if (!tried.insert(len).second) continue;
    auto rest = remaining;
    rest.erase(rest.find(len));
    // Extend a cycle from `start` through len-1 further unused vertices.
    std::vector<int> path{start};
    used[start] = 1;
    auto grow = [&](auto&& self) -> void {
      if (static_cast<int>(path.size()) == len) {
        for (std::size_t i = 0; i < path.size(); ++i) succ[path[i]] = path[(i + 1) % path.size()];
        enumerate(n, rest, succ, used, out);
        return;
      }
      for (int v = start + 1; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        self(self);
        path.pop_back();
        used[v] = 0;
      }
    };
    grow(grow);
    used[start] = 0;
  }
}

}  // namespace

OracleResult oracle_search(const std::vector<int>& lengths, std::uint64_t budget) {
  for (int len : lengths) {
    if (len < 2) throw InvalidArgument(fmt::format("cycle length {} is below 2", len));
  }
  const int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (n < 2 || n > 10) {
    throw InvalidArgument(fmt::format("oracle handles 2 <= n <= 10, got n = {}", n));
  }

  std::vector<Candidate> cands;
  std::vector<int> succ(n, -1);
  std::vector<char> used(n, 0);
  enumerate(n, std::multiset<int>(lengths.begin(), lengths.end()), succ, used, cands);

  // Fixed first factor: consecutive blocks 0..l1-1, l1..l1+l2-1, ...
  auto sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> first(n);
  for (int s = 0, i = 0; i < static_cast<int>(sorted.size()); s += sorted[i++]) {
    for (int j = 0; j < sorted[i]; ++j) first[s + j] = s + (j + 1) % sorted[i];
  }
  const auto first_it = std::find_if(cands.begin(), cands.end(),
                                     [&](const Candidate& c) { return c.succ == first; });
  if (first_it == cands.end()) throw InternalError("oracle lost its fixed first factor");

  const int arcs = n * n;
  std::vector<std::vector<int>> by_arc(arcs);
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    for (int a = 0; a < arcs; ++a) {
      if (cands[i].arcs.test(a)) by_arc[a].push_back(i);
    }
  }
  ArcSet all;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) all.set(u * n + v);
    }
  }

  OracleResult result;
  std::vector<int> chosen{static_cast<int>(first_it - cands.begin())};
  bool timed_out = false;
  auto search = [&](auto&& self, const ArcSet& covered) -> bool {
    if (++result.nodes > budget) {
      timed_out = true;
      return false;
    }
    if (covered == all) return true;
    int arc = 0;
    while (covered.test(arc) || !all.test(arc)) ++arc;
    for (int i : by_arc[arc]) {
      if ((cands[i].arcs & covered).any()) continue;
      chosen.push_back(i);
      if (self(self, covered | cands[i].arcs)) return true;
      chosen.pop_back();
      if (timed_out) return false;
    }
    return false;
  };

  if (search(search, first_it->arcs)) {
    result.status = OracleResult::Status::Found;
    const HostSpec host = complete_symmetric(n);
    for (int i : chosen) {
      TwoFactor f{{}, host};
      std::vector<char> seen(n, 0);
      for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> cyc;
        for (int v = s; !seen[v]; v = cands[i].succ[v]) {
          seen[v] = 1;
          cyc.push_back(x(v));
        }
        f.cycles.emplace_back(std::move(cyc));
      }
      result.factors.push_back(std::move(f));
    }
  } else {
    result.status = timed_out ? OracleResult::Status::Timeout : OracleResult::Status::ExhaustedNone;
  }
  return result;
}

}  // namespace obk
