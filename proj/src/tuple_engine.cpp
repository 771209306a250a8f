#include "obk/tuple_engine.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace obk {

namespace {

std::set<Vertex> columns_set(int lo, int hi, int m) {
  std::set<Vertex> out;
  for (int c = lo; c <= hi; ++c) {
    out.insert(x(mod(c, m)));
    out.insert(y(mod(c, m)));
  }
  return out;
}

std::string tokens(const std::vector<Vertex>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_token(v);
  return s;
}

// Vertices of `vs` whose column lies outside [lo, hi], or inside `banned`.
std::vector<Vertex> outside(const std::vector<Vertex>& vs, int lo, int hi,
                            std::initializer_list<int> banned = {}) {
  std::vector<Vertex> out;
  for (const auto& v : vs) {
    const bool is_banned = std::find(banned.begin(), banned.end(), v.column) != banned.end();
    if (v.column < lo || v.column > hi || is_banned) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> shared(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::set<Vertex> sa(a.begin(), a.end());
  std::vector<Vertex> out;
  for (const auto& v : b) {
    if (sa.contains(v)) out.push_back(v);
  }
  return out;
}

// Try a (cyclic) concatenation; on failure return the message.
template <typename Result>
std::optional<std::string> try_concat(const std::vector<DiPath>& seq, bool cyclic,
                                      std::optional<Result>* out = nullptr) {
  try {
    if (cyclic) {
      auto c = cyclic_concatenate(seq);
      if constexpr (std::is_same_v<Result, DiCycle>) {
        if (out) *out = std::move(c);
      }
    } else {
      auto p = concatenate(seq);
      if constexpr (std::is_same_v<Result, DiPath>) {
        if (out) *out = std::move(p);
      }
    }
  } catch (const Error& e) {
    return e.what();
  }
  return std::nullopt;
}

void fail(ConditionResult& r, std::string detail, std::vector<Vertex> vs = {}) {
  if (r.pass) {
    r.pass = false;
    r.detail = std::move(detail);
  } else {
    r.detail += "; " + detail;
  }
  r.vertices.insert(r.vertices.end(), vs.begin(), vs.end());
}

}  // namespace

std::set<Vertex> RegionSet::intersection(int i, int j) const {
  std::set<Vertex> out;
  std::set_intersection(regions.at(i).begin(), regions.at(i).end(), regions.at(j).begin(),
                        regions.at(j).end(), std::inserter(out, out.begin()));
  return out;
}

RegionSet regions(int p, int k, int m) {
  if (p < 2 || k < 0 || m != p + 4 * k) {
    throw InvalidArgument(fmt::format("regions need p >= 2, k >= 0, m = p+4k; got {} {} {}",
                                      p, k, m));
  }
  RegionSet rs{p, k, m, {}, {}};
  rs.regions.push_back(columns_set(0, p + 1, m));
  for (int j = 1; j <= k; ++j) {
    rs.regions.push_back(columns_set(p + 4 * j - 4, p + 4 * j + 1, m));
  }
  rs.v0_dagger = columns_set(2, p - 1, m);
  return rs;
}

std::string_view to_string(Condition c) {
  static constexpr std::array<std::string_view, 6> names = {"B1", "B2", "B3",
                                                            "B4", "B5", "B6"};
  return names[static_cast<std::size_t>(c)];
}

bool ValidationReport::pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ConditionResult& r) { return r.pass; });
}

ValidationReport validate_base_tuple(const BaseTuple& t) {
  ValidationReport rep;
  rep.t1 = t.t1;
  rep.q = t.q;
  rep.index = t.index;
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    rep.results[i].condition = static_cast<Condition>(i);
  }
  auto& b1 = rep.results[0];
  auto& b2 = rep.results[1];
  auto& b3 = rep.results[2];
  auto& b4 = rep.results[3];
  auto& b5 = rep.results[4];
  auto& b6 = rep.results[5];

  const int p = t.half_order();
  const int M = p + 12;
  const auto& X = t.short_cycle.vertices();
  const auto& Q = t.out_path.vertices();
  const auto& R = t.back_path.vertices();
  const auto& S = t.out_link.vertices();
  const auto& T = t.back_link.vertices();

  // Region containments, on the tabulated subscripts.
  if (auto bad = outside(X, 2, p - 1); !bad.empty()) {
    fail(b1, fmt::format("X leaves columns 2..{}: {}", p - 1, tokens(bad)), bad);
  }
  if (auto bad = outside(Q, 0, p + 1, {0, 1}); !bad.empty()) {
    fail(b1, fmt::format("Q leaves columns 2..{}: {}", p + 1, tokens(bad)), bad);
  }
  if (auto bad = outside(R, 0, p + 1, {p, p + 1}); !bad.empty()) {
    fail(b1, fmt::format("R leaves columns 0..{}: {}", p - 1, tokens(bad)), bad);
  }
  if (auto bad = outside(S, p, p + 5); !bad.empty()) {
    fail(b1, fmt::format("S leaves columns {}..{}: {}", p, p + 5, tokens(bad)), bad);
  }
  if (auto bad = outside(T, p, p + 5); !bad.empty()) {
    fail(b1, fmt::format("T leaves columns {}..{}: {}", p, p + 5, tokens(bad)), bad);
  }

  if (static_cast<int>(t.short_cycle.length()) != t.t1) {
    fail(b2, fmt::format("len(X) = {} but t1 = {}", t.short_cycle.length(), t.t1));
  }
  if (static_cast<int>(t.out_path.length() + t.back_path.length()) != t.q) {
    fail(b2, fmt::format("len(Q)+len(R) = {}+{} but q = {}", t.out_path.length(),
                         t.back_path.length(), t.q));
  }
  if (t.out_link.length() + t.back_link.length() != 8) {
    fail(b2, fmt::format("len(S)+len(T) = {}+{} but must be 8", t.out_link.length(),
                         t.back_link.length()));
  }

  // Remaining conditions live in W*_{t1+q+24}.
  const auto red = [&](const DiPath& path, int shift) { return translate(path, shift, M); };
  std::vector<Vertex> xm;
  for (const auto& v : X) xm.push_back({mod(v.column, M), v.row});
  const DiPath q0 = red(t.out_path, 0);
  const DiPath r0 = red(t.back_path, 0);
  const DiPath s0 = red(t.out_link, 0);
  const DiPath t0 = red(t.back_link, 0);

  if (auto sv = shared(xm, q0.vertices()); !sv.empty()) {
    fail(b3, "X meets Q at " + tokens(sv), sv);
  }
  if (auto sv = shared(xm, r0.vertices()); !sv.empty()) {
    fail(b3, "X meets R at " + tokens(sv), sv);
  }
  if (auto sv = shared(q0.vertices(), r0.vertices()); !sv.empty()) {
    fail(b3, "Q meets R at " + tokens(sv), sv);
  }

  if (auto err = try_concat<DiCycle>({q0, red(t.back_path, p)}, true)) {
    fail(b4, "(Q, rho^p R) does not cyclically concatenate: " + *err);
  }

  if (auto err = try_concat<DiPath>({t0, q0, s0}, false)) {
    fail(b5, "(T, Q, S) does not concatenate: " + *err);
  }
  if (auto err = try_concat<DiPath>(
          {red(t.out_link, -p - 4), r0, red(t.back_link, -p - 4)}, false)) {
    fail(b5, "(rho^{-p-4} S, R, rho^{-p-4} T) does not concatenate: " + *err);
  }

  std::optional<DiPath> ss, tt;
  if (auto err = try_concat<DiPath>({s0, red(t.out_link, 4)}, false, &ss)) {
    fail(b6, "(S, rho^4 S) does not concatenate: " + *err);
  }
  if (auto err = try_concat<DiPath>({red(t.back_link, 4), t0}, false, &tt)) {
    fail(b6, "(rho^4 T, T) does not concatenate: " + *err);
  }
  if (ss && tt) {
    if (auto sv = shared(ss->vertices(), tt->vertices()); !sv.empty()) {
      fail(b6, "(S, rho^4 S) and (rho^4 T, T) share " + tokens(sv), sv);
    }
  }
  return rep;
}

TwoFactor build_factor(const BaseTuple& t, int k) {
  if (k < 0) throw InvalidArgument(fmt::format("k must be >= 0, got {}", k));
  const int m = t.half_order() + 4 * k;
  const HostSpec host = host_w_star(2 * m);
  std::vector<DiPath> seq;
  seq.push_back(translate(t.out_path, 0, m));
  for (int j = 1; j <= k; ++j) seq.push_back(translate(t.out_link, 4 * (j - 1), m));
  seq.push_back(translate(t.back_path, 0, m));
  for (int j = k; j >= 1; --j) seq.push_back(translate(t.back_link, 4 * (j - 1), m));

  DiCycle long_cycle = place(cyclic_concatenate(seq), host);
  DiCycle short_cycle = place(t.short_cycle, host);
  if (!vertex_disjoint(DiPath(short_cycle.vertices()), DiPath(long_cycle.vertices()))) {
    throw InternalError(fmt::format("tuple ({},{})#{}: X meets the long cycle at k={}", t.t1,
                                    t.q, t.index, k));
  }
  return TwoFactor{{std::move(short_cycle), std::move(long_cycle)}, host};
}

std::string HypothesisFailure::describe() const {
  if (check == 'a') {
    return fmt::format("factors {} and {} at k=2 share arc {}", a, b, to_string(arc));
  }
  return fmt::format("Q_{} and rho^p R_{} share arc {}", a, b, to_string(arc));
}

namespace {

void require_case_set(const std::vector<BaseTuple>& tuples) {
  if (tuples.empty()) throw InvalidArgument("no base tuples given");
  const int t1 = tuples.front().t1;
  const int q = tuples.front().q;
  for (const auto& t : tuples) {
    if (t.t1 != t1 || t.q != q) {
      throw InvalidArgument("base tuples from different cases cannot be assembled together");
    }
  }
  const int r = factor_count_for(t1, q);
  if (static_cast<int>(tuples.size()) != r) {
    throw InvalidArgument(fmt::format("case ({},{}) needs r={} tuples, got {}", t1, q, r,
                                      tuples.size()));
  }
}

std::optional<Arc> first_common(const std::vector<Arc>& a, const std::vector<Arc>& b) {
  std::set<Arc> sa(a.begin(), a.end());
  for (const auto& arc : b) {
    if (sa.contains(arc)) return arc;
  }
  return std::nullopt;
}

}  // namespace

std::vector<HypothesisFailure> check_assembly_hypotheses(const std::vector<BaseTuple>& tuples) {
  require_case_set(tuples);
  std::vector<HypothesisFailure> out;
  const int r = static_cast<int>(tuples.size());

  std::vector<std::vector<Arc>> at2;
  for (const auto& t : tuples) at2.push_back(build_factor(t, 2).arcs());
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (auto arc = first_common(at2[a], at2[b])) out.push_back({'a', a, b, *arc});
    }
  }

  const int p = tuples.front().half_order();
  const int M = p + 12;
  for (int a = 0; a < r; ++a) {
    const auto qa = translate(tuples[a].out_path, 0, M).arcs();
    for (int b = 0; b < r; ++b) {
      const auto rb = translate(tuples[b].back_path, p, M).arcs();
      if (auto arc = first_common(qa, rb)) out.push_back({'b', a, b, *arc});
    }
  }
  return out;
}

std::vector<TwoFactor> assemble_w_factorization(const std::vector<BaseTuple>& tuples, int k) {
  if (auto failures = check_assembly_hypotheses(tuples); !failures.empty()) {
    throw HypothesisError(failures.front());
  }
  std::vector<TwoFactor> factors;
  for (const auto& t : tuples) factors.push_back(build_factor(t, k));

  // Direct check at the target order, independent of the hypotheses.
  const HostSpec& host = factors.front().host;
  std::set<Arc> seen;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& arc : factors[i].arcs()) {
      if (!host.has_arc(arc) || !seen.insert(arc).second) {
        throw InternalError(fmt::format("assembly at k={} reuses or leaves the host at {}", k,
                                        to_string(arc)));
      }
    }
  }
  if (seen.size() != host.arc_count()) {
    throw InternalError(fmt::format("assembly at k={} covers {} of {} arcs", k, seen.size(),
                                    host.arc_count()));
  }
  return factors;
}

}  // namespace obk
