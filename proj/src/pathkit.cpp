#include "obk/pathkit.hpp"

#include <algorithm>
#include <set>

#include <fmt/core.h>

namespace obk {

namespace {

std::string join_tokens(const std::vector<Vertex>& vs) {
  std::string out;
  for (const Vertex& v : vs) {
    if (!out.empty()) out += ' ';
    out += to_token(v);
  }
  return out;
}

void require_distinct(const std::vector<Vertex>& vs, std::string_view what) {
  std::set<Vertex> seen;
  for (const Vertex& v : vs) {
    if (!seen.insert(v).second) {
      throw InvalidArgument(
          fmt::format("{} repeats vertex {}: {}", what, to_token(v), join_tokens(vs)));
    }
  }
}

std::vector<Vertex> shifted(const std::vector<Vertex>& vs, int shift, int modulus) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (const Vertex& v : vs) {
    const int c = v.column + shift;
    out.push_back({modulus > 0 ? mod(c, modulus) : c, v.row});
  }
  return out;
}

void require_arcs_in(const HostSpec& host, const std::vector<Arc>& arcs,
                     std::string_view what) {
  for (const Arc& a : arcs) {
    if (!host.has_arc(a)) {
      throw InvalidArgument(
          fmt::format("{} uses {} which is not an arc of {}", what, to_string(a), host.name()));
    }
  }
}

// Merge a sequence into a single vertex list, sharing junction vertices.
std::vector<Vertex> merge(std::span<const DiPath> seq, bool cyclic) {
  if (seq.empty()) {
    throw ConcatenationError(ConcatenationError::Reason::Empty, 0, {},
                             "cannot concatenate an empty sequence");
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i].terminal() != seq[i + 1].source()) {
      throw ConcatenationError(
          ConcatenationError::Reason::EndpointMismatch, i, seq[i].terminal(),
          fmt::format("endpoint mismatch at index {}: path ends at {} but next starts at {}", i,
                      to_token(seq[i].terminal()), to_token(seq[i + 1].source())));
    }
  }
  if (cyclic && seq.back().terminal() != seq.front().source()) {
    throw ConcatenationError(
        ConcatenationError::Reason::EndpointMismatch, seq.size() - 1, seq.back().terminal(),
        fmt::format("endpoint mismatch at index {}: last path ends at {} but first starts at {}",
                    seq.size() - 1, to_token(seq.back().terminal()),
                    to_token(seq.front().source())));
  }

  std::vector<Vertex> merged = seq.front().vertices();
  std::set<Vertex> seen(merged.begin(), merged.end());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto& vs = seq[i].vertices();
    const bool closing = cyclic && i + 1 == seq.size();
    // Skip the shared source; on the closing path also skip the shared
    // terminal, which is the overall first vertex.
    const std::size_t end = closing ? vs.size() - 1 : vs.size();
    for (std::size_t j = 1; j < end; ++j) {
      if (!seen.insert(vs[j]).second) {
        throw ConcatenationError(
            ConcatenationError::Reason::VertexReuse, i, vs[j],
            fmt::format("vertex {} of path {} already appears earlier in the sequence",
                        to_token(vs[j]), i));
      }
      merged.push_back(vs[j]);
    }
  }
  return merged;
}

}  // namespace

DiPath::DiPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw InvalidArgument("a dipath needs at least two vertices");
  }
  require_distinct(vertices_, "dipath");
}

std::vector<Arc> DiPath::arcs() const {
  std::vector<Arc> out;
  out.reserve(length());
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[i + 1]});
  }
  return out;
}

DiCycle::DiCycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() >= 2 && vertices_.front() == vertices_.back()) {
    vertices_.pop_back();
  }
  if (vertices_.size() < 2) {
    throw InvalidArgument("a directed cycle needs at least two vertices");
  }
  require_distinct(vertices_, "directed cycle");
}

std::vector<Arc> DiCycle::arcs() const {
  std::vector<Arc> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return out;
}

DiCycle DiCycle::canonical() const {
  auto vs = vertices_;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  return DiCycle(std::move(vs));
}

DiCycle DiCycle::reversed() const {
  std::vector<Vertex> vs(vertices_.rbegin(), vertices_.rend());
  return DiCycle(std::move(vs));
}

std::vector<Arc> TwoFactor::arcs() const {
  std::vector<Arc> out;
  for (const auto& c : cycles) {
    auto a = c.arcs();
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::vector<std::size_t> TwoFactor::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.length());
  std::sort(out.begin(), out.end());
  return out;
}

DiPath translate(const DiPath& path, int shift) {
  return DiPath(shifted(path.vertices(), shift, 0));
}

DiPath translate(const DiPath& path, int shift, int modulus) {
  if (modulus <= 0) throw InvalidArgument("translation modulus must be positive");
  return DiPath(shifted(path.vertices(), shift, modulus));
}

DiPath translate(const DiPath& path, int shift, const HostSpec& host) {
  const int m = host.columns();
  if (host.kind() == HostKind::WStar && m % 2 == 0 && mod(shift, 2) != 0) {
    throw InvalidArgument(
        fmt::format("odd translation {} is not an automorphism of {}", shift, host.name()));
  }
  DiPath out(shifted(path.vertices(), shift, m));
  if (host.kind() != HostKind::WStar) {
    require_arcs_in(host, out.arcs(), "translated dipath");
  }
  return out;
}

DiPath place(const DiPath& path, const HostSpec& host) {
  DiPath out(shifted(path.vertices(), 0, host.columns()));
  require_arcs_in(host, out.arcs(), "dipath");
  return out;
}

DiCycle place(const DiCycle& cycle, const HostSpec& host) {
  DiCycle out(shifted(cycle.vertices(), 0, host.columns()));
  require_arcs_in(host, out.arcs(), "directed cycle");
  return out;
}

DiPath concatenate(std::span<const DiPath> seq) {
  return DiPath(merge(seq, false));
}

DiCycle cyclic_concatenate(std::span<const DiPath> seq) {
  return DiCycle(merge(seq, true));
}

bool vertex_disjoint(const DiPath& a, const DiPath& b) {
  std::set<Vertex> sa(a.vertices().begin(), a.vertices().end());
  return std::none_of(b.vertices().begin(), b.vertices().end(),
                      [&](const Vertex& v) { return sa.contains(v); });
}

std::string to_string(const DiPath& path) { return join_tokens(path.vertices()); }

std::string to_string(const DiCycle& cycle) {
  auto vs = cycle.vertices();
  vs.push_back(vs.front());
  return join_tokens(vs);
}

}  // namespace obk
