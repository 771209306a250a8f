#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "obk/digraph.hpp"
#include "obk/error.hpp"

namespace obk {

/// A directed path v_0 v_1 ... v_t with t >= 1 and pairwise distinct
/// vertices. Subscripts are plain integers; they are reduced modulo a host's
/// column count only when the path is placed into that host.
class DiPath {
 public:
  /// Throws InvalidArgument if fewer than two vertices or a vertex repeats.
  explicit DiPath(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size() - 1; }
  Vertex source() const noexcept { return vertices_.front(); }
  Vertex terminal() const noexcept { return vertices_.back(); }
  std::vector<Arc> arcs() const;

  bool operator==(const DiPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// A directed cycle stored as its vertex sequence without the closing
/// repeat. Length (= number of vertices) is at least 2.
class DiCycle {
 public:
  /// Accepts both open (v_0..v_{t-1}) and closed (v_0..v_{t-1} v_0) lists.
  explicit DiCycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  std::vector<Arc> arcs() const;
  /// Same cycle rotated to start at its least vertex.
  DiCycle canonical() const;
  DiCycle reversed() const;

  /// Equality of the stored representation (rotation-sensitive).
  bool operator==(const DiCycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// A claimed directed 2-factor of `host`. The invariants (spanning,
/// vertex-disjoint, arcs in host) are established by verification, not by
/// construction, so that corrupted factors remain representable.
struct TwoFactor {
  std::vector<DiCycle> cycles;
  HostSpec host;

  std::vector<Arc> arcs() const;
  /// Cycle lengths, sorted ascending.
  std::vector<std::size_t> lengths() const;
};

/// Raised when a sequence of paths fails to (cyclically) concatenate.
class ConcatenationError : public Error {
 public:
  enum class Reason { EndpointMismatch, VertexReuse, Empty };

  ConcatenationError(Reason reason, std::size_t index, Vertex vertex,
                     const std::string& what)
      : Error(what), reason_(reason), index_(index), vertex_(vertex) {}

  Reason reason() const noexcept { return reason_; }
  /// Sequence index of the offending path.
  std::size_t index() const noexcept { return index_; }
  /// The vertex that fails to match or is reused.
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Reason reason_;
  std::size_t index_;
  Vertex vertex_;
};

/// Shift every subscript by `shift` in Z (no reduction).
DiPath translate(const DiPath& path, int shift);
/// Shift every subscript by `shift` modulo `modulus`.
DiPath translate(const DiPath& path, int shift, int modulus);
/// Shift within a host and reduce modulo its column count. Even shifts of a
/// W* host, and every shift of an odd-order W* host, are automorphisms; an
/// odd shift of an even-order W* host is rejected. For other hosts the image
/// arcs are checked. Throws InvalidArgument on violation.
DiPath translate(const DiPath& path, int shift, const HostSpec& host);

/// Reduce subscripts modulo the host's column count and check that every arc
/// lies in the host. Throws InvalidArgument otherwise.
DiPath place(const DiPath& path, const HostSpec& host);
DiCycle place(const DiCycle& cycle, const HostSpec& host);

/// Concatenation of P^1..P^k: t(P^i) = s(P^{i+1}) and no other shared vertex.
DiPath concatenate(std::span<const DiPath> seq);
/// Cyclic concatenation: as above plus t(P^k) = s(P^1).
DiCycle cyclic_concatenate(std::span<const DiPath> seq);

/// True iff the two paths share no vertex.
bool vertex_disjoint(const DiPath& a, const DiPath& b);

std::string to_string(const DiPath& path);
std::string to_string(const DiCycle& cycle);

}  // namespace obk
