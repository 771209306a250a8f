#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace obk {

enum class Row : std::uint8_t { X = 0, Y = 1 };

/// A vertex of any host: a column (residue mod m once placed in a host) and
/// a row tag. Plain hosts on n vertices use row X only.
struct Vertex {
  int column = 0;
  Row row = Row::X;

  auto operator<=>(const Vertex&) const = default;
};

inline Vertex x(int column) { return {column, Row::X}; }
inline Vertex y(int column) { return {column, Row::Y}; }

/// "x7" / "y12".
std::string to_token(Vertex v);
/// Inverse of to_token; throws InvalidArgument on anything else.
Vertex parse_token(std::string_view token);

/// Least non-negative residue.
inline int mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

struct Arc {
  Vertex tail;
  Vertex head;

  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& arc);

enum class HostKind {
  CompleteSymmetric,
  Circulant,
  CirculantOneThreeEven,
  BlownCycle,
  WStar,
};

std::string_view to_string(HostKind kind);

/// Algebraic description of a symmetric host digraph. Membership is decided
/// from the parameters; no adjacency is stored except the column order of a
/// blown-up cycle. Every host here is symmetric: (u,v) is an arc iff (v,u) is.
class HostSpec {
 public:
  HostKind kind() const noexcept { return kind_; }

  /// Number of columns m (for plain hosts, the number of vertices).
  int columns() const noexcept { return columns_; }
  /// 1 for plain hosts, 2 for hosts on Z_m x {X, Y}.
  int rows() const noexcept { return rows_; }

  std::size_t vertex_count() const noexcept {
    return static_cast<std::size_t>(columns_) * static_cast<std::size_t>(rows_);
  }
  /// Closed-form arc census.
  std::size_t arc_count() const;
  std::size_t edge_count() const { return arc_count() / 2; }

  /// Circulant connection set (sorted); empty for other kinds.
  const std::vector<int>& distances() const noexcept { return distances_; }
  /// Column order along the blown-up cycle; empty for other kinds.
  const std::vector<int>& column_order() const noexcept { return order_; }
  /// Whether a blown-up cycle carries the vertical arcs x_a <-> y_a.
  bool vertical() const noexcept { return vertical_; }

  bool contains(Vertex v) const noexcept;
  bool has_arc(Vertex tail, Vertex head) const noexcept;
  bool has_arc(const Arc& a) const noexcept { return has_arc(a.tail, a.head); }

  /// Vertices in canonical order.
  std::vector<Vertex> vertices() const;
  /// Arcs in canonical (tail, head) order.
  std::vector<Arc> arcs() const;

  /// Short human-readable name, e.g. "W*_14" or "K*_14".
  std::string name() const;

  bool operator==(const HostSpec&) const = default;

  friend HostSpec complete_symmetric(int n, int rows);
  friend HostSpec circulant(int m, std::vector<int> distances);
  friend HostSpec circulant_one_three_even(int m);
  friend HostSpec blown_cycle(std::vector<int> column_order, bool vertical);
  friend HostSpec host_w_star(int two_m);

 private:
  HostSpec() = default;

  bool column_adjacent(int a, int b) const noexcept;

  HostKind kind_ = HostKind::CompleteSymmetric;
  int columns_ = 0;
  int rows_ = 1;
  std::vector<int> distances_;
  std::vector<int> order_;
  std::vector<int> position_;  // inverse of order_
  bool vertical_ = false;
};

/// K*_n. With rows = 2, n must be even and the vertices are x_a, y_a for
/// a in Z_{n/2} (the form K_{n/2} wr K_2 takes after relabeling).
HostSpec complete_symmetric(int n, int rows = 1);

/// Circ(m, S) as a symmetric digraph on x_0..x_{m-1}.
/// Requires S to be a non-empty subset of {1, ..., floor(m/2)}.
HostSpec circulant(int m, std::vector<int> distances);

/// Circ(m, {1, 3e}): edges {i, i+1} for all i and {i, i+3} for even i.
HostSpec circulant_one_three_even(int m);

/// (C wr E_2)*, or (C wr K_2)* when vertical is set, where C is the cycle
/// visiting the columns in column_order. column_order must be a permutation
/// of Z_m with m >= 3.
HostSpec blown_cycle(std::vector<int> column_order, bool vertical = false);

/// W*_{2m}: Circ(m,{1,2}) wr K_2 for m odd, Circ(m,{1,3e}) wr K_2 for m even,
/// symmetrically oriented. Requires two_m even and m >= 5.
HostSpec host_w_star(int two_m);

}  // namespace obk
