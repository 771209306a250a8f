#include "obk/digraph.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/core.h>

#include "obk/error.hpp"

namespace obk {

std::string to_token(Vertex v) {
  return fmt::format("{}{}", v.row == Row::X ? 'x' : 'y', v.column);
}

Vertex parse_token(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) {
    throw InvalidArgument(fmt::format("bad vertex token '{}'", token));
  }
  int column = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, column);
  if (ec != std::errc{} || ptr != last || column < 0 || token[1] == '+') {
    throw InvalidArgument(fmt::format("bad vertex token '{}'", token));
  }
  return {column, token[0] == 'x' ? Row::X : Row::Y};
}

std::string to_string(const Arc& arc) {
  return fmt::format("({},{})", to_token(arc.tail), to_token(arc.head));
}

std::string_view to_string(HostKind kind) {
  switch (kind) {
    case HostKind::CompleteSymmetric:
      return "complete_symmetric";
    case HostKind::Circulant:
      return "circulant";
    case HostKind::CirculantOneThreeEven:
      return "circulant_one_three_even";
    case HostKind::BlownCycle:
      return "blown_cycle";
    case HostKind::WStar:
      return "w_star";
  }
  return "unknown";
}

HostSpec complete_symmetric(int n, int rows) {
  if (n < 2) {
    throw InvalidArgument(fmt::format("K*_n needs n >= 2, got {}", n));
  }
  if (rows != 1 && rows != 2) {
    throw InvalidArgument(fmt::format("rows must be 1 or 2, got {}", rows));
  }
  if (rows == 2 && n % 2 != 0) {
    throw InvalidArgument(fmt::format("two-row K*_n needs n even, got {}", n));
  }
  HostSpec h;
  h.kind_ = HostKind::CompleteSymmetric;
  h.columns_ = n / rows;
  h.rows_ = rows;
  return h;
}

HostSpec circulant(int m, std::vector<int> distances) {
  if (m < 3) {
    throw InvalidArgument(fmt::format("circulant order must be >= 3, got {}", m));
  }
  std::sort(distances.begin(), distances.end());
  if (distances.empty()) {
    throw InvalidArgument("circulant connection set is empty");
  }
  if (std::adjacent_find(distances.begin(), distances.end()) != distances.end()) {
    throw InvalidArgument("circulant connection set has a repeated distance");
  }
  for (int s : distances) {
    if (s < 1 || s > m / 2) {
      throw InvalidArgument(
          fmt::format("distance {} outside {{1..{}}} for Circ({}, S)", s, m / 2, m));
    }
  }
  HostSpec h;
  h.kind_ = HostKind::Circulant;
  h.columns_ = m;
  h.distances_ = std::move(distances);
  return h;
}

HostSpec circulant_one_three_even(int m) {
  // m = 4 would make {0,3} a distance-1 edge.
  if (m < 6 || m % 2 != 0) {
    throw InvalidArgument(
        fmt::format("Circ(m, {{1, 3e}}) needs m even and >= 6, got {}", m));
  }
  HostSpec h;
  h.kind_ = HostKind::CirculantOneThreeEven;
  h.columns_ = m;
  return h;
}

HostSpec blown_cycle(std::vector<int> column_order, bool vertical) {
  const int m = static_cast<int>(column_order.size());
  if (m < 3) {
    throw InvalidArgument(fmt::format("blown-up cycle needs >= 3 columns, got {}", m));
  }
  std::vector<int> position(m, -1);
  for (int i = 0; i < m; ++i) {
    const int c = column_order[i];
    if (c < 0 || c >= m) {
      throw InvalidArgument(fmt::format("column label {} outside Z_{}", c, m));
    }
    if (position[c] != -1) {
      throw InvalidArgument(fmt::format("duplicate column label {}", c));
    }
    position[c] = i;
  }
  HostSpec h;
  h.kind_ = HostKind::BlownCycle;
  h.columns_ = m;
  h.rows_ = 2;
  h.order_ = std::move(column_order);
  h.position_ = std::move(position);
  h.vertical_ = vertical;
  return h;
}

HostSpec host_w_star(int two_m) {
  if (two_m % 2 != 0) {
    throw InvalidArgument(fmt::format("W*_n needs n even, got {}", two_m));
  }
  // Below m = 5 the circulant's distance classes collide and the host
  // degenerates.
  if (two_m < 10) {
    throw InvalidArgument(fmt::format("W*_n needs n >= 10, got {}", two_m));
  }
  HostSpec h;
  h.kind_ = HostKind::WStar;
  h.columns_ = two_m / 2;
  h.rows_ = 2;
  return h;
}

std::size_t HostSpec::arc_count() const {
  const auto m = static_cast<std::size_t>(columns_);
  switch (kind_) {
    case HostKind::CompleteSymmetric: {
      const std::size_t n = vertex_count();
      return n * (n - 1);
    }
    case HostKind::Circulant: {
      std::size_t edges = 0;
      for (int s : distances_) edges += (2 * s == columns_) ? m / 2 : m;
      return 2 * edges;
    }
    case HostKind::CirculantOneThreeEven:
      return 2 * (m + m / 2);
    case HostKind::BlownCycle:
      return vertical_ ? 10 * m : 8 * m;
    case HostKind::WStar:
      return columns_ % 2 != 0 ? 18 * m : 14 * m;
  }
  return 0;
}

bool HostSpec::contains(Vertex v) const noexcept {
  if (v.column < 0 || v.column >= columns_) return false;
  return rows_ == 2 || v.row == Row::X;
}

bool HostSpec::column_adjacent(int a, int b) const noexcept {
  const int m = columns_;
  const int d = mod(b - a, m);
  switch (kind_) {
    case HostKind::CompleteSymmetric:
      return a != b;
    case HostKind::Circulant:
      return std::any_of(distances_.begin(), distances_.end(),
                         [&](int s) { return d == s || d == m - s; });
    case HostKind::CirculantOneThreeEven:
      if (d == 1 || d == m - 1) return true;
      return (d == 3 && a % 2 == 0) || (d == m - 3 && b % 2 == 0);
    case HostKind::BlownCycle: {
      const int step = mod(position_[b] - position_[a], m);
      return step == 1 || step == m - 1;
    }
    case HostKind::WStar:
      if (m % 2 != 0) return d == 1 || d == 2 || d == m - 1 || d == m - 2;
      if (d == 1 || d == m - 1) return true;
      return (d == 3 && a % 2 == 0) || (d == m - 3 && b % 2 == 0);
  }
  return false;
}

bool HostSpec::has_arc(Vertex tail, Vertex head) const noexcept {
  if (!contains(tail) || !contains(head) || tail == head) return false;
  if (tail.column == head.column) {
    // Only two-row hosts have same-column arcs, and only some of them.
    switch (kind_) {
      case HostKind::CompleteSymmetric:
      case HostKind::WStar:
        return true;
      case HostKind::BlownCycle:
        return vertical_;
      default:
        return false;
    }
  }
  return column_adjacent(tail.column, head.column);
}

std::vector<Vertex> HostSpec::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (int c = 0; c < columns_; ++c) {
    out.push_back(x(c));
    if (rows_ == 2) out.push_back(y(c));
  }
  return out;
}

std::vector<Arc> HostSpec::arcs() const {
  const auto vs = vertices();
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (const Vertex& u : vs) {
    for (const Vertex& v : vs) {
      if (has_arc(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

std::string HostSpec::name() const {
  switch (kind_) {
    case HostKind::CompleteSymmetric:
      return fmt::format("K*_{}", vertex_count());
    case HostKind::Circulant: {
      std::string s;
      for (int d : distances_) s += (s.empty() ? "" : ",") + std::to_string(d);
      return fmt::format("Circ({},{{{}}})", columns_, s);
    }
    case HostKind::CirculantOneThreeEven:
      return fmt::format("Circ({},{{1,3e}})", columns_);
    case HostKind::BlownCycle:
      return fmt::format("(C_{} wr {})*", columns_, vertical_ ? "K_2" : "E_2");
    case HostKind::WStar:
      return fmt::format("W*_{}", 2 * columns_);
  }
  return "?";
}

}  // namespace obk
