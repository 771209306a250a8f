#include "obk/haggkvist.hpp"

#include <numeric>

#include <fmt/core.h>

namespace obk {

BlockPlan plan_blocks(const std::vector<int>& column_order, const std::vector<int>& lengths) {
  const int m = static_cast<int>(column_order.size());
  if (lengths.empty()) throw InvalidArgument("no cycle lengths given");
  for (int len : lengths) {
    if (len % 2 != 0) throw InvalidArgument(fmt::format("cycle length {} is odd", len));
    if (len < 4) {
      throw InvalidArgument(
          fmt::format("cycle length {} is below 4; blow-up factors need lengths >= 4", len));
    }
  }
  const int total = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (total != 2 * m) {
    throw InvalidArgument(fmt::format("lengths sum to {}, need 2m = {}", total, 2 * m));
  }
  BlockPlan plan{column_order, {}, {}};
  int pos = 0;
  for (int len : lengths) {
    plan.block_sizes.push_back(len / 2);
    plan.starts.push_back(pos);
    pos += len / 2;
  }
  return plan;
}

std::array<UndirectedFactor, 2> f_factorize_blowup(const std::vector<int>& column_order,
                                                   const std::vector<int>& lengths) {
  // Validates the order as a permutation too.
  blown_cycle(column_order);
  const BlockPlan plan = plan_blocks(column_order, lengths);
  const int m = static_cast<int>(column_order.size());
  const auto col = [&](int pos) { return column_order[mod(pos, m)]; };

  std::array<UndirectedFactor, 2> out;
  for (std::size_t b = 0; b < plan.block_sizes.size(); ++b) {
    const int s = plan.starts[b];
    const int a = plan.block_sizes[b];

    // x_0, y_1, ..., y_a, x_{a-1}, ..., x_1
    std::vector<Vertex> first{x(col(s))};
    for (int i = 1; i <= a; ++i) first.push_back(y(col(s + i)));
    for (int i = a - 1; i >= 1; --i) first.push_back(x(col(s + i)));

    // y_0, then the straight-then-zigzag path to x_a, back along the other
    // zigzag: y_0 y_1 x_2 y_3 ... x_a ... y_2 x_1
    std::vector<Vertex> up{y(col(s))};
    std::vector<Vertex> down;
    for (int i = 1; i < a; ++i) {
      const bool odd = i % 2 != 0;
      up.push_back(odd ? y(col(s + i)) : x(col(s + i)));
      down.push_back(odd ? x(col(s + i)) : y(col(s + i)));
    }
    up.push_back(x(col(s + a)));
    up.insert(up.end(), down.rbegin(), down.rend());

    out[0].push_back(std::move(first));
    out[1].push_back(std::move(up));
  }
  return out;
}

std::vector<TwoFactor> d_factorize_blowup_star(const std::vector<int>& column_order,
                                               const std::vector<int>& lengths) {
  const auto undirected = f_factorize_blowup(column_order, lengths);
  const HostSpec host = blown_cycle(column_order);
  std::vector<TwoFactor> out;
  for (const auto& f : undirected) {
    TwoFactor forward{{}, host};
    TwoFactor backward{{}, host};
    for (const auto& c : f) {
      forward.cycles.emplace_back(c);
      backward.cycles.push_back(forward.cycles.back().reversed());
    }
    out.push_back(std::move(forward));
    out.push_back(std::move(backward));
  }
  return out;
}

std::vector<TwoFactor> d_factorize_blowup_star(const std::vector<int>& column_order, int t1,
                                               int t2) {
  return d_factorize_blowup_star(column_order, std::vector<int>{t1, t2});
}

}  // namespace obk
