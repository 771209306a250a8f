#pragma once

#include <array>
#include <vector>

#include "obk/pathkit.hpp"

namespace obk {

/// Blocks of a_i consecutive steps along the column cycle; block i spans
/// positions start_i..start_i + a_i, sharing its last column with block i+1.
struct BlockPlan {
  std::vector<int> column_order;
  std::vector<int> block_sizes;  // a_i, each >= 2
  std::vector<int> starts;       // positions along column_order
};

/// Throws InvalidArgument unless every length is even and >= 4 and the
/// lengths sum to 2m.
BlockPlan plan_blocks(const std::vector<int>& column_order, const std::vector<int>& lengths);

/// An undirected 2-factor: each cycle is a vertex sequence (not closed).
using UndirectedFactor = std::vector<std::vector<Vertex>>;

/// Two edge-disjoint 2-factors of C wr E_2 with the given cycle lengths,
/// together using every edge. C visits the columns in `column_order`.
std::array<UndirectedFactor, 2> f_factorize_blowup(const std::vector<int>& column_order,
                                                   const std::vector<int>& lengths);

/// Four directed 2-factors of (C wr E_2)*, each with cycle lengths
/// {t1, t2}: both orientations of both undirected factors.
std::vector<TwoFactor> d_factorize_blowup_star(const std::vector<int>& column_order, int t1,
                                               int t2);
std::vector<TwoFactor> d_factorize_blowup_star(const std::vector<int>& column_order,
                                               const std::vector<int>& lengths);

}  // namespace obk
