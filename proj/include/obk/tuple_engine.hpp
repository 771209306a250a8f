#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obk/pathkit.hpp"
#include "obk/tuple_store.hpp"

namespace obk {

/// Column regions of W*_{p+4k}. regions[0] is V_0 (columns 0..p+1),
/// regions[j] for j = 1..k is V_j (columns p+4j-4..p+4j+1); all reduced
/// modulo m. v0_dagger is columns 2..p-1.
struct RegionSet {
  int p = 0;
  int k = 0;
  int m = 0;
  std::vector<std::set<Vertex>> regions;
  std::set<Vertex> v0_dagger;

  std::set<Vertex> intersection(int i, int j) const;
};

/// Pre: m = p + 4k, p >= 2, k >= 0.
RegionSet regions(int p, int k, int m);

enum class Condition { B1, B2, B3, B4, B5, B6 };
std::string_view to_string(Condition c);

struct ConditionResult {
  Condition condition = Condition::B1;
  bool pass = true;
  std::string detail;
  std::vector<Vertex> vertices;  // offending vertices, if any
};

struct ValidationReport {
  int t1 = 0;
  int q = 0;
  int index = 0;
  std::array<ConditionResult, 6> results;

  bool pass() const;
  const ConditionResult& at(Condition c) const {
    return results[static_cast<std::size_t>(c)];
  }
};

/// Checks B1..B6 in W*_{t1+q+24}. Never throws on a bad tuple; failures are
/// recorded in the report.
ValidationReport validate_base_tuple(const BaseTuple& t);

/// The 2-factor of W*_{t1+q+8k} made of X and the cyclic concatenation of
/// Q, S^1..S^k, R, T^k..T^1 (S^j, T^j translated by 4(j-1)).
TwoFactor build_factor(const BaseTuple& t, int k);

/// A failed assembly hypothesis: the factors (or paths) of tuples a and b
/// share `arc`.
struct HypothesisFailure {
  char check = 'a';  // 'a': factors at k=2, 'b': Q_a against rho^p(R_b)
  int a = 0;
  int b = 0;
  Arc arc;
  std::string describe() const;
};

class HypothesisError : public Error {
 public:
  explicit HypothesisError(HypothesisFailure f) : Error(f.describe()), failure_(f) {}
  const HypothesisFailure& failure() const noexcept { return failure_; }

 private:
  HypothesisFailure failure_;
};

/// Runs both hypothesis checks over a complete case set; empty if they hold.
std::vector<HypothesisFailure> check_assembly_hypotheses(const std::vector<BaseTuple>& tuples);

/// r pairwise arc-disjoint factors of W*_{t1+q+8k}. Throws InvalidArgument
/// for a wrong tuple count or mixed cases, HypothesisError when a hypothesis
/// fails, InternalError if the target-k result is not an exact partition.
std::vector<TwoFactor> assemble_w_factorization(const std::vector<BaseTuple>& tuples, int k);

}  // namespace obk
