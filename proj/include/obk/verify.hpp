#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obk/pathkit.hpp"

namespace obk {

enum class ViolationKind {
  MissingArc,
  DuplicateArc,
  ForeignArc,
  NotSpanning,
  BadCycleLengths,
  OverlappingCycles,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string witness;
  int factor = -1;  // -1 when not tied to one factor
  std::optional<Arc> arc;
  std::optional<Vertex> vertex;
};

struct VerifyOutcome {
  std::vector<Violation> violations;

  bool pass() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// A factor as raw cycles, each an open vertex sequence. Nothing is assumed
/// about it, so hand-edited certificates can be checked.
using RawFactor = std::vector<std::vector<Vertex>>;

RawFactor raw(const TwoFactor& f);

/// Arc membership recomputed from the host parameters alone.
bool host_contains_arc(const HostSpec& host, Vertex u, Vertex v);

VerifyOutcome verify_two_factor(const RawFactor& f, const HostSpec& host,
                                std::vector<std::size_t> lengths);
VerifyOutcome verify_two_factor(const TwoFactor& f, const HostSpec& host,
                                std::vector<std::size_t> lengths);

/// Per-factor checks plus an exact partition of the host's arcs.
VerifyOutcome verify_factorization(const std::vector<RawFactor>& factors, const HostSpec& host,
                                   std::vector<std::size_t> lengths);
VerifyOutcome verify_factorization(const std::vector<TwoFactor>& factors, const HostSpec& host,
                                   std::vector<std::size_t> lengths);

struct OracleResult {
  enum class Status { Found, ExhaustedNone, Timeout };
  Status status = Status::Timeout;
  std::vector<TwoFactor> factors;  // set when Found
  std::uint64_t nodes = 0;
};

std::string_view to_string(OracleResult::Status s);

/// Exhaustive search for a factorization of K*_n (n = sum of lengths,
/// n <= 10) into 2-factors with the given cycle lengths. The first factor is
/// fixed to one representative of its type, which loses nothing because
/// relabelling vertices acts transitively on such factors. Exceeding
/// `budget` search nodes yields Timeout, never ExhaustedNone.
OracleResult oracle_search(const std::vector<int>& lengths, std::uint64_t budget);

}  // namespace obk
