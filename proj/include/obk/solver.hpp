#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "obk/hamdecomp.hpp"
#include "obk/tuple_store.hpp"
#include "obk/verify.hpp"

namespace obk {

/// Normalized: t1 in {4,6}, t2 even, t1 + t2 >= 14.
struct SolveRequest {
  int t1 = 0;
  int t2 = 0;
  bool operator==(const SolveRequest&) const = default;
};

struct OutOfScope {
  std::string reason;
};

class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

std::variant<SolveRequest, OutOfScope> normalize(int t1, int t2);

struct QK {
  int q = 0;
  int k = 0;
  bool operator==(const QK&) const = default;
};
struct SpecialCase {};

/// q from the t1 row ({10,14,16,20} or {14,16,18,20}) with q = t2 mod 8, and
/// k = (t2 - q)/8; SpecialCase when k would be negative.
std::variant<QK, SpecialCase, OutOfScope> q_and_k(const SolveRequest& req);

struct Provenance {
  int t1 = 0;
  int t2 = 0;
  std::optional<int> q;
  std::optional<int> k;
  bool special = false;
  std::uint64_t seed = kDefaultSeed;
  std::string km;  // how the K_m split was obtained
  int w_factors = 0;
  int blowup_factors = 0;
  std::map<std::string, std::string> data_checksums;

  bool operator==(const Provenance&) const = default;
};

struct Certificate {
  HostSpec host;
  std::vector<std::size_t> lengths;
  Provenance provenance;
  std::vector<RawFactor> factors;

  bool operator==(const Certificate&) const = default;
};

struct SolveOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Defaults to default_data_dir().
  std::optional<std::filesystem::path> data_dir;
};

/// Builds and verifies a factorization of K*_{t1+t2}. Throws
/// OutOfScopeError for pairs outside the supported range and InternalError
/// if the result fails verification.
Certificate solve(const SolveRequest& req, const TupleStore& store, const SolveOptions& opts = {});
Certificate solve(int t1, int t2, const SolveOptions& opts = {});

VerifyOutcome verify_certificate(const Certificate& cert);

}  // namespace obk
