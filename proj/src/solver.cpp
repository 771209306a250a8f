#include "obk/solver.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "obk/haggkvist.hpp"
#include "obk/tuple_engine.hpp"

namespace obk {

namespace {

bool small(int t) { return t == 4 || t == 6; }

}  // namespace

std::variant<SolveRequest, OutOfScope> normalize(int t1, int t2) {
  if (t1 == 3 && t2 == 3) {
    return OutOfScope{"(3,3) has no solution: K*_6 has no (C3,C3)-factorization "
                      "(the oracle command confirms this exhaustively)"};
  }
  if (t1 < 2 || t2 < 2) return OutOfScope{fmt::format("cycle lengths must be >= 2, got ({},{})", t1, t2)};
  if (t1 % 2 != 0 || t2 % 2 != 0) {
    return OutOfScope{fmt::format("({},{}): only even cycle lengths are handled", t1, t2)};
  }
  if (!small(t1) && !small(t2)) {
    return OutOfScope{fmt::format("({},{}): one length must be 4 or 6", t1, t2)};
  }
  if (!small(t1) || (small(t2) && t2 < t1)) std::swap(t1, t2);
  if (t1 + t2 < 14) {
    return OutOfScope{fmt::format("({},{}): t1 + t2 must be at least 14", t1, t2)};
  }
  return SolveRequest{t1, t2};
}

std::variant<QK, SpecialCase, OutOfScope> q_and_k(const SolveRequest& req) {
  if (!small(req.t1) || req.t2 % 2 != 0 || req.t1 + req.t2 < 14) {
    return OutOfScope{fmt::format("({},{}) is not a normalized request", req.t1, req.t2)};
  }
  const std::vector<int> row =
      req.t1 == 4 ? std::vector<int>{10, 14, 16, 20} : std::vector<int>{14, 16, 18, 20};
  for (int q : row) {
    if (q % 8 != req.t2 % 8) continue;
    const int k = (req.t2 - q) / 8;
    if (req.t2 >= q) return QK{q, k};
    const auto& sp = special_pairs();
    if (std::find(sp.begin(), sp.end(), std::pair{req.t1, req.t2}) != sp.end()) {
      return SpecialCase{};
    }
    return OutOfScope{fmt::format("({},{}) is not covered", req.t1, req.t2)};
  }
  return OutOfScope{fmt::format("({},{}): no q matches t2 mod 8", req.t1, req.t2)};
}

Certificate solve(const SolveRequest& req, const TupleStore& store, const SolveOptions& opts) {
  const auto plan = q_and_k(req);
  if (const auto* out = std::get_if<OutOfScope>(&plan)) throw OutOfScopeError(out->reason);

  const int m = (req.t1 + req.t2) / 2;
  Certificate cert{complete_symmetric(2 * m, 2),
                   {static_cast<std::size_t>(req.t1), static_cast<std::size_t>(req.t2)},
                   {},
                   {}};
  std::sort(cert.lengths.begin(), cert.lengths.end());
  Provenance& prov = cert.provenance;
  prov.t1 = req.t1;
  prov.t2 = req.t2;
  prov.seed = opts.seed;
  prov.data_checksums = store.checksums();

  std::vector<TwoFactor> w;
  if (const auto* qk = std::get_if<QK>(&plan)) {
    prov.q = qk->q;
    prov.k = qk->k;
    w = assemble_w_factorization(store.load_case(req.t1, qk->q), qk->k);
  } else {
    prov.special = true;
    w = store.load_special(req.t1, req.t2).factors;
  }
  prov.w_factors = static_cast<int>(w.size());

  EvenOptions eo{opts.seed, opts.data_dir.value_or(default_data_dir()) / "km"};
  const KmSplit split = decompose_km(m, eo);
  prov.km = split.origin;

  for (const auto& f : w) cert.factors.push_back(raw(f));
  for (const auto& c : split.ham_cycles) {
    for (const auto& f : d_factorize_blowup_star(c, req.t1, req.t2)) {
      cert.factors.push_back(raw(f));
      ++prov.blowup_factors;
    }
  }
  for (auto& f : cert.factors) {
    for (auto& c : f) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  }

  const auto outcome = verify_certificate(cert);
  if (!outcome.pass()) {
    throw InternalError(fmt::format("solution for ({},{}) failed verification: {}", req.t1,
                                    req.t2, outcome.violations.front().witness));
  }
  return cert;
}

Certificate solve(int t1, int t2, const SolveOptions& opts) {
  const auto req = normalize(t1, t2);
  if (const auto* out = std::get_if<OutOfScope>(&req)) throw OutOfScopeError(out->reason);
  const auto store = TupleStore::load(opts.data_dir.value_or(default_data_dir()));
  return solve(std::get<SolveRequest>(req), store, opts);
}

VerifyOutcome verify_certificate(const Certificate& cert) {
  return verify_factorization(cert.factors, cert.host, cert.lengths);
}

}  // namespace obk
