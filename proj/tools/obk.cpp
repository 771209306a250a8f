// obk: build and check directed two-table Oberwolfach factorizations.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "obk/certificate.hpp"
#include "obk/tuple_engine.hpp"

namespace fs = std::filesystem;
using namespace obk;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;
constexpr int kOutOfScope = 3;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << text;
}

fs::path data_dir_or_default(const std::string& dir) {
  return dir.empty() ? default_data_dir() : fs::path(dir);
}

int cmd_solve(int t1, int t2, const std::string& out, std::uint64_t seed,
              const std::string& data_dir) {
  const auto req = normalize(t1, t2);
  if (const auto* oos = std::get_if<OutOfScope>(&req)) {
    std::cerr << "out of scope: " << oos->reason << "\n";
    return kOutOfScope;
  }
  const auto& r = std::get<SolveRequest>(req);
  const fs::path dir = data_dir_or_default(data_dir);
  const auto store = TupleStore::load(dir);
  const Certificate cert = solve(r, store, SolveOptions{seed, dir});
  const std::string text = serialize_certificate(cert);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  std::size_t arcs = 0;
  for (const auto& f : cert.factors) {
    for (const auto& c : f) arcs += c.size();
  }
  std::cerr << fmt::format("({},{}): {} factors over {}, {} arcs{}\n", r.t1, r.t2,
                           cert.factors.size(), cert.host.name(), arcs,
                           cert.provenance.special ? " (special case data)" : "");
  return kOk;
}

int cmd_verify(const std::string& path) {
  const Certificate cert = parse_certificate(slurp(path), path);
  const VerifyOutcome outcome = verify_certificate(cert);
  if (outcome.pass()) {
    std::cout << fmt::format("ok: {} factors partition {}\n", cert.factors.size(),
                             cert.host.name());
    return kOk;
  }
  for (const auto& v : outcome.violations) {
    std::cout << to_string(v.kind) << ": " << v.witness << "\n";
  }
  std::cout << fmt::format("FAILED: {} violations\n", outcome.violations.size());
  return kFail;
}

nlohmann::json report_json(const ValidationReport& r) {
  nlohmann::json conds = nlohmann::json::object();
  for (const auto& c : r.results) {
    conds[std::string(to_string(c.condition))] =
        c.pass ? nlohmann::json("pass") : nlohmann::json(c.detail);
  }
  return {{"t1", r.t1}, {"q", r.q}, {"index", r.index}, {"pass", r.pass()}, {"conditions", conds}};
}

int cmd_check_tuples(const std::string& which, const std::string& report_path,
                     const std::string& data_dir) {
  const fs::path dir = data_dir_or_default(data_dir);
  std::optional<TupleStore> store;
  try {
    store = TupleStore::load(dir);
  } catch (const FormatError& e) {
    std::cout << "data error: " << e.what() << "\n";
    return kFail;
  }

  std::vector<std::pair<int, int>> cases;
  if (which.empty()) {
    for (const auto& [key, _] : store->cases()) cases.push_back(key);
  } else {
    int t1 = 0, q = 0;
    char comma = 0;
    std::istringstream in(which);
    if (!(in >> t1 >> comma >> q) || comma != ',' || !in.eof()) {
      std::cerr << "--case expects t1,q\n";
      return kMalformed;
    }
    if (!store->cases().contains({t1, q})) {
      std::cerr << fmt::format("no tuples for case ({},{})\n", t1, q);
      return kMalformed;
    }
    cases.push_back({t1, q});
  }

  nlohmann::json report = {{"tuples", nlohmann::json::array()},
                           {"hypotheses", nlohmann::json::array()},
                           {"specials", nlohmann::json::array()}};
  int checked = 0, passed = 0;
  bool ok = true;
  for (const auto& key : cases) {
    const auto& tuples = store->load_case(key.first, key.second);
    for (const auto& t : tuples) {
      const auto r = validate_base_tuple(t);
      ++checked;
      if (r.pass()) {
        ++passed;
      } else {
        ok = false;
        for (const auto& c : r.results) {
          if (!c.pass) {
            std::cout << fmt::format("case ({},{}) tuple {}: {} failed: {}\n", t.t1, t.q,
                                     t.index, to_string(c.condition), c.detail);
          }
        }
      }
      report["tuples"].push_back(report_json(r));
    }
    std::vector<HypothesisFailure> failures;
    try {
      failures = check_assembly_hypotheses(tuples);
    } catch (const Error& e) {
      ok = false;
      std::cout << fmt::format("case ({},{}): assembly check aborted: {}\n", key.first,
                               key.second, e.what());
    }
    for (const auto& f : failures) {
      ok = false;
      std::cout << fmt::format("case ({},{}): hypothesis ({}) failed: {}\n", key.first,
                               key.second, f.check, f.describe());
    }
    report["hypotheses"].push_back(
        {{"t1", key.first}, {"q", key.second}, {"pass", failures.empty()}});
  }
  std::cout << fmt::format("{}/{} tuples pass\n", passed, checked);

  if (which.empty()) {
    int good = 0;
    for (const auto& [key, sc] : store->specials()) {
      const auto outcome = verify_factorization(sc.factors, host_w_star(sc.t1 + sc.t2),
                                                {std::size_t(sc.t1), std::size_t(sc.t2)});
      if (outcome.pass()) {
        ++good;
      } else {
        ok = false;
        std::cout << fmt::format("special ({},{}): {}\n", sc.t1, sc.t2,
                                 outcome.violations.front().witness);
      }
      report["specials"].push_back({{"t1", sc.t1}, {"t2", sc.t2}, {"pass", outcome.pass()}});
    }
    std::cout << fmt::format("{}/{} specials pass\n", good, store->specials().size());
  }
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  return ok ? kOk : kFail;
}

int cmd_export_dot(const std::string& path, std::optional<int> factor, const std::string& out) {
  const Certificate cert = parse_certificate(slurp(path), path);
  std::string dot;
  try {
    dot = to_dot(cert, factor);
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return kMalformed;
  }
  if (out.empty()) {
    std::cout << dot;
  } else {
    write_file(out, dot);
  }
  return kOk;
}

int cmd_oracle(const std::vector<int>& lengths, std::uint64_t budget) {
  const auto r = oracle_search(lengths, budget);
  std::cout << fmt::format("{} after {} nodes\n", to_string(r.status), r.nodes);
  if (r.status == OracleResult::Status::Found) {
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      std::string line;
      for (const auto& c : r.factors[i].cycles) line += " (" + to_string(c) + ")";
      std::cout << fmt::format("F{}:{}\n", i, line);
    }
  }
  return r.status == OracleResult::Status::Timeout ? kFail : kOk;
}

int cmd_build_km_cache(int max_m, const std::string& dir, std::uint64_t seed,
                       const std::string& data_dir) {
  const fs::path target = dir.empty() ? data_dir_or_default(data_dir) / "km" : fs::path(dir);
  fs::create_directories(target);
  for (int m = 8; m <= max_m; m += 2) {
    const KmSplit split = decompose_k_even(m, EvenOptions{seed, std::nullopt});
    write_file(km_cache_path(target, m), serialize_km_split(split));
  }
  std::cout << fmt::format("wrote K_m splits for even m in 8..{} to {}\n", max_m,
                           target.string());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed two-table Oberwolfach factorizations"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir, "data directory (default: $OBK_DATA_DIR or built-in)");

  int t1 = 0, t2 = 0;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  auto* solve_cmd = app.add_subcommand("solve", "factorize K*_{t1+t2}");
  solve_cmd->add_option("--t1", t1)->required();
  solve_cmd->add_option("--t2", t2)->required();
  solve_cmd->add_option("--out", out, "certificate path (default: stdout)");
  solve_cmd->add_option("--seed", seed);

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("certificate", cert_path)->required();

  std::string which, report = "check-tuples-report.json";
  auto* check_cmd = app.add_subcommand("check-tuples", "audit the shipped data");
  check_cmd->add_option("--case", which, "t1,q");
  bool no_report = false;
  check_cmd->add_option("--report", report, "JSON report path");
  check_cmd->add_flag("--no-report", no_report, "skip the JSON report");

  std::optional<int> factor;
  auto* dot_cmd = app.add_subcommand("export-dot", "write Graphviz for a certificate");
  dot_cmd->add_option("certificate", cert_path)->required();
  dot_cmd->add_option("--factor", factor);
  dot_cmd->add_option("--out", out);

  std::vector<int> lengths;
  std::uint64_t budget = 50'000'000;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search on K*_n, n <= 10");
  oracle_cmd->add_option("--lengths", lengths)->required()->delimiter(',');
  oracle_cmd->add_option("--budget", budget);

  int max_m = 40;
  std::string cache_dir;
  auto* km_cmd = app.add_subcommand("build-km-cache", "regenerate the even K_m split cache");
  km_cmd->add_option("--max-m", max_m);
  km_cmd->add_option("--dir", cache_dir);
  km_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*solve_cmd) return cmd_solve(t1, t2, out, seed, data_dir);
    if (*verify_cmd) return cmd_verify(cert_path);
    if (*check_cmd) return cmd_check_tuples(which, no_report ? "" : report, data_dir);
    if (*dot_cmd) return cmd_export_dot(cert_path, factor, out);
    if (*oracle_cmd) return cmd_oracle(lengths, budget);
    if (*km_cmd) return cmd_build_km_cache(max_m, cache_dir, seed, data_dir);
  } catch (const OutOfScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kOutOfScope;
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}
