#include "obk/certificate.hpp"

#include <algorithm>

#include <fmt/core.h>
#include <json.hpp>

namespace obk {

using nlohmann::json;

namespace {

json host_to_json(const HostSpec& h) {
  json params;
  switch (h.kind()) {
    case HostKind::CompleteSymmetric:
      params = {{"n", h.vertex_count()}, {"rows", h.rows()}};
      break;
    case HostKind::Circulant:
      params = {{"m", h.columns()}, {"distances", h.distances()}};
      break;
    case HostKind::CirculantOneThreeEven:
      params = {{"m", h.columns()}};
      break;
    case HostKind::BlownCycle:
      params = {{"order", h.column_order()}, {"vertical", h.vertical()}};
      break;
    case HostKind::WStar:
      params = {{"n", h.vertex_count()}};
      break;
  }
  return {{"kind", std::string(to_string(h.kind()))}, {"params", params}};
}

HostSpec host_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const json& p = j.at("params");
  if (kind == "complete_symmetric") {
    return complete_symmetric(p.at("n").get<int>(), p.at("rows").get<int>());
  }
  if (kind == "circulant") return circulant(p.at("m").get<int>(), p.at("distances").get<std::vector<int>>());
  if (kind == "circulant_one_three_even") return circulant_one_three_even(p.at("m").get<int>());
  if (kind == "blown_cycle") {
    return blown_cycle(p.at("order").get<std::vector<int>>(), p.at("vertical").get<bool>());
  }
  if (kind == "w_star") return host_w_star(p.at("n").get<int>());
  throw InvalidArgument(fmt::format("unknown host kind '{}'", kind));
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json provenance_to_json(const Provenance& p) {
  return {{"t1", p.t1},
          {"t2", p.t2},
          {"q", optional_int(p.q)},
          {"k", optional_int(p.k)},
          {"special", p.special},
          {"seed", p.seed},
          {"km", p.km},
          {"w_factors", p.w_factors},
          {"blowup_factors", p.blowup_factors},
          {"data", p.data_checksums}};
}

Provenance provenance_from_json(const json& j) {
  Provenance p;
  p.t1 = j.at("t1").get<int>();
  p.t2 = j.at("t2").get<int>();
  if (!j.at("q").is_null()) p.q = j.at("q").get<int>();
  if (!j.at("k").is_null()) p.k = j.at("k").get<int>();
  p.special = j.at("special").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.km = j.at("km").get<std::string>();
  p.w_factors = j.at("w_factors").get<int>();
  p.blowup_factors = j.at("blowup_factors").get<int>();
  p.data_checksums = j.at("data").get<std::map<std::string, std::string>>();
  return p;
}

json factor_to_json(const RawFactor& f) {
  json out = json::array();
  for (const auto& c : f) {
    json cyc = json::array();
    for (const auto& v : c) cyc.push_back(to_token(v));
    out.push_back(std::move(cyc));
  }
  return out;
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  std::string out = "{\n";
  out += fmt::format("  \"version\": {},\n", kCertificateVersion);
  out += fmt::format("  \"host\": {},\n", host_to_json(cert.host).dump());
  out += fmt::format("  \"lengths\": {},\n", json(cert.lengths).dump());
  out += fmt::format("  \"provenance\": {},\n", provenance_to_json(cert.provenance).dump());
  out += "  \"factors\": [";
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += factor_to_json(cert.factors[i]).dump();
  }
  out += cert.factors.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

Certificate parse_certificate(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(source, line_of(text, e.byte), e.what());
  }
  try {
    if (!j.is_object()) throw InvalidArgument("top level is not an object");
    const int version = j.at("version").get<int>();
    if (version != kCertificateVersion) {
      throw InvalidArgument(fmt::format("unsupported certificate version {}", version));
    }
    Certificate cert{host_from_json(j.at("host")), j.at("lengths").get<std::vector<std::size_t>>(),
                     provenance_from_json(j.at("provenance")), {}};
    for (const auto& f : j.at("factors")) {
      RawFactor rf;
      for (const auto& c : f) {
        std::vector<Vertex> cyc;
        for (const auto& tok : c) cyc.push_back(parse_token(tok.get<std::string>()));
        rf.push_back(std::move(cyc));
      }
      cert.factors.push_back(std::move(rf));
    }
    return cert;
  } catch (const json::exception& e) {
    throw FormatError(source, 1, fmt::format("schema: {}", e.what()));
  } catch (const InvalidArgument& e) {
    throw FormatError(source, 1, fmt::format("schema: {}", e.what()));
  }
}

std::string to_dot(const Certificate& cert, std::optional<int> factor) {
  const int count = static_cast<int>(cert.factors.size());
  if (factor && (*factor < 0 || *factor >= count)) {
    throw InvalidArgument(
        fmt::format("factor index {} out of range 0..{}", *factor, count - 1));
  }
  static constexpr std::array<std::string_view, 12> palette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  std::string out = fmt::format("digraph \"{}\" {{\n", cert.host.name());
  for (int i = 0; i < count; ++i) {
    if (factor && i != *factor) continue;
    const auto colour = palette[static_cast<std::size_t>(i) % palette.size()];
    for (const auto& c : cert.factors[i]) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        out += fmt::format("  {} -> {} [color=\"{}\", label=\"{}\"];\n", to_token(c[j]),
                           to_token(c[(j + 1) % c.size()]), colour, i);
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace obk
