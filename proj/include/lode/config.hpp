#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lode/endpoint.hpp"
#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

// key=value service configuration. Paths left empty fall back to the
// standard file names inside data_dir.
struct ServiceConfig {
  std::string data_dir;
  std::string local_repo;
  std::string target_repo;
  std::string anchor_table;
  std::string provenance;
  std::string disjointness;
  std::string prefixes;
  std::string link_types;
  std::string sparql_endpoint;  // optional remote endpoint for the endpoint-* algorithms

  std::vector<std::string> label_properties;  // empty: built-in list
  std::string abstract_property = vocab::kDboAbstract;
  std::string redirect_property = vocab::kDboRedirects;
  std::string disambiguates_property = vocab::kDboDisambiguates;
  std::size_t max_redirect_depth = 5;

  Algorithm default_algorithm = Algorithm::EndpointAL;
  std::size_t k = kDefaultCandidates;
  std::size_t context_k = 5;
  std::size_t type_context_k = 3;
  std::string listen_address = "127.0.0.1:8080";

  static constexpr std::string_view kLocalFile = "local.nt";
  static constexpr std::string_view kTargetFile = "target.nt";
  static constexpr std::string_view kAnchorFile = "anchors.tsv";
  static constexpr std::string_view kProvenanceFile = "local.provenance.tsv";
  static constexpr std::string_view kDisjointnessFile = "disjointness.tsv";
  static constexpr std::string_view kPrefixFile = "prefixes.tsv";

  void set(std::string_view key, std::string_view value) {
    auto v = std::string(detail::trim(value));
    if (key == "data_dir") data_dir = v;
    else if (key == "local_repo") local_repo = v;
    else if (key == "target_repo") target_repo = v;
    else if (key == "anchor_table") anchor_table = v;
    else if (key == "provenance") provenance = v;
    else if (key == "disjointness") disjointness = v;
    else if (key == "prefixes") prefixes = v;
    else if (key == "link_types") link_types = v;
    else if (key == "sparql_endpoint") sparql_endpoint = v;
    else if (key == "label_properties") label_properties = split_list(v);
    else if (key == "abstract_property") abstract_property = v;
    else if (key == "redirect_property") redirect_property = v;
    else if (key == "disambiguates_property") disambiguates_property = v;
    else if (key == "max_redirect_depth") max_redirect_depth = parse_size(key, v);
    else if (key == "default_algorithm") default_algorithm = parse_algorithm(v);
    else if (key == "k") k = parse_size(key, v);
    else if (key == "context_k") context_k = parse_size(key, v);
    else if (key == "type_context_k") type_context_k = parse_size(key, v);
    else if (key == "listen_address") listen_address = v;
    else throw Error(ErrorCode::InvalidConfig, "unknown key '" + std::string(key) + "'");
  }

  static ServiceConfig load(std::istream& in) { return load(in, ServiceConfig()); }

  static ServiceConfig load(std::istream& in, ServiceConfig base) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto view = detail::trim(line);
      if (view.empty() || view.front() == '#') continue;
      auto eq = view.find('=');
      if (eq == std::string_view::npos) throw ParseError(ErrorCode::InvalidConfig, lineno, "expected key=value");
      try {
        base.set(detail::trim(view.substr(0, eq)), view.substr(eq + 1));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(ErrorCode::InvalidConfig, lineno, e.what());
      }
    }
    return base;
  }

  static ServiceConfig load_file(const std::string& path) { return load_file(path, ServiceConfig()); }

  static ServiceConfig load_file(const std::string& path, ServiceConfig base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read config " + path);
    return load(in, std::move(base));
  }

  std::string path_or_default(const std::string& explicit_path, std::string_view file) const {
    if (!explicit_path.empty()) return explicit_path;
    if (data_dir.empty()) return {};
    return (std::filesystem::path(data_dir) / file).string();
  }

  std::string local_path() const { return path_or_default(local_repo, kLocalFile); }
  std::string target_path() const { return path_or_default(target_repo, kTargetFile); }
  std::string anchor_path() const { return path_or_default(anchor_table, kAnchorFile); }
  std::string provenance_path() const { return path_or_default(provenance, kProvenanceFile); }
  std::string disjointness_path() const { return path_or_default(disjointness, kDisjointnessFile); }
  std::string prefix_path() const { return path_or_default(prefixes, kPrefixFile); }

  std::vector<Iri> label_property_iris(const PrefixTable& table) const {
    if (label_properties.empty()) return default_label_properties();
    std::vector<Iri> out;
    for (const auto& p : label_properties) out.push_back(table.expand(p));
    return out;
  }

  EndpointConfig endpoint(const PrefixTable& table) const {
    EndpointConfig cfg;
    cfg.abstract_property = table.expand(abstract_property);
    cfg.redirect_property = table.expand(redirect_property);
    cfg.disambiguates_property = table.expand(disambiguates_property);
    cfg.max_redirect_depth = max_redirect_depth;
    cfg.validate();
    return cfg;
  }

  // host and port of listen_address ("host:port" or ":port").
  std::pair<std::string, int> listen() const {
    auto colon = listen_address.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "listen_address needs host:port");
    std::string host = listen_address.substr(0, colon);
    if (host.empty()) host = "0.0.0.0";
    auto port = parse_size("listen_address", std::string_view(listen_address).substr(colon + 1));
    if (port > 65535) throw Error(ErrorCode::InvalidConfig, "port out of range");
    return {host, static_cast<int>(port)};
  }

  // Paths that are set must be readable; local and target repositories are
  // required.
  void validate() const {
    if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be at least 1");
    if (max_redirect_depth < 1) throw Error(ErrorCode::InvalidConfig, "max_redirect_depth must be at least 1");
    auto readable = [](const std::string& p, bool required, std::string_view what) {
      if (p.empty()) {
        if (required) throw Error(ErrorCode::InvalidConfig, std::string(what) + " path not configured");
        return;
      }
      std::ifstream in(p);
      if (!in) throw Error(ErrorCode::Io, std::string(what) + " not readable: " + p);
    };
    readable(local_path(), true, "local repository");
    readable(target_path(), sparql_endpoint.empty(), "target repository");
    if (!anchor_table.empty()) readable(anchor_table, true, "anchor table");
    if (!disjointness.empty()) readable(disjointness, true, "disjointness declarations");
    if (!prefixes.empty()) readable(prefixes, true, "prefix table");
    if (!link_types.empty()) readable(link_types, true, "link types");
  }

 private:
  static std::vector<std::string> split_list(std::string_view v) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= v.size()) {
      auto comma = v.find(',', start);
      auto item = detail::trim(v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (!item.empty()) out.emplace_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  static std::size_t parse_size(std::string_view key, std::string_view v) {
    std::size_t n = 0;
    auto t = detail::trim(v);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw Error(ErrorCode::InvalidConfig, std::string(key) + ": not a number '" + std::string(v) + "'");
    return n;
  }
};

}  // namespace lode
