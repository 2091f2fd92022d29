#pragma once

#include <httplib.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lode/config.hpp"
#include "lode/context.hpp"
#include "lode/enhancer.hpp"
#include "lode/ranking.hpp"
#include "lode/rdf/ntriples.hpp"
#include "lode/render.hpp"
#include "lode/search.hpp"
#include "lode/sparql_client.hpp"

namespace lode {

using Clock = std::function<std::int64_t()>;

inline std::int64_t unix_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
}

// The curation engine behind the API: a mutable local repository published
// as snapshots, plus the read-only target repository, anchor table and
// frequency index.
class Engine {
 public:
  struct Parts {
    Repository local;
    std::optional<Repository> target;
    std::optional<AnchorTable> anchors;
    DisjointnessSet declarations;
    LinkTypeCatalog catalog = LinkTypeCatalog::defaults();
    PrefixTable prefixes = PrefixTable::defaults();
  };

  Engine(Parts parts, ServiceConfig config, Clock clock = unix_seconds)
      : config_(std::move(config)),
        clock_(std::move(clock)),
        prefixes_(std::move(parts.prefixes)),
        catalog_(std::move(parts.catalog)),
        declarations_(std::move(parts.declarations)),
        local_(std::move(parts.local)) {
    if (parts.target) {
      target_ = std::make_shared<const Repository>(std::move(*parts.target));
      if (!target_->empty()) index_ = compute_frequencies(*target_);
    }
    if (parts.anchors) anchors_ = std::make_shared<const AnchorTable>(std::move(*parts.anchors));
    endpoint_ = config_.endpoint(prefixes_);
    label_properties_ = config_.label_property_iris(prefixes_);
    if (!config_.sparql_endpoint.empty()) remote_ = std::make_unique<SparqlClient>(config_.sparql_endpoint);
  }

  // Loads every artifact named by the configuration. Optional files that
  // are only implied by data_dir are skipped when absent.
  static std::unique_ptr<Engine> open(const ServiceConfig& config, Clock clock = unix_seconds) {
    config.validate();
    Parts parts;
    auto optional_file = [](const std::string& explicit_path, const std::string& resolved) -> std::optional<std::string> {
      if (resolved.empty()) return std::nullopt;
      if (explicit_path.empty() && !std::filesystem::exists(resolved)) return std::nullopt;
      return resolved;
    };
    auto open_in = [](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
      return in;
    };

    if (auto p = optional_file(config.prefixes, config.prefix_path())) {
      auto in = open_in(*p);
      parts.prefixes = PrefixTable::load(in);
    }
    if (!config.link_types.empty()) {
      auto in = open_in(config.link_types);
      parts.catalog = LinkTypeCatalog::load(in, parts.prefixes);
    } else {
      parts.catalog = LinkTypeCatalog::defaults(parts.prefixes);
    }
    RepoConfig repo_config{config.label_property_iris(parts.prefixes), parts.prefixes.expand(config.abstract_property)};
    {
      auto in = open_in(config.local_path());
      parts.local = Repository(repo_config);
      read_ntriples(in, parts.local, Origin::local());
    }
    if (auto p = optional_file(config.provenance, config.provenance_path())) {
      auto in = open_in(*p);
      apply_provenance(parts.local, read_provenance(in));
    }
    if (auto p = optional_file(config.target_repo, config.target_path())) {
      auto in = open_in(*p);
      parts.target = Repository(repo_config);
      read_ntriples(in, *parts.target, Origin::target());
    }
    if (auto p = optional_file(config.anchor_table, config.anchor_path())) {
      auto in = open_in(*p);
      parts.anchors = AnchorTable::read(in);
    }
    if (auto p = optional_file(config.disjointness, config.disjointness_path())) {
      auto in = open_in(*p);
      parts.declarations = DisjointnessSet::load(in, parts.prefixes);
    }
    auto engine = std::make_unique<Engine>(std::move(parts), config, std::move(clock));
    engine->persist_ = true;
    return engine;
  }

  const ServiceConfig& config() const noexcept { return config_; }
  const PrefixTable& prefixes() const noexcept { return prefixes_; }
  const LinkTypeCatalog& catalog() const noexcept { return catalog_; }
  std::shared_ptr<const Repository> local() const { return local_.snapshot(); }
  const Repository* target() const noexcept { return target_.get(); }
  const AnchorTable* anchors() const noexcept { return anchors_.get(); }
  const PropertyFrequencyIndex& frequencies() const noexcept { return index_; }
  const std::vector<Iri>& label_properties() const noexcept { return label_properties_; }

  Iri expand(std::string_view text) const { return prefixes_.expand(text); }

  LinkerResources resources() const {
    LinkerResources res;
    res.target = target_.get();
    res.anchors = anchors_.get();
    res.declarations = &declarations_;
    res.endpoint = endpoint_;
    res.local_label_properties = label_properties_;
    return res;
  }

  // Reads.

  std::vector<ResultCluster> search(std::string_view raw, std::size_t limit) const {
    return lode::search(*local(), raw, limit);
  }

  std::vector<std::string> autocomplete(std::string_view prefix, std::size_t limit) const {
    return lode::autocomplete(*local(), prefix, limit);
  }

  Entity entity(const Iri& iri) const {
    auto snap = local();
    Entity e = snap->entity(iri);
    if (e.empty()) throw Error(ErrorCode::UnknownLocalEntity, iri.str());
    return e;
  }

  std::vector<LinkAssertion> links(const Iri& iri) const {
    auto out = links_of(*local(), catalog_, iri);
    std::lock_guard lock(timestamps_mutex_);
    for (auto& l : out)
      if (auto it = timestamps_.find(link_key(l.source, l.link_type.iri, l.target)); it != timestamps_.end())
        l.timestamp = it->second;
    return out;
  }

  std::vector<LinkCandidate> candidates(const Iri& iri, Algorithm algorithm, std::size_t k) const {
    if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be at least 1");
    Entity e = entity(iri);
    std::vector<LinkCandidate> ranked;
    if (remote_ && algorithm != Algorithm::WikiStat) {
      auto terms = extract_search_terms(e, label_properties_);
      RepoConfig rc{target_ ? target_->config().label_properties : default_label_properties(), endpoint_.abstract_property};
      ranked = rank_remote(*remote_, terms, e, endpoint_.with_fields(algorithm), declarations_, k, rc);
    } else {
      ranked = rank_candidates(e, algorithm, k, resources());
    }
    if (target_) attach_context(ranked, *target_, index_, config_.context_k, config_.type_context_k);
    return ranked;
  }

  std::vector<EnhancementGroup> enhancement_candidates(const Iri& iri, std::size_t k) const {
    entity(iri);
    if (!target_) throw Error(ErrorCode::InvalidConfig, "no target repository loaded");
    auto ls = links(iri);
    return lode::enhancement_candidates(iri, ls, *target_, index_, k);
  }

  // Writes. Each one is serialized, published as a new snapshot and, for an
  // engine opened from files, persisted.

  LinkAssertion link(const Iri& source, const Iri& target, std::string_view link_type) {
    std::lock_guard lock(write_mutex_);
    const auto& type = catalog_.find(link_type);
    auto now = clock_();
    auto assertion = local_.update([&](Repository& repo) { return assert_link(repo, catalog_, source, target, link_type, now); });
    {
      std::lock_guard ts(timestamps_mutex_);
      auto it = timestamps_.try_emplace(link_key(source, type.iri, target), now).first;
      assertion.timestamp = it->second;
    }
    persist();
    return assertion;
  }

  EnhancementOutcome enhance(const EnhancementOp& op) {
    std::lock_guard lock(write_mutex_);
    if (op.kind != EnhancementKind::Delete && !target_ && !remote_)
      throw Error(ErrorCode::InvalidConfig, "no target repository loaded");
    auto outcome = local_.update([&](Repository& repo) { return apply_enhancement_in_place(repo, op, target_.get()); });
    persist();
    return outcome;
  }

  Triple delete_triple(const Iri& subject, const Iri& predicate, const Term& object) {
    return enhance(EnhancementOp{EnhancementKind::Delete, subject, predicate, object, std::nullopt}).triple;
  }

 private:
  static std::string link_key(const Iri& s, const Iri& p, const Iri& o) { return s.str() + '\x1f' + p.str() + '\x1f' + o.str(); }

  // Whole-file rewrite through a temporary, so readers of the data
  // directory never see a half-written file.
  void persist() {
    if (!persist_) return;
    auto snap = local();
    auto write_atomic = [](const std::string& path, auto&& writer) {
      if (path.empty()) return;
      auto tmp = path + ".tmp";
      {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
        writer(out);
        if (!out) throw Error(ErrorCode::Io, "write failed: " + tmp);
      }
      std::filesystem::rename(tmp, path);
    };
    write_atomic(config_.local_path(), [&](std::ostream& out) { write_ntriples(out, *snap); });
    write_atomic(config_.provenance_path(), [&](std::ostream& out) { write_provenance(out, *snap); });
  }

  ServiceConfig config_;
  Clock clock_;
  PrefixTable prefixes_;
  LinkTypeCatalog catalog_;
  DisjointnessSet declarations_;
  Store local_;
  std::shared_ptr<const Repository> target_;
  std::shared_ptr<const AnchorTable> anchors_;
  PropertyFrequencyIndex index_;
  EndpointConfig endpoint_;
  std::vector<Iri> label_properties_;
  std::unique_ptr<SparqlClient> remote_;
  bool persist_ = false;

  std::mutex write_mutex_;
  mutable std::mutex timestamps_mutex_;
  std::map<std::string, std::int64_t> timestamps_;
};

// HTTP/JSON surface. dispatch() is transport independent; serve() binds it to
// an httplib server.
class Api {
 public:
  struct Response {
    int status = 200;
    render::Json body;
  };

  explicit Api(Engine& engine) : engine_(engine) {}

  static std::string percent_decode(std::string_view s, bool plus_is_space) {
    std::string out;
    auto hex = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      return -1;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '%' && i + 2 < s.size() && hex(s[i + 1]) >= 0 && hex(s[i + 2]) >= 0) {
        out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
        i += 2;
      } else if (plus_is_space && s[i] == '+') {
        out += ' ';
      } else {
        out += s[i];
      }
    }
    return out;
  }

  static int status_for(ErrorCode code) {
    switch (code) {
      case ErrorCode::UnknownLocalEntity:
      case ErrorCode::UnknownSubject:
      case ErrorCode::TripleNotFound:
      case ErrorCode::UnknownSourceEntity: return 404;
      case ErrorCode::PropertyAlreadyExists:
      case ErrorCode::LinkTypeConflict:
      case ErrorCode::NoLinkEstablished: return 409;
      case ErrorCode::RemoteFailure: return 502;
      case ErrorCode::Io: return 500;
      default: return 400;
    }
  }

  Response dispatch(std::string_view method, std::string_view raw_target, std::string_view body = {}) {
    try {
      return route(method, raw_target, body);
    } catch (const Error& e) {
      return error(status_for(e.code()), std::string(to_string(e.code())), e.what());
    } catch (const nlohmann::json::exception& e) {
      return error(400, "MalformedJson", e.what());
    } catch (const std::exception& e) {
      return error(500, "Internal", e.what());
    }
  }

 private:
  using Query = std::map<std::string, std::string>;

  static Response error(int status, std::string code, std::string message) {
    return {status, render::Json{{"error", std::move(code)}, {"message", std::move(message)}}};
  }

  static Query parse_query_string(std::string_view qs) {
    Query out;
    std::size_t start = 0;
    while (start < qs.size()) {
      auto amp = qs.find('&', start);
      auto part = qs.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start);
      auto eq = part.find('=');
      if (!part.empty())
        out[percent_decode(part.substr(0, eq), true)] =
            eq == std::string_view::npos ? std::string() : percent_decode(part.substr(eq + 1), true);
      if (amp == std::string_view::npos) break;
      start = amp + 1;
    }
    return out;
  }

  static std::size_t size_param(const Query& q, const std::string& key, std::size_t fallback, bool allow_zero = false) {
    auto it = q.find(key);
    if (it == q.end() || it->second.empty()) return fallback;
    std::size_t n = 0;
    const auto& v = it->second;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || ptr != v.data() + v.size() || (n == 0 && !allow_zero))
      throw Error(ErrorCode::InvalidConfig, key + " must be a " + (allow_zero ? "non-negative" : "positive") + " integer");
    return n;
  }

  Iri path_iri(std::string_view encoded) const {
    auto text = percent_decode(encoded, false);
    if (detail::trim(text).empty()) throw Error(ErrorCode::InvalidIri, "missing IRI in path");
    return engine_.expand(text);
  }

  static render::Json parse_body(std::string_view body) {
    auto j = render::Json::parse(body.begin(), body.end());
    if (!j.is_object()) throw Error(ErrorCode::InvalidOperation, "request body must be a JSON object");
    return j;
  }

  static const render::Json& field(const render::Json& j, const char* name) {
    if (!j.contains(name)) throw Error(ErrorCode::InvalidOperation, std::string("missing field '") + name + "'");
    return j[name];
  }

  Response route(std::string_view method, std::string_view raw_target, std::string_view body) {
    auto qmark = raw_target.find('?');
    auto path = raw_target.substr(0, qmark);
    Query query = qmark == std::string_view::npos ? Query{} : parse_query_string(raw_target.substr(qmark + 1));
    const auto& px = engine_.prefixes();
    auto starts = [&](std::string_view prefix) { return path.rfind(prefix, 0) == 0; };
    auto not_allowed = [&] { return error(405, "MethodNotAllowed", std::string(method) + " " + std::string(path)); };

    if (path == "/api/search") {
      if (method != "GET") return not_allowed();
      auto q = query.count("q") ? query["q"] : std::string();
      render::Json out = render::Json::array();
      for (const auto& c : engine_.search(q, size_param(query, "limit", 50))) out.push_back(render::cluster(c, px));
      return {200, std::move(out)};
    }
    if (path == "/api/autocomplete") {
      if (method != "GET") return not_allowed();
      auto prefix = query.count("prefix") ? query["prefix"] : std::string();
      return {200, render::Json(engine_.autocomplete(prefix, size_param(query, "limit", 10)))};
    }
    if (starts("/api/entity/")) {
      if (method != "GET") return not_allowed();
      Iri iri = path_iri(path.substr(std::string_view("/api/entity/").size()));
      auto e = engine_.entity(iri);
      auto ls = engine_.links(iri);
      return {200, render::entity(e, display_label(*engine_.local(), iri), ls, px)};
    }
    if (starts("/api/link/candidates/")) {
      if (method != "GET") return not_allowed();
      Iri iri = path_iri(path.substr(std::string_view("/api/link/candidates/").size()));
      Algorithm algorithm = query.count("algorithm") && !query["algorithm"].empty()
                                ? parse_algorithm(query["algorithm"])
                                : engine_.config().default_algorithm;
      render::Json out = render::Json::array();
      for (const auto& c : engine_.candidates(iri, algorithm, size_param(query, "k", engine_.config().k)))
        out.push_back(render::candidate(c, px));
      return {200, std::move(out)};
    }
    if (path == "/api/link") {
      if (method != "POST") return not_allowed();
      auto j = parse_body(body);
      auto source = render::parse_iri(field(j, "local"), px, "local");
      auto target = render::parse_iri(field(j, "target"), px, "target");
      auto type = j.contains("linkType") ? field(j, "linkType").get<std::string>() : std::string("owl:sameAs");
      return {200, render::link_assertion(engine_.link(source, target, type), px)};
    }
    if (starts("/api/enhance/candidates/")) {
      if (method != "GET") return not_allowed();
      Iri iri = path_iri(path.substr(std::string_view("/api/enhance/candidates/").size()));
      render::Json out = render::Json::array();
      for (const auto& g : engine_.enhancement_candidates(iri, size_param(query, "k", engine_.config().context_k, true)))
        out.push_back(render::enhancement_group(g, px));
      return {200, std::move(out)};
    }
    if (path == "/api/enhance") {
      if (method != "POST") return not_allowed();
      auto j = parse_body(body);
      EnhancementOp op;
      op.kind = parse_enhancement_kind(field(j, "kind").get<std::string>());
      op.subject = render::parse_iri(field(j, "subject"), px, "subject");
      if (op.kind == EnhancementKind::AddType && !j.contains("predicate"))
        op.predicate = Iri(vocab::kRdfType);
      else
        op.predicate = render::parse_iri(field(j, "predicate"), px, "predicate");
      op.value = render::parse_term(field(j, "value"), px, "value");
      if (j.contains("source") && !j["source"].is_null()) op.source = render::parse_iri(j["source"], px, "source");
      auto outcome = engine_.enhance(op);
      return {200, render::Json{{"kind", to_string(op.kind)},
                                {"changed", outcome.changed},
                                {"triple", render::triple(outcome.triple, px)}}};
    }
    if (path == "/api/triple") {
      if (method != "DELETE") return not_allowed();
      auto j = parse_body(body);
      auto removed = engine_.delete_triple(render::parse_iri(field(j, "subject"), px, "subject"),
                                           render::parse_iri(field(j, "predicate"), px, "predicate"),
                                           render::parse_term(field(j, "object"), px, "object"));
      return {200, render::Json{{"status", "deleted"}, {"triple", render::triple(removed, px)}}};
    }
    if (path == "/api/linktypes") {
      if (method != "GET") return not_allowed();
      render::Json out = render::Json::array();
      for (const auto& t : engine_.catalog().types()) out.push_back(render::link_type(t, px));
      return {200, std::move(out)};
    }
    return error(404, "NotFound", "no route for " + std::string(path));
  }

  Engine& engine_;
};

// Catch-all handlers so dispatch() sees the raw, still percent-encoded
// request target.
inline void install_routes(httplib::Server& server, Api& api) {
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
    auto r = api.dispatch(req.method, req.target, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Delete(".*", handler);
}

}  // namespace lode
