#pragma once

// Remote endpoint mode: the containment searches run against a live SPARQL
// endpoint (Virtuoso's bif:contains), and the returned bindings are
// materialized into a small repository that the regular endpoint pipeline
// ranks.

#include <httplib.h>

#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "lode/endpoint.hpp"

namespace lode {

using SparqlRow = std::map<std::string, Term>;

// Term of one binding in the SPARQL 1.1 JSON results format. Blank nodes
// come back as nullopt.
inline std::optional<Term> parse_sparql_binding(const nlohmann::json& b) {
  auto type = b.value("type", "");
  auto value = b.value("value", "");
  if (type == "uri") return Term(Iri(value));
  if (type == "literal" || type == "typed-literal") {
    std::optional<std::string> lang;
    std::optional<Iri> datatype;
    if (b.contains("xml:lang")) lang = b["xml:lang"].get<std::string>();
    if (b.contains("datatype")) datatype = Iri(b["datatype"].get<std::string>());
    if (lang) datatype.reset();
    return Term(Literal(value, lang, datatype));
  }
  return std::nullopt;
}

inline std::vector<SparqlRow> parse_sparql_results(std::string_view body) {
  auto doc = nlohmann::json::parse(body.begin(), body.end(), nullptr, false);
  if (doc.is_discarded() || !doc.contains("results") || !doc["results"].contains("bindings"))
    throw Error(ErrorCode::RemoteFailure, "not a SPARQL JSON result document");
  std::vector<SparqlRow> rows;
  for (const auto& binding : doc["results"]["bindings"]) {
    SparqlRow row;
    for (auto it = binding.begin(); it != binding.end(); ++it)
      if (auto t = parse_sparql_binding(it.value())) row.emplace(it.key(), std::move(*t));
    rows.push_back(std::move(row));
  }
  return rows;
}

class SparqlClient {
 public:
  // e.g. "http://dbpedia.org/sparql" or "http://127.0.0.1:8890/sparql"
  explicit SparqlClient(const std::string& endpoint_url, int timeout_seconds = 10) {
    auto scheme_end = endpoint_url.find("://");
    if (scheme_end == std::string::npos) throw Error(ErrorCode::InvalidConfig, "endpoint URL needs a scheme");
    auto path_start = endpoint_url.find('/', scheme_end + 3);
    base_ = endpoint_url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : endpoint_url.substr(path_start);
    client_ = std::make_unique<httplib::Client>(base_);
    client_->set_connection_timeout(timeout_seconds, 0);
    client_->set_read_timeout(timeout_seconds, 0);
  }

  std::vector<SparqlRow> select(const std::string& query) {
    std::lock_guard lock(mutex_);
    httplib::Params params{{"query", query}, {"format", "application/sparql-results+json"}};
    httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
    auto res = client_->Post(path_, headers, params);
    if (!res) throw Error(ErrorCode::RemoteFailure, base_ + path_ + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw Error(ErrorCode::RemoteFailure, base_ + path_ + " answered HTTP " + std::to_string(res->status));
    return parse_sparql_results(res->body);
  }

 private:
  std::string base_;
  std::string path_;
  std::unique_ptr<httplib::Client> client_;
  std::mutex mutex_;
};

namespace sparql {

inline std::string iri_ref(const Iri& iri) { return "<" + iri.str() + ">"; }

// Quotes and backslashes cannot be escaped inside a bif:contains phrase.
inline std::string contains_phrase(std::string_view term) {
  std::string out;
  for (char c : term)
    if (c != '"' && c != '\'' && c != '\\') out += c;
  return "'\"" + std::string(detail::trim(out)) + "\"'";
}

inline std::string values_block(std::string_view var, std::span<const Iri> iris) {
  std::string out = "VALUES ?" + std::string(var) + " {";
  for (const auto& i : iris) out += " " + iri_ref(i);
  return out + " }";
}

// Entities whose value on one of the properties contains the phrase.
inline std::string containment_query(std::string_view term, std::span<const Iri> properties, std::size_t limit) {
  return "SELECT DISTINCT ?instance ?property ?value\nWHERE {\n  " + values_block("property", properties) +
         "\n  ?instance ?property ?value .\n  ?value <bif:contains> " + contains_phrase(term) + " .\n}\nLIMIT " +
         std::to_string(limit);
}

inline std::string describe_query(std::span<const Iri> subjects, std::span<const Iri> properties) {
  return "SELECT ?instance ?property ?value\nWHERE {\n  " + values_block("instance", subjects) + "\n  " +
         values_block("property", properties) + "\n  ?instance ?property ?value .\n}";
}

}  // namespace sparql

// Fetches everything the endpoint pipeline reads for the given terms: the
// matching label/abstract literals, then labels, types, redirects and
// disambiguation links of the matches and of the pages they lead to.
inline Repository fetch_candidate_graph(SparqlClient& client, std::span<const std::string> terms,
                                        const EndpointConfig& cfg, const RepoConfig& target_config,
                                        std::size_t limit = 500) {
  cfg.validate();
  Repository repo(target_config);
  auto add_rows = [&](const std::vector<SparqlRow>& rows) {
    std::set<Iri> subjects;
    for (const auto& row : rows) {
      auto s = row.find("instance"), p = row.find("property"), o = row.find("value");
      if (s == row.end() || p == row.end() || o == row.end()) continue;
      const auto* si = as_iri(s->second);
      const auto* pi = as_iri(p->second);
      if (!si || !pi) continue;
      repo.add(Triple{*si, *pi, o->second, Origin::target()});
      subjects.insert(*si);
    }
    return subjects;
  };

  std::vector<Iri> search_props;
  if (cfg.use_label) search_props = target_config.label_properties;
  if (cfg.use_abstract) search_props.push_back(cfg.abstract_property);
  std::set<Iri> frontier;
  for (const auto& term : terms) {
    if (detail::trim(term).empty()) continue;
    auto found = add_rows(client.select(sparql::containment_query(term, search_props, limit)));
    frontier.insert(found.begin(), found.end());
  }

  std::vector<Iri> describe_props = target_config.label_properties;
  describe_props.push_back(Iri(vocab::kRdfType));
  describe_props.push_back(cfg.redirect_property);
  describe_props.push_back(cfg.disambiguates_property);
  std::set<Iri> described;
  for (std::size_t round = 0; round <= cfg.max_redirect_depth && !frontier.empty(); ++round) {
    std::vector<Iri> batch;
    for (const auto& s : frontier)
      if (described.insert(s).second) batch.push_back(s);
    frontier.clear();
    if (batch.empty()) break;
    add_rows(client.select(sparql::describe_query(batch, describe_props)));
    for (const auto& s : batch)
      for (const auto* t : repo.by_subject(s))
        if (t->predicate == cfg.redirect_property || t->predicate == cfg.disambiguates_property)
          if (const auto* o = as_iri(t->object)) frontier.insert(*o);
  }
  // Pages reached on the last hop still need their labels.
  if (!frontier.empty()) {
    std::vector<Iri> batch;
    for (const auto& s : frontier)
      if (!described.count(s)) batch.push_back(s);
    if (!batch.empty()) add_rows(client.select(sparql::describe_query(batch, describe_props)));
  }
  return repo;
}

inline std::vector<LinkCandidate> rank_remote(SparqlClient& client, std::span<const std::string> terms,
                                              const Entity& local, const EndpointConfig& cfg,
                                              const DisjointnessSet& declarations, std::size_t k,
                                              const RepoConfig& target_config = {}) {
  if (terms.empty()) throw Error(ErrorCode::NoSearchTerms, local.iri.str());
  auto graph = fetch_candidate_graph(client, terms, cfg, target_config);
  return rank_endpoint_terms(terms, local, graph, cfg, declarations, k);
}

}  // namespace lode
