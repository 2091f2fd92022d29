#pragma once

// JSON renderings of engine values for the HTTP API. Every IRI is emitted in
// full together with its compact form.

#include <json.hpp>

#include "lode/enhancer.hpp"
#include "lode/eval.hpp"
#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"
#include "lode/search.hpp"

namespace lode::render {

using Json = nlohmann::ordered_json;

inline Json iri(const Iri& value, const PrefixTable& prefixes) {
  return Json{{"iri", value.str()}, {"compact", prefixes.compact(value)}};
}

inline Json iris(std::span<const Iri> values, const PrefixTable& prefixes) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(iri(v, prefixes));
  return out;
}

inline Json term(const Term& t, const PrefixTable& prefixes) {
  if (const auto* i = as_iri(t)) {
    Json out{{"type", "iri"}};
    out.update(iri(*i, prefixes));
    return out;
  }
  const auto& lit = std::get<Literal>(t);
  Json out{{"type", "literal"}, {"value", lit.lexical}};
  if (lit.language) out["lang"] = *lit.language;
  if (lit.datatype) out["datatype"] = iri(*lit.datatype, prefixes);
  return out;
}

inline std::string_view origin_name(Origin::Kind k) {
  switch (k) {
    case Origin::Kind::Local: return "LOCAL";
    case Origin::Kind::Enhanced: return "ENHANCED";
    case Origin::Kind::Target: return "TARGET";
  }
  return "?";
}

inline Json triple(const Triple& t, const PrefixTable& prefixes) {
  Json out{{"subject", iri(t.subject, prefixes)},
           {"predicate", iri(t.predicate, prefixes)},
           {"object", term(t.object, prefixes)},
           {"origin", origin_name(t.origin.kind)}};
  if (t.origin.source) out["source"] = iri(*t.origin.source, prefixes);
  return out;
}

inline std::string_view quality_name(MatchQuality q) {
  switch (q) {
    case MatchQuality::Exact: return "exact";
    case MatchQuality::Prefix: return "prefix";
    case MatchQuality::Contains: return "contains";
    case MatchQuality::None: return "none";
  }
  return "?";
}

inline Json cluster(const ResultCluster& c, const PrefixTable& prefixes) {
  return Json{{"representative", iri(c.representative, prefixes)},
              {"label", c.display_label},
              {"quality", quality_name(c.quality)},
              {"members", iris(c.members, prefixes)},
              {"types", iris(c.types, prefixes)}};
}

inline Json link_type(const LinkType& t, const PrefixTable& prefixes) {
  return Json{{"name", t.name()},
              {"vocabulary", t.vocabulary},
              {"relation", t.relation},
              {"appliesTo", applicability_string(t.applies_to)},
              {"iri", iri(t.iri, prefixes)}};
}

inline Json link_assertion(const LinkAssertion& a, const PrefixTable& prefixes) {
  return Json{{"source", iri(a.source, prefixes)},
              {"linkType", link_type(a.link_type, prefixes)},
              {"target", iri(a.target, prefixes)},
              {"createdBy", "CURATOR"},
              {"timestamp", a.timestamp}};
}

inline Json context_entry(const Iri& predicate, std::span<const Term> values, const PrefixTable& prefixes) {
  Json vals = Json::array();
  for (const auto& v : values) vals.push_back(term(v, prefixes));
  return Json{{"predicate", iri(predicate, prefixes)}, {"values", std::move(vals)}};
}

inline Json candidate(const LinkCandidate& c, const PrefixTable& prefixes) {
  Json ctx = Json::array();
  for (const auto& e : c.context) ctx.push_back(context_entry(e.predicate, e.values, prefixes));
  return Json{{"rank", c.rank},
              {"target", iri(c.target, prefixes)},
              {"score", c.score},
              {"label", c.display_label},
              {"types", iris(c.types, prefixes)},
              {"context", std::move(ctx)}};
}

inline Json enhancement_group(const EnhancementGroup& g, const PrefixTable& prefixes) {
  Json out{{"source", iri(g.source, prefixes)}};
  out.update(context_entry(g.predicate, g.values, prefixes));
  return out;
}

inline Json entity(const Entity& e, const std::string& label, std::span<const LinkAssertion> links,
                   const PrefixTable& prefixes) {
  std::vector<Iri> types(e.types.begin(), e.types.end());
  Json assertions = Json::array();
  for (const auto& t : e.assertions) assertions.push_back(triple(t, prefixes));
  Json ls = Json::array();
  for (const auto& l : links) ls.push_back(link_assertion(l, prefixes));
  Json out{{"label", label}};
  out["iri"] = iri(e.iri, prefixes);
  out["types"] = iris(types, prefixes);
  out["assertions"] = std::move(assertions);
  out["links"] = std::move(ls);
  return out;
}

inline Json report(const EvalReport& r, const PrefixTable& prefixes) {
  Json histogram = Json::object();
  for (const auto& [rank, n] : r.position_histogram) histogram[std::to_string(rank)] = n;
  Json results = Json::array();
  for (const auto& e : r.results) {
    Json item{{"local", iri(e.local, prefixes)}, {"target", iri(e.target, prefixes)}};
    item["rank"] = e.rank ? Json(*e.rank) : Json(nullptr);
    item["latencySeconds"] = e.latency_seconds;
    item["noSearchTerms"] = e.no_search_terms;
    results.push_back(std::move(item));
  }
  return Json{{"algorithm", to_string(r.algorithm)},
              {"k", r.k},
              {"entries", r.entries},
              {"mrr", r.mrr},
              {"meanLatencySeconds", r.mean_latency_seconds},
              {"latencyCI95", Json::array({r.latency_ci_low, r.latency_ci_high})},
              {"latencyNote", "in-process local adapter, no network round trip"},
              {"positionHistogram", std::move(histogram)},
              {"missed", r.missed},
              {"noSearchTerms", r.no_search_terms},
              {"results", std::move(results)}};
}

// Request-side parsing.

inline Iri parse_iri(const Json& j, const PrefixTable& prefixes, std::string_view field) {
  std::string text;
  if (j.is_string()) text = j.get<std::string>();
  else if (j.is_object() && j.contains("iri") && j["iri"].is_string()) text = j["iri"].get<std::string>();
  else throw Error(ErrorCode::InvalidIri, std::string(field) + ": expected an IRI string");
  auto trimmed = detail::trim(text);
  if (trimmed.empty()) throw Error(ErrorCode::InvalidIri, std::string(field) + ": empty IRI");
  return prefixes.expand(trimmed);
}

// {"type":"iri","iri":...} or {"type":"literal","value":...,"lang"|"datatype"}.
// A bare string is an IRI.
inline Term parse_term(const Json& j, const PrefixTable& prefixes, std::string_view field) {
  if (j.is_string()) return parse_iri(j, prefixes, field);
  if (!j.is_object()) throw Error(ErrorCode::InvalidOperation, std::string(field) + ": expected a term object");
  std::string type = j.value("type", j.contains("iri") ? "iri" : "literal");
  if (type == "iri") return parse_iri(j, prefixes, field);
  if (type != "literal") throw Error(ErrorCode::InvalidOperation, std::string(field) + ": unknown term type " + type);
  if (!j.contains("value") || !j["value"].is_string())
    throw Error(ErrorCode::InvalidOperation, std::string(field) + ": literal needs a string value");
  std::optional<std::string> lang;
  std::optional<Iri> datatype;
  if (j.contains("lang") && !j["lang"].is_null()) lang = j["lang"].get<std::string>();
  if (j.contains("datatype") && !j["datatype"].is_null()) datatype = parse_iri(j["datatype"], prefixes, field);
  return Literal(j["value"].get<std::string>(), lang, datatype);
}

}  // namespace lode::render
