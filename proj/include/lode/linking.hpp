#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lode/rdf/repository.hpp"

namespace lode {

// Kinds of resources a link type relates: individuals, concepts, properties.
enum Applicability : std::uint8_t {
  kIndividual = 1,
  kConcept = 2,
  kProperty = 4,
};

inline std::string applicability_string(std::uint8_t mask) {
  std::string out;
  auto add = [&](char c) {
    if (!out.empty()) out += '/';
    out += c;
  };
  if (mask & kIndividual) add('I');
  if (mask & kConcept) add('C');
  if (mask & kProperty) add('P');
  return out;
}

inline std::uint8_t parse_applicability(std::string_view text) {
  std::uint8_t mask = 0;
  for (char c : text) {
    switch (c) {
      case 'I': mask |= kIndividual; break;
      case 'C': mask |= kConcept; break;
      case 'P': mask |= kProperty; break;
      case '/': case ' ': break;
      default: throw Error(ErrorCode::InvalidConfig, "bad applicability '" + std::string(text) + "'");
    }
  }
  if (mask == 0) throw Error(ErrorCode::InvalidConfig, "empty applicability");
  return mask;
}

struct LinkType {
  std::string vocabulary;  // prefix, e.g. "owl"
  std::string relation;    // e.g. "sameAs"
  std::uint8_t applies_to = kIndividual;
  Iri iri;

  std::string name() const { return vocabulary + ":" + relation; }
  friend bool operator==(const LinkType& a, const LinkType& b) { return a.iri == b.iri; }
};

// The link-type vocabulary offered to curators. Starts from the ten most used
// LOD relation properties; user additions are appended.
class LinkTypeCatalog {
 public:
  explicit LinkTypeCatalog(PrefixTable prefixes = PrefixTable::defaults()) : prefixes_(std::move(prefixes)) {}

  static LinkTypeCatalog defaults(PrefixTable prefixes = PrefixTable::defaults()) {
    LinkTypeCatalog c(std::move(prefixes));
    c.add("owl", "sameAs", kIndividual);
    c.add("rdfs", "subClassOf", kConcept);
    c.add("rdfs", "subPropertyOf", kProperty);
    c.add("owl", "inverseOf", kProperty);
    c.add("skos", "broader", kIndividual | kConcept);
    c.add("owl", "equivalentClass", kConcept);
    c.add("skos", "narrower", kIndividual | kConcept);
    c.add("owl", "disjointWith", kConcept | kProperty);
    c.add("owl", "equivalentProperty", kProperty);
    c.add("skos", "related", kIndividual | kConcept);
    return c;
  }

  // "vocabulary<TAB>relation<TAB>applicability" rows, '#' comments.
  static LinkTypeCatalog load(std::istream& in, PrefixTable prefixes = PrefixTable::defaults()) {
    LinkTypeCatalog c(std::move(prefixes));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto view = detail::trim(line);
      if (view.empty() || view.front() == '#') continue;
      std::vector<std::string_view> cols;
      std::size_t start = 0;
      for (std::size_t tab; (tab = view.find('\t', start)) != std::string_view::npos; start = tab + 1)
        cols.push_back(view.substr(start, tab - start));
      cols.push_back(view.substr(start));
      if (cols.size() != 3) throw ParseError(ErrorCode::MalformedLine, lineno, "expected 3 tab-separated columns");
      try {
        c.add(std::string(detail::trim(cols[0])), std::string(detail::trim(cols[1])), parse_applicability(cols[2]));
      } catch (const Error& e) {
        throw ParseError(ErrorCode::MalformedLine, lineno, e.what());
      }
    }
    return c;
  }

  const LinkType& add(std::string vocabulary, std::string relation, std::uint8_t applies_to) {
    LinkType t{vocabulary, relation, applies_to, prefixes_.expand(vocabulary + ":" + relation)};
    if (std::any_of(types_.begin(), types_.end(), [&](const LinkType& x) { return x.iri == t.iri; }))
      throw Error(ErrorCode::LinkTypeConflict, t.name() + " already in catalog");
    types_.push_back(std::move(t));
    return types_.back();
  }

  // Accepts the bare relation ("sameAs"), the compact name ("owl:sameAs") or
  // the full IRI.
  const LinkType& find(std::string_view name) const {
    auto trimmed = detail::trim(name);
    for (const auto& t : types_)
      if (t.iri.str() == trimmed || t.name() == trimmed) return t;
    const LinkType* match = nullptr;
    for (const auto& t : types_) {
      if (t.relation != trimmed) continue;
      if (match) throw Error(ErrorCode::UnknownLinkType, "ambiguous link type '" + std::string(trimmed) + "'");
      match = &t;
    }
    if (!match) throw Error(ErrorCode::UnknownLinkType, "'" + std::string(trimmed) + "'");
    return *match;
  }

  bool contains_iri(const Iri& iri) const {
    return std::any_of(types_.begin(), types_.end(), [&](const LinkType& t) { return t.iri == iri; });
  }

  const std::vector<LinkType>& types() const noexcept { return types_; }
  const PrefixTable& prefixes() const noexcept { return prefixes_; }

 private:
  PrefixTable prefixes_;
  std::vector<LinkType> types_;
};

struct ContextEntry {
  Iri predicate;
  std::vector<Term> values;
};

struct LinkCandidate {
  Iri target;
  double score = 0.0;
  int rank = 0;
  std::string display_label;
  std::vector<ContextEntry> context;
  std::vector<Iri> types;
};

enum class CreatedBy { Curator };

struct LinkAssertion {
  Iri source;
  LinkType link_type;
  Iri target;
  CreatedBy created_by = CreatedBy::Curator;
  std::int64_t timestamp = 0;
};

// Curator-declared incompatible (local type, target type) pairs; symmetric.
class DisjointnessSet {
 public:
  void declare(const Iri& a, const Iri& b) {
    pairs_.emplace(a, b);
    pairs_.emplace(b, a);
  }

  bool disjoint(const Iri& a, const Iri& b) const { return pairs_.count({a, b}) != 0; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::set<std::pair<Iri, Iri>>& pairs() const noexcept { return pairs_; }

  // "typeA<TAB>typeB" per line; compact forms resolved through prefixes.
  static DisjointnessSet load(std::istream& in, const PrefixTable& prefixes) {
    DisjointnessSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto view = detail::trim(line);
      if (view.empty() || view.front() == '#') continue;
      auto tab = view.find('\t');
      if (tab == std::string_view::npos) throw ParseError(ErrorCode::MalformedLine, lineno, "expected typeA<TAB>typeB");
      try {
        set.declare(prefixes.expand(view.substr(0, tab)), prefixes.expand(view.substr(tab + 1)));
      } catch (const Error& e) {
        throw ParseError(ErrorCode::MalformedLine, lineno, e.what());
      }
    }
    return set;
  }

 private:
  std::set<std::pair<Iri, Iri>> pairs_;
};

// Records a curator-approved link as a LOCAL triple. Idempotent.
inline LinkAssertion assert_link(Repository& local, const LinkTypeCatalog& catalog, const Iri& source,
                                 const Iri& target, std::string_view link_type, std::int64_t timestamp) {
  const LinkType& type = catalog.find(link_type);
  if (!local.has_subject(source)) throw Error(ErrorCode::UnknownLocalEntity, source.str());
  local.add(Triple{source, type.iri, target, Origin::local()});
  return LinkAssertion{source, type, target, CreatedBy::Curator, timestamp};
}

// Existing outgoing links of a local entity whose predicate is a catalog type.
inline std::vector<LinkAssertion> links_of(const Repository& local, const LinkTypeCatalog& catalog, const Iri& source) {
  std::vector<LinkAssertion> out;
  for (const auto* t : local.by_subject(source)) {
    const auto* target = as_iri(t->object);
    if (!target || !catalog.contains_iri(t->predicate)) continue;
    out.push_back(LinkAssertion{source, catalog.find(t->predicate.str()), *target, CreatedBy::Curator, 0});
  }
  return out;
}

enum class Algorithm { EndpointA, EndpointL, EndpointAL, WikiStat };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::EndpointA: return "endpoint-a";
    case Algorithm::EndpointL: return "endpoint-l";
    case Algorithm::EndpointAL: return "endpoint-al";
    case Algorithm::WikiStat: return "wikistat";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view text) {
  auto t = lowercase(detail::trim(text));
  for (auto a : {Algorithm::EndpointA, Algorithm::EndpointL, Algorithm::EndpointAL, Algorithm::WikiStat})
    if (t == to_string(a)) return a;
  throw Error(ErrorCode::UnknownAlgorithm, "'" + std::string(text) + "'");
}

inline constexpr std::size_t kDefaultCandidates = 10;

// Sorts by descending score, equal scores by target IRI, then assigns ranks
// 1..n and truncates to k.
inline void finalize_ranking(std::vector<LinkCandidate>& candidates, std::size_t k) {
  std::sort(candidates.begin(), candidates.end(), [](const LinkCandidate& a, const LinkCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.target < b.target;
  });
  if (candidates.size() > k) candidates.resize(k);
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i].rank = static_cast<int>(i + 1);
}

}  // namespace lode
