#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lode/levenshtein.hpp"
#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

// Containment search plus Levenshtein ranking against a target repository.
struct EndpointConfig {
  bool use_label = true;
  bool use_abstract = true;
  Iri abstract_property{vocab::kDboAbstract};
  Iri redirect_property{vocab::kDboRedirects};
  Iri disambiguates_property{vocab::kDboDisambiguates};
  std::size_t max_redirect_depth = 5;

  void validate() const {
    if (!use_label && !use_abstract)
      throw Error(ErrorCode::InvalidConfig, "endpoint search needs label and/or abstract enabled");
    if (max_redirect_depth == 0) throw Error(ErrorCode::InvalidConfig, "max_redirect_depth must be positive");
  }

  // The A / L / AL search-field configurations.
  EndpointConfig with_fields(Algorithm algorithm) const {
    EndpointConfig cfg = *this;
    switch (algorithm) {
      case Algorithm::EndpointA: cfg.use_label = false; cfg.use_abstract = true; break;
      case Algorithm::EndpointL: cfg.use_label = true; cfg.use_abstract = false; break;
      case Algorithm::EndpointAL: cfg.use_label = true; cfg.use_abstract = true; break;
      case Algorithm::WikiStat: throw Error(ErrorCode::UnknownAlgorithm, "wikistat is not an endpoint configuration");
    }
    return cfg;
  }
};

// Union over terms of label and/or abstract containment matches, sorted.
inline std::vector<Iri> search_candidates(std::span<const std::string> terms, const Repository& target,
                                          const EndpointConfig& cfg) {
  cfg.validate();
  if (terms.empty()) throw Error(ErrorCode::NoSearchTerms, "no search terms");
  if (cfg.use_abstract && cfg.abstract_property != target.config().abstract_property)
    throw Error(ErrorCode::InvalidConfig, "abstract property " + cfg.abstract_property.str() +
                                              " is not the one indexed by the target repository");
  std::set<Iri> found;
  for (const auto& term : terms) {
    if (cfg.use_label)
      for (auto& iri : target.text_search(term, TextField::Label)) found.insert(std::move(iri));
    if (cfg.use_abstract)
      for (auto& iri : target.text_search(term, TextField::Abstract)) found.insert(std::move(iri));
  }
  return {found.begin(), found.end()};
}

// Drops candidates with a type declared disjoint with a type of the local
// entity. Untyped candidates are never dropped.
inline std::vector<Iri> filter_disjoint(std::span<const Iri> candidates, const Entity& local,
                                        const DisjointnessSet& declarations, const Repository& target) {
  std::vector<Iri> out;
  for (const auto& c : candidates) {
    bool excluded = false;
    if (!declarations.empty()) {
      for (const auto& type : target.entity(c).types) {
        for (const auto& local_type : local.types)
          if (declarations.disjoint(local_type, type)) excluded = true;
        if (excluded) break;
      }
    }
    if (!excluded) out.push_back(c);
  }
  return out;
}

// Follows redirect links (bounded depth, cycle-safe) to a terminal page; a
// terminal disambiguation page expands to the entities it lists.
inline std::vector<Iri> resolve_redirects(const Iri& iri, const Repository& target, const EndpointConfig& cfg) {
  auto first_iri_object = [&](const Iri& s, const Iri& p) -> const Iri* {
    for (const auto* t : target.by_subject(s))
      if (t->predicate == p)
        if (const auto* o = as_iri(t->object)) return o;
    return nullptr;
  };

  Iri current = iri;
  std::set<Iri> visited{current};
  for (std::size_t hop = 0; hop < cfg.max_redirect_depth; ++hop) {
    const Iri* next = first_iri_object(current, cfg.redirect_property);
    if (!next || visited.count(*next)) break;
    current = *next;
    visited.insert(current);
  }

  std::set<Iri> listed;
  for (const auto* t : target.by_subject(current))
    if (t->predicate == cfg.disambiguates_property)
      if (const auto* o = as_iri(t->object)) listed.insert(*o);
  if (listed.empty()) return {current};
  return {listed.begin(), listed.end()};
}

// Maximum case-folded Levenshtein similarity between any search term and any
// label value of the candidate; 0 when the candidate has no label.
inline double label_similarity(std::span<const std::string> terms, std::span<const std::string> labels) {
  double best = 0.0;
  for (const auto& term : terms)
    for (const auto& label : labels) best = std::max(best, levenshtein_similarity(term, label));
  return best;
}

inline std::vector<LinkCandidate> rank_endpoint_terms(std::span<const std::string> terms, const Entity& local,
                                                      const Repository& target, const EndpointConfig& cfg,
                                                      const DisjointnessSet& declarations, std::size_t k) {
  auto hits = search_candidates(terms, target, cfg);
  std::set<Iri> resolved;
  for (const auto& hit : hits)
    for (auto& r : resolve_redirects(hit, target, cfg)) resolved.insert(std::move(r));
  std::vector<Iri> pool(resolved.begin(), resolved.end());
  pool = filter_disjoint(pool, local, declarations, target);

  std::vector<LinkCandidate> ranked;
  ranked.reserve(pool.size());
  for (auto& iri : pool) {
    Entity e = target.entity(iri);
    auto labels = search_terms(e, target.config().label_properties);
    LinkCandidate c;
    c.score = label_similarity(terms, labels);
    c.display_label = labels.empty() ? std::string(iri.local_name()) : labels.front();
    c.types.assign(e.types.begin(), e.types.end());
    c.target = std::move(iri);
    ranked.push_back(std::move(c));
  }
  finalize_ranking(ranked, k);
  return ranked;
}

// Search terms come from the local entity's label-property assertions.
inline std::vector<LinkCandidate> rank_endpoint(const Entity& local, std::span<const Iri> local_label_properties,
                                                const Repository& target, const EndpointConfig& cfg,
                                                const DisjointnessSet& declarations, std::size_t k) {
  auto terms = extract_search_terms(local, local_label_properties);
  return rank_endpoint_terms(terms, local, target, cfg, declarations, k);
}

}  // namespace lode
