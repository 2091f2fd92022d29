#pragma once

#include <span>
#include <vector>

#include "lode/context.hpp"
#include "lode/endpoint.hpp"
#include "lode/linking.hpp"
#include "lode/wikistat.hpp"

namespace lode {

// What the ranking algorithms read. Pointers are non-owning; a missing
// resource makes the algorithms that need it unavailable.
struct LinkerResources {
  const Repository* target = nullptr;
  const AnchorTable* anchors = nullptr;
  const DisjointnessSet* declarations = nullptr;
  EndpointConfig endpoint;
  std::vector<Iri> local_label_properties = default_label_properties();
};

// Dispatches to the endpoint (A / L / AL) or WikiStat ranking.
inline std::vector<LinkCandidate> rank_candidates(const Entity& local, Algorithm algorithm, std::size_t k,
                                                  const LinkerResources& res) {
  auto terms = extract_search_terms(local, res.local_label_properties);
  if (algorithm == Algorithm::WikiStat) {
    if (!res.anchors) throw Error(ErrorCode::InvalidConfig, "no anchor table loaded");
    return rank_wikistat_terms(terms, *res.anchors, k);
  }
  if (!res.target) throw Error(ErrorCode::InvalidConfig, "no target repository loaded");
  static const DisjointnessSet kNone;
  return rank_endpoint_terms(terms, local, *res.target, res.endpoint.with_fields(algorithm),
                             res.declarations ? *res.declarations : kNone, k);
}

// Fills display labels, types and frequency-selected context from the
// target repository for candidates it describes.
inline void attach_context(std::span<LinkCandidate> candidates, const Repository& target,
                           const PropertyFrequencyIndex& index, std::size_t property_k, std::size_t type_k) {
  for (auto& c : candidates) {
    Entity e = target.entity(c.target);
    if (e.empty()) continue;
    auto labels = search_terms(e, target.config().label_properties);
    if (!labels.empty()) c.display_label = labels.front();
    c.types = select_type_context(e, index, type_k);
    c.context = select_context(e, index, property_k);
  }
}

}  // namespace lode
