#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

// f_p = |{E : E has at least one assertion on p}| / |entities|, plus the
// analogous fraction of entities carrying each type. Entities are the
// distinct subjects of the repository. Counts are kept so the rationals are
// exact.
class PropertyFrequencyIndex {
 public:
  PropertyFrequencyIndex() = default;
  PropertyFrequencyIndex(std::map<Iri, std::uint64_t> property_counts, std::map<Iri, std::uint64_t> type_counts,
                         std::uint64_t entity_count)
      : properties_(std::move(property_counts)), types_(std::move(type_counts)), entities_(entity_count) {}

  std::uint64_t entity_count() const noexcept { return entities_; }

  std::uint64_t property_count(const Iri& p) const { return lookup(properties_, p); }
  std::uint64_t type_count(const Iri& t) const { return lookup(types_, t); }

  double frequency(const Iri& p) const { return ratio(property_count(p)); }
  double type_frequency(const Iri& t) const { return ratio(type_count(t)); }

  const std::map<Iri, std::uint64_t>& property_counts() const noexcept { return properties_; }
  const std::map<Iri, std::uint64_t>& type_counts() const noexcept { return types_; }

 private:
  static std::uint64_t lookup(const std::map<Iri, std::uint64_t>& m, const Iri& key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  }
  double ratio(std::uint64_t n) const {
    return entities_ == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(entities_);
  }

  std::map<Iri, std::uint64_t> properties_;
  std::map<Iri, std::uint64_t> types_;
  std::uint64_t entities_ = 0;
};

inline PropertyFrequencyIndex compute_frequencies(const Repository& repo) {
  auto subjects = repo.subjects();
  if (subjects.empty()) throw Error(ErrorCode::EmptyRepository, "no entities to compute frequencies over");
  std::map<Iri, std::uint64_t> props;
  for (const auto& p : repo.predicates()) {
    std::set<std::string_view> distinct;
    for (const auto* t : repo.by_predicate(p)) distinct.insert(t->subject.str());
    props.emplace(p, distinct.size());
  }
  std::map<Iri, std::uint64_t> types;
  for (const auto* t : repo.by_predicate(Iri(vocab::kRdfType))) {
    if (const auto* type = as_iri(t->object)) types[*type];
  }
  for (auto& [type, count] : types) count = repo.instances_of(type).size();
  return PropertyFrequencyIndex(std::move(props), std::move(types), subjects.size());
}

// The entity's predicates (rdf:type excluded) ordered by descending f_p, ties
// by predicate IRI.
inline std::vector<Iri> ranked_predicates(const Entity& entity, const PropertyFrequencyIndex& index) {
  std::set<Iri> distinct;
  for (const auto& t : entity.assertions)
    if (t.predicate.str() != vocab::kRdfType) distinct.insert(t.predicate);
  std::vector<Iri> preds(distinct.begin(), distinct.end());
  std::stable_sort(preds.begin(), preds.end(), [&](const Iri& a, const Iri& b) {
    return index.property_count(a) > index.property_count(b);
  });
  return preds;
}

// Top-k predicates with all of their values (insertion order).
inline std::vector<ContextEntry> select_context(const Entity& entity, const PropertyFrequencyIndex& index,
                                                std::size_t k) {
  auto preds = ranked_predicates(entity, index);
  if (preds.size() > k) preds.resize(k);
  std::vector<ContextEntry> out;
  out.reserve(preds.size());
  for (auto& p : preds) {
    ContextEntry entry{std::move(p), {}};
    for (const auto& t : entity.assertions)
      if (t.predicate == entry.predicate) entry.values.push_back(t.object);
    out.push_back(std::move(entry));
  }
  return out;
}

// Top-k types of the entity by type frequency, ties by IRI.
inline std::vector<Iri> select_type_context(const Entity& entity, const PropertyFrequencyIndex& index, std::size_t k) {
  std::vector<Iri> types(entity.types.begin(), entity.types.end());
  std::stable_sort(types.begin(), types.end(),
                   [&](const Iri& a, const Iri& b) { return index.type_count(a) > index.type_count(b); });
  if (types.size() > k) types.resize(k);
  return types;
}

}  // namespace lode
