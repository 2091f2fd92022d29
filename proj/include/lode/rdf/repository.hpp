#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lode/rdf/term.hpp"
#include "lode/rdf/text.hpp"

namespace lode {

// The ten most frequent labeling properties of the LOD web, most used first.
inline std::vector<Iri> default_label_properties() {
  const std::string foaf(vocab::kFoaf);
  return {
      Iri(foaf + "name"),
      Iri(vocab::kRdfsLabel),
      Iri(foaf + "givenname"),
      Iri(foaf + "accountName"),
      Iri(foaf + "family_name"),
      Iri(foaf + "firstName"),
      Iri(foaf + "surname"),
      Iri(std::string(vocab::kSkos) + "prefLabel"),
      Iri(foaf + "openid"),
      Iri(std::string(vocab::kDcterms) + "identifier"),
  };
}

struct RepoConfig {
  std::vector<Iri> label_properties = default_label_properties();
  Iri abstract_property{vocab::kDboAbstract};
};

enum class TextField { Label, Abstract };

struct Entity {
  Iri iri;
  std::set<Iri> types;
  std::vector<Triple> assertions;  // insertion order, all with subject == iri

  bool empty() const noexcept { return assertions.empty(); }
};

// Set of triples with subject/predicate/object/type/text indexes. Value type:
// copies are independent snapshots.
class Repository {
 public:
  using TripleId = std::uint32_t;

  explicit Repository(RepoConfig config = {}) : config_(std::move(config)) { refresh_label_set(); }

  const RepoConfig& config() const noexcept { return config_; }

  // Replaces the label property list (and abstract property) and rebuilds
  // the text indexes.
  void reconfigure(RepoConfig config) {
    config_ = std::move(config);
    refresh_label_set();
    labels_.clear();
    abstracts_.clear();
    for (TripleId id = 0; id < slots_.size(); ++id)
      if (slots_[id]) index_text(id, *slots_[id]);
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  // Inserts the statement; returns false (and leaves the repository
  // untouched) when an equal statement is already present.
  bool add(Triple t) {
    if (ids_.count(t)) return false;
    auto id = static_cast<TripleId>(slots_.size());
    slots_.push_back(std::move(t));
    const Triple& stored = *slots_.back();
    ids_.emplace(stored, id);
    by_subject_[stored.subject.str()].push_back(id);
    by_predicate_[stored.predicate.str()].push_back(id);
    by_object_[to_ntriples(stored.object)].push_back(id);
    if (stored.predicate.str() == vocab::kRdfType)
      if (auto* type = as_iri(stored.object)) by_type_[type->str()].push_back(id);
    index_text(id, stored);
    return true;
  }

  // Removes the statement matching t's subject/predicate/object.
  bool remove(const Triple& t) {
    auto it = ids_.find(t);
    if (it == ids_.end()) return false;
    TripleId id = it->second;
    const Triple& stored = *slots_[id];
    unlink(by_subject_, stored.subject.str(), id);
    unlink(by_predicate_, stored.predicate.str(), id);
    unlink(by_object_, to_ntriples(stored.object), id);
    if (stored.predicate.str() == vocab::kRdfType)
      if (auto* type = as_iri(stored.object)) unlink(by_type_, type->str(), id);
    labels_.remove(id);
    abstracts_.remove(id);
    ids_.erase(it);
    slots_[id].reset();
    if (slots_.size() > 64 && slots_.size() > 2 * ids_.size()) compact();
    return true;
  }

  bool contains(const Triple& t) const { return ids_.count(t) != 0; }

  // Rewrites the provenance of an existing statement in place.
  bool set_origin(const Triple& t, Origin origin) {
    auto it = ids_.find(t);
    if (it == ids_.end()) return false;
    slots_[it->second]->origin = std::move(origin);
    return true;
  }

  const Triple* find(const Triple& t) const {
    auto it = ids_.find(t);
    return it == ids_.end() ? nullptr : &*slots_[it->second];
  }

  // Live triples in insertion order.
  std::vector<Triple> triples() const {
    std::vector<Triple> out;
    out.reserve(ids_.size());
    for (const auto& slot : slots_)
      if (slot) out.push_back(*slot);
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (const auto& slot : slots_)
      if (slot) fn(*slot);
  }

  std::vector<const Triple*> by_subject(const Iri& s) const { return lookup(by_subject_, s.str()); }
  std::vector<const Triple*> by_predicate(const Iri& p) const { return lookup(by_predicate_, p.str()); }
  std::vector<const Triple*> by_object(const Term& o) const { return lookup(by_object_, to_ntriples(o)); }

  bool has_subject(const Iri& s) const { return by_subject_.count(s.str()) != 0; }

  // Subjects asserted to have the given rdf:type, sorted.
  std::vector<Iri> instances_of(const Iri& type) const {
    std::set<Iri> out;
    for (const auto* t : lookup(by_type_, type.str())) out.insert(t->subject);
    return {out.begin(), out.end()};
  }

  // Distinct subjects, sorted.
  std::vector<Iri> subjects() const {
    std::vector<Iri> out;
    out.reserve(by_subject_.size());
    for (const auto& [s, ids] : by_subject_) out.emplace_back(s);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Distinct predicates, sorted.
  std::vector<Iri> predicates() const {
    std::vector<Iri> out;
    for (const auto& [p, ids] : by_predicate_) out.emplace_back(p);
    std::sort(out.begin(), out.end());
    return out;
  }

  Entity entity(const Iri& iri) const {
    Entity e{iri, {}, {}};
    for (const auto* t : by_subject(iri)) {
      e.assertions.push_back(*t);
      if (t->predicate.str() == vocab::kRdfType)
        if (auto* type = as_iri(t->object)) e.types.insert(*type);
    }
    return e;
  }

  bool is_label_property(const Iri& p) const { return label_set_.count(p.str()) != 0; }

  // Subjects with a LABEL / ABSTRACT literal containing every token of term
  // as a contiguous run, sorted.
  std::vector<Iri> text_search(std::string_view term, TextField field) const {
    auto trimmed = detail::trim(term);
    if (trimmed.empty()) throw Error(ErrorCode::EmptyTerm, "search term is empty");
    auto tokens = tokenize(trimmed);
    const auto& index = field == TextField::Label ? labels_ : abstracts_;
    std::set<Iri> out;
    for (auto id : index.match(tokens)) out.insert(index.doc(id).subject);
    return {out.begin(), out.end()};
  }

  const TextIndex& label_index() const noexcept { return labels_; }
  const TextIndex& abstract_index() const noexcept { return abstracts_; }

  // Order-independent digest over statements and their origins.
  std::uint64_t fingerprint() const {
    std::uint64_t sum = 0;
    for_each([&](const Triple& t) {
      std::string key = to_ntriples(t);
      key += static_cast<char>('0' + static_cast<int>(t.origin.kind));
      if (t.origin.source) key += t.origin.source->str();
      std::uint64_t h = detail::fnv1a(key);
      sum += h ^ (h >> 29);
    });
    return sum ^ (static_cast<std::uint64_t>(size()) * 0x9e3779b97f4a7c15ULL);
  }

  // Statement-set equality (origins ignored).
  bool same_statements(const Repository& other) const {
    if (size() != other.size()) return false;
    for (const auto& [t, id] : ids_)
      if (!other.contains(t)) return false;
    return true;
  }

 private:
  using Postings = std::unordered_map<std::string, std::vector<TripleId>>;

  void refresh_label_set() {
    label_set_.clear();
    for (const auto& p : config_.label_properties) label_set_.insert(p.str());
  }

  void index_text(TripleId id, const Triple& t) {
    const auto* lit = as_literal(t.object);
    if (!lit) return;
    if (label_set_.count(t.predicate.str())) labels_.add(id, t.subject, lit->lexical);
    if (t.predicate == config_.abstract_property) abstracts_.add(id, t.subject, lit->lexical);
  }

  static void unlink(Postings& index, const std::string& key, TripleId id) {
    auto it = index.find(key);
    if (it == index.end()) return;
    auto& list = it->second;
    auto pos = std::lower_bound(list.begin(), list.end(), id);
    if (pos != list.end() && *pos == id) list.erase(pos);
    if (list.empty()) index.erase(it);
  }

  std::vector<const Triple*> lookup(const Postings& index, const std::string& key) const {
    std::vector<const Triple*> out;
    auto it = index.find(key);
    if (it == index.end()) return out;
    out.reserve(it->second.size());
    for (auto id : it->second) out.push_back(&*slots_[id]);
    return out;
  }

  void compact() {
    auto live = triples();
    Repository fresh(config_);
    for (auto& t : live) fresh.add(std::move(t));
    *this = std::move(fresh);
  }

  RepoConfig config_;
  std::unordered_set<std::string> label_set_;
  std::vector<std::optional<Triple>> slots_;
  std::unordered_map<Triple, TripleId, StatementHash, StatementEq> ids_;
  Postings by_subject_;
  Postings by_predicate_;
  Postings by_object_;
  Postings by_type_;
  TextIndex labels_;
  TextIndex abstracts_;
};

inline Entity get_entity(const Repository& repo, const Iri& iri) { return repo.entity(iri); }

// Literal values of the entity's label-property assertions: list priority
// first, then insertion order; trimmed, deduplicated, empties dropped.
inline std::vector<std::string> search_terms(const Entity& entity, std::span<const Iri> label_properties) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& prop : label_properties) {
    for (const auto& t : entity.assertions) {
      if (t.predicate != prop) continue;
      const auto* lit = as_literal(t.object);
      if (!lit) continue;
      std::string value(detail::trim(lit->lexical));
      if (value.empty() || !seen.insert(value).second) continue;
      out.push_back(std::move(value));
    }
  }
  return out;
}

inline std::vector<std::string> extract_search_terms(const Entity& entity, std::span<const Iri> label_properties) {
  auto terms = search_terms(entity, label_properties);
  if (terms.empty()) throw Error(ErrorCode::NoSearchTerms, "no label assertions on " + entity.iri.str());
  return terms;
}

inline std::vector<std::string> extract_search_terms(const Repository& repo, const Iri& iri) {
  return extract_search_terms(repo.entity(iri), repo.config().label_properties);
}

// First label value of an IRI in repo, falling back to its local name.
inline std::string display_label(const Repository& repo, const Iri& iri) {
  auto terms = search_terms(repo.entity(iri), repo.config().label_properties);
  return terms.empty() ? std::string(iri.local_name()) : terms.front();
}

// Immutable published snapshots with a single serialized writer. Readers
// take a snapshot and never observe a partially applied update.
class Store {
 public:
  explicit Store(Repository initial = Repository())
      : current_(std::make_shared<const Repository>(std::move(initial))) {}

  std::shared_ptr<const Repository> snapshot() const {
    std::lock_guard lock(publish_mutex_);
    return current_;
  }

  // Runs fn on a private copy of the current snapshot and publishes the copy
  // when fn returns normally. Returns whatever fn returns.
  template <class F>
  auto update(F&& fn) {
    std::lock_guard writer(writer_mutex_);
    auto next = std::make_shared<Repository>(*snapshot());
    if constexpr (std::is_void_v<decltype(fn(*next))>) {
      fn(*next);
      publish(std::move(next));
    } else {
      auto result = fn(*next);
      publish(std::move(next));
      return result;
    }
  }

  // Publishes a replacement snapshot computed elsewhere.
  void replace(Repository repo) {
    std::lock_guard writer(writer_mutex_);
    publish(std::make_shared<Repository>(std::move(repo)));
  }

 private:
  void publish(std::shared_ptr<Repository> next) {
    std::lock_guard lock(publish_mutex_);
    current_ = std::move(next);
  }

  mutable std::mutex publish_mutex_;
  std::mutex writer_mutex_;
  std::shared_ptr<const Repository> current_;
};

}  // namespace lode
