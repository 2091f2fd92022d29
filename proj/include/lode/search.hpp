#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lode/rdf/repository.hpp"

namespace lode {

struct TypeFilter {
  std::string kind;   // e.g. "concept"
  std::string token;  // e.g. "human"

  friend bool operator==(const TypeFilter&, const TypeFilter&) = default;
};

// "kind:token rest" restricts results to a type; anything else is a plain
// keyword query.
struct SearchQuery {
  std::string raw;
  std::optional<TypeFilter> type_filter;
  std::string keyword;
};

inline const std::vector<std::string>& default_filter_kinds() {
  static const std::vector<std::string> kinds{"concept"};
  return kinds;
}

inline SearchQuery parse_query(std::string_view raw, std::span<const std::string> kinds = default_filter_kinds()) {
  auto text = detail::trim(raw);
  if (text.empty()) throw Error(ErrorCode::EmptyQuery, "query is empty");
  SearchQuery q{std::string(text), std::nullopt, std::string(text)};

  auto head_end = text.find_first_of(" \t");
  auto head = text.substr(0, head_end);
  auto colon = head.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == head.size()) return q;
  auto kind = lowercase(head.substr(0, colon));
  bool known = std::any_of(kinds.begin(), kinds.end(), [&](const std::string& k) { return lowercase(k) == kind; });
  if (!known) return q;
  q.type_filter = TypeFilter{kind, std::string(head.substr(colon + 1))};
  q.keyword = head_end == std::string_view::npos ? std::string() : std::string(detail::trim(text.substr(head_end)));
  return q;
}

// Browse ranking of a label against a keyword.
enum class MatchQuality { None = 0, Contains = 1, Prefix = 2, Exact = 3 };

// Exact (case-insensitive) label > label prefix > contiguous token match
// where the final keyword token may be a prefix ("Wittgens").
inline MatchQuality match_quality(std::string_view label, std::string_view keyword) {
  auto l = lowercase(detail::trim(label));
  auto k = lowercase(detail::trim(keyword));
  if (k.empty()) return MatchQuality::None;
  if (l == k) return MatchQuality::Exact;
  if (l.compare(0, k.size(), k) == 0) return MatchQuality::Prefix;
  if (contains_token_run(tokenize(l), tokenize(k), true)) return MatchQuality::Contains;
  return MatchQuality::None;
}

// Word tokens of an IRI local name with camelCase boundaries split.
inline std::vector<std::string> local_name_tokens(const Iri& iri) {
  std::string spaced;
  auto name = iri.local_name();
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (i > 0 && c >= 'A' && c <= 'Z' && name[i - 1] >= 'a' && name[i - 1] <= 'z') spaced += ' ';
    spaced += c;
  }
  return tokenize(spaced);
}

// A type matches the filter token when one of its labels contains the token
// run, or, for unlabeled types, its local name does.
inline bool type_matches(const Repository& repo, const Iri& type, std::string_view token) {
  auto needle = tokenize(token);
  if (needle.empty()) return false;
  auto labels = search_terms(repo.entity(type), repo.config().label_properties);
  if (labels.empty()) return contains_token_run(local_name_tokens(type), needle);
  return std::any_of(labels.begin(), labels.end(),
                     [&](const std::string& l) { return contains_token_run(tokenize(l), needle); });
}

struct ResultCluster {
  Iri representative;
  std::vector<Iri> members;  // sorted
  std::string display_label;
  std::vector<Iri> types;  // union over members, sorted
  MatchQuality quality = MatchQuality::None;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Entities whose label literals match the keyword, optionally restricted to
// a type, merged into owl:sameAs clusters (connected components among the
// matches), best match first.
inline std::vector<ResultCluster> search(const Repository& repo, const SearchQuery& q, std::size_t limit) {
  std::map<Iri, MatchQuality> matched;
  const auto& labels = repo.label_index();
  auto keyword = detail::trim(q.keyword);

  if (!keyword.empty()) {
    std::set<TextIndex::DocId> docs;
    auto ktokens = tokenize(keyword);
    for (auto id : labels.match(ktokens, true)) docs.insert(id);
    for (auto id : labels.with_prefix(keyword)) docs.insert(id);
    for (auto id : docs) {
      const auto& doc = labels.doc(id);
      auto quality = match_quality(doc.text, keyword);
      if (quality == MatchQuality::None) continue;
      auto& best = matched[doc.subject];
      best = std::max(best, quality);
    }
  } else if (q.type_filter) {
    for (const auto* t : repo.by_predicate(Iri(vocab::kRdfType)))
      matched.emplace(t->subject, MatchQuality::Contains);
  }

  if (q.type_filter) {
    std::map<Iri, bool> type_ok;
    for (auto it = matched.begin(); it != matched.end();) {
      bool keep = false;
      for (const auto& type : repo.entity(it->first).types) {
        auto [pos, inserted] = type_ok.try_emplace(type, false);
        if (inserted) pos->second = type_matches(repo, type, q.type_filter->token);
        if (pos->second) {
          keep = true;
          break;
        }
      }
      it = keep ? std::next(it) : matched.erase(it);
    }
  }

  std::vector<Iri> entities;
  std::unordered_map<Iri, std::size_t> slot;
  for (const auto& [iri, quality] : matched) {
    slot.emplace(iri, entities.size());
    entities.push_back(iri);
  }
  detail::UnionFind uf(entities.size());
  const Iri same_as(vocab::kOwlSameAs);
  for (std::size_t i = 0; i < entities.size(); ++i)
    for (const auto* t : repo.by_subject(entities[i]))
      if (t->predicate == same_as)
        if (const auto* other = as_iri(t->object))
          if (auto it = slot.find(*other); it != slot.end()) uf.unite(i, it->second);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entities.size(); ++i) groups[uf.find(i)].push_back(i);

  std::vector<ResultCluster> clusters;
  for (const auto& [root, idx] : groups) {
    ResultCluster c;
    std::set<Iri> types;
    for (auto i : idx) {
      const auto& iri = entities[i];
      auto quality = matched.at(iri);
      c.members.push_back(iri);
      if (c.representative.empty() || quality > c.quality) {
        c.representative = iri;
        c.quality = quality;
      }
      for (const auto& t : repo.entity(iri).types) types.insert(t);
    }
    c.types.assign(types.begin(), types.end());
    c.display_label = display_label(repo, c.representative);
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(), [](const ResultCluster& a, const ResultCluster& b) {
    if (a.quality != b.quality) return a.quality > b.quality;
    return a.representative < b.representative;
  });
  if (clusters.size() > limit) clusters.resize(limit);
  return clusters;
}

inline std::vector<ResultCluster> search(const Repository& repo, std::string_view raw, std::size_t limit) {
  return search(repo, parse_query(raw), limit);
}

// Number of clusters carrying each type.
inline std::map<Iri, std::size_t> facet_counts(std::span<const ResultCluster> clusters) {
  std::map<Iri, std::size_t> out;
  for (const auto& c : clusters)
    for (const auto& t : c.types) ++out[t];
  return out;
}

// Distinct label values starting with prefix (case-insensitive), sorted.
inline std::vector<std::string> autocomplete(const Repository& repo, std::string_view prefix, std::size_t limit) {
  if (prefix.empty()) throw Error(ErrorCode::EmptyQuery, "autocomplete prefix is empty");
  std::set<std::string> values;
  const auto& labels = repo.label_index();
  for (auto id : labels.with_prefix(prefix)) values.insert(labels.doc(id).text);
  std::vector<std::string> out;
  for (auto& v : values) {
    if (out.size() >= limit) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace lode
