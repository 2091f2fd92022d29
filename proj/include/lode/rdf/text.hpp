#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lode/rdf/term.hpp"

namespace lode {

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = ascii_lower(c);
  return out;
}

// Bytes >= 0x80 (UTF-8 sequences) count as word characters.
inline bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

// Lowercased maximal runs of word bytes.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      current += ascii_lower(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// True when needle occurs in haystack as a contiguous run. With last_is_prefix
// the final needle token only has to prefix the corresponding haystack token.
inline bool contains_token_run(std::span<const std::string> haystack, std::span<const std::string> needle,
                               bool last_is_prefix = false) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size() && ok; ++j) {
      const auto& h = haystack[start + j];
      const auto& n = needle[j];
      if (last_is_prefix && j + 1 == needle.size())
        ok = h.compare(0, n.size(), n) == 0;
      else
        ok = h == n;
    }
    if (ok) return true;
  }
  return false;
}

// Inverted token index over literal values. Documents are keyed by the owning
// repository's triple id, so ids arrive in increasing order.
class TextIndex {
 public:
  using DocId = std::uint32_t;

  struct Doc {
    Iri subject;
    std::string text;
    std::vector<std::string> tokens;
  };

  void add(DocId id, const Iri& subject, std::string_view text) {
    Doc doc{subject, std::string(text), tokenize(text)};
    std::set<std::string_view> seen;
    for (const auto& tok : doc.tokens) {
      if (!seen.insert(tok).second) continue;
      auto& list = postings_[tok];
      list.insert(std::upper_bound(list.begin(), list.end(), id), id);
    }
    values_.emplace(lowercase(text), id);
    docs_.emplace(id, std::move(doc));
  }

  void remove(DocId id) {
    auto it = docs_.find(id);
    if (it == docs_.end()) return;
    std::set<std::string_view> seen;
    for (const auto& tok : it->second.tokens) {
      if (!seen.insert(tok).second) continue;
      auto pit = postings_.find(tok);
      if (pit == postings_.end()) continue;
      auto& list = pit->second;
      auto pos = std::lower_bound(list.begin(), list.end(), id);
      if (pos != list.end() && *pos == id) list.erase(pos);
      if (list.empty()) postings_.erase(pit);
    }
    values_.erase({lowercase(it->second.text), id});
    docs_.erase(it);
  }

  void clear() {
    docs_.clear();
    postings_.clear();
    values_.clear();
  }

  std::size_t size() const noexcept { return docs_.size(); }
  const std::unordered_map<DocId, Doc>& docs() const noexcept { return docs_; }

  // Ids of documents containing the query tokens contiguously, ascending.
  std::vector<DocId> match(std::span<const std::string> query, bool last_is_prefix = false) const {
    std::vector<DocId> out;
    if (query.empty()) return out;

    auto verify = [&](DocId id) {
      const auto& doc = docs_.at(id);
      return contains_token_run(doc.tokens, query, last_is_prefix);
    };

    const std::size_t full = last_is_prefix ? query.size() - 1 : query.size();
    if (full > 0) {
      // Drive the scan from the rarest fully specified token.
      const std::vector<DocId>* best = nullptr;
      for (std::size_t i = 0; i < full; ++i) {
        auto it = postings_.find(query[i]);
        if (it == postings_.end()) return out;
        if (!best || it->second.size() < best->size()) best = &it->second;
      }
      for (DocId id : *best)
        if (verify(id)) out.push_back(id);
      return out;
    }

    const std::string& prefix = query.back();
    std::set<DocId> ids;
    for (auto it = postings_.lower_bound(prefix); it != postings_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
         ++it)
      ids.insert(it->second.begin(), it->second.end());
    return {ids.begin(), ids.end()};
  }

  // Document ids whose lowercased text starts with the lowercased prefix,
  // ordered by lowercased text.
  std::vector<DocId> with_prefix(std::string_view prefix) const {
    std::vector<DocId> out;
    auto key = lowercase(prefix);
    for (auto it = values_.lower_bound({key, 0}); it != values_.end() && it->first.compare(0, key.size(), key) == 0; ++it)
      out.push_back(it->second);
    return out;
  }

  const Doc& doc(DocId id) const { return docs_.at(id); }

 private:
  std::unordered_map<DocId, Doc> docs_;
  std::map<std::string, std::vector<DocId>, std::less<>> postings_;
  std::set<std::pair<std::string, DocId>> values_;
};

}  // namespace lode
