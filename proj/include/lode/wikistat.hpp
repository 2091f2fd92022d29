#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

// Trims and collapses internal whitespace runs to one space. Case is kept:
// anchors match exactly.
inline std::string normalize_anchor(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : detail::trim(text)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = true;
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

// #(u, a): number of links with anchor text a pointing at u.
struct AnchorCount {
  Iri target;
  std::string anchor;
  std::uint64_t count = 0;

  friend bool operator==(const AnchorCount&, const AnchorCount&) = default;
};

// One hyperlink of a link dump: (source page, target page, anchor text).
struct LinkRecord {
  std::string source;
  std::string target;
  std::string anchor;
};

// Anchor-keyed count table. Rows are kept sorted by anchor, then by
// descending count, then by target, so an anchor lookup is a binary search.
class AnchorTable {
 public:
  AnchorTable() = default;

  AnchorTable(std::vector<AnchorCount> rows, std::uint64_t total_links) : rows_(std::move(rows)), total_(total_links) {
    std::sort(rows_.begin(), rows_.end(), row_order);
    std::set<std::pair<std::string_view, std::string_view>> seen;
    std::map<std::string_view, std::uint64_t> per_anchor;
    for (const auto& r : rows_) {
      if (r.count == 0) throw Error(ErrorCode::MalformedRecord, "zero count for anchor '" + r.anchor + "'");
      if (r.anchor.empty()) throw Error(ErrorCode::MalformedRecord, "empty anchor");
      if (!seen.emplace(r.anchor, r.target.str()).second)
        throw Error(ErrorCode::MalformedRecord, "duplicate row (" + r.anchor + ", " + r.target.str() + ")");
      per_anchor[r.anchor] += r.count;
    }
    for (const auto& [anchor, sum] : per_anchor)
      if (sum > total_)
        throw Error(ErrorCode::MalformedRecord, "total links smaller than counts of anchor '" + std::string(anchor) + "'");
  }

  const std::vector<AnchorCount>& rows() const noexcept { return rows_; }
  std::uint64_t total_links() const noexcept { return total_; }
  bool empty() const noexcept { return rows_.empty(); }

  // Rows whose anchor equals the normalized text.
  std::span<const AnchorCount> lookup(std::string_view anchor) const {
    auto key = normalize_anchor(anchor);
    auto lo = std::lower_bound(rows_.begin(), rows_.end(), key,
                               [](const AnchorCount& r, const std::string& k) { return r.anchor < k; });
    auto hi = lo;
    while (hi != rows_.end() && hi->anchor == key) ++hi;
    return {lo, hi};
  }

  // #(a): all links carrying this anchor text.
  std::uint64_t anchor_total(std::string_view anchor) const {
    std::uint64_t sum = 0;
    for (const auto& r : lookup(anchor)) sum += r.count;
    return sum;
  }

  // Header "#total-links<TAB>N", then "anchor<TAB>targetURI<TAB>count" rows.
  void write(std::ostream& out) const {
    out << "#total-links\t" << total_ << '\n';
    for (const auto& r : rows_) out << r.anchor << '\t' << r.target.str() << '\t' << r.count << '\n';
  }

  static AnchorTable read(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::uint64_t> total;
    std::vector<AnchorCount> rows;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) continue;
      auto cols = split_tabs(line);
      if (!total) {
        if (cols.size() != 2 || cols[0] != "#total-links")
          throw ParseError(ErrorCode::MalformedRecord, lineno, "expected '#total-links<TAB>N' header");
        total = parse_count(cols[1], lineno, true);
        continue;
      }
      if (cols.size() != 3) throw ParseError(ErrorCode::MalformedRecord, lineno, "expected anchor<TAB>target<TAB>count");
      auto anchor = normalize_anchor(cols[0]);
      if (anchor.empty()) throw ParseError(ErrorCode::MalformedRecord, lineno, "empty anchor");
      if (!Iri::is_valid(cols[1])) throw ParseError(ErrorCode::MalformedRecord, lineno, "invalid target IRI");
      rows.push_back({Iri(std::string(cols[1])), std::move(anchor), parse_count(cols[2], lineno, false)});
    }
    if (!total) throw ParseError(ErrorCode::MalformedRecord, lineno + 1, "missing '#total-links' header");
    return AnchorTable(std::move(rows), *total);
  }

  static std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos; start = tab + 1)
      cols.push_back(line.substr(start, tab - start));
    cols.push_back(line.substr(start));
    return cols;
  }

 private:
  static bool row_order(const AnchorCount& a, const AnchorCount& b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    if (a.count != b.count) return a.count > b.count;
    return a.target < b.target;
  }

  static std::uint64_t parse_count(std::string_view text, std::size_t lineno, bool allow_zero) {
    std::uint64_t value = 0;
    auto t = detail::trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || (!allow_zero && value == 0))
      throw ParseError(ErrorCode::MalformedRecord, lineno, "invalid count '" + std::string(text) + "'");
    return value;
  }

  std::vector<AnchorCount> rows_;
  std::uint64_t total_ = 0;
};

// Reads "source<TAB>target<TAB>anchor" link records; '#' lines are comments.
inline std::vector<LinkRecord> read_link_dump(std::istream& in) {
  std::vector<LinkRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto cols = AnchorTable::split_tabs(line);
    if (cols.size() != 3) throw ParseError(ErrorCode::MalformedRecord, lineno, "expected source<TAB>target<TAB>anchor");
    LinkRecord rec{std::string(detail::trim(cols[0])), std::string(detail::trim(cols[1])), std::string(cols[2])};
    if (!Iri::is_valid(rec.source)) throw ParseError(ErrorCode::MalformedRecord, lineno, "invalid source IRI");
    if (!Iri::is_valid(rec.target)) throw ParseError(ErrorCode::MalformedRecord, lineno, "invalid target IRI");
    if (normalize_anchor(rec.anchor).empty()) throw ParseError(ErrorCode::MalformedRecord, lineno, "empty anchor text");
    records.push_back(std::move(rec));
  }
  return records;
}

// Aggregates link records into #(u, a) counts; N = number of records.
inline AnchorTable build_anchor_table(std::span<const LinkRecord> records) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    auto anchor = normalize_anchor(r.anchor);
    if (anchor.empty()) throw ParseError(ErrorCode::MalformedRecord, i + 1, "empty anchor text");
    if (!Iri::is_valid(r.source)) throw ParseError(ErrorCode::MalformedRecord, i + 1, "invalid source IRI");
    if (!Iri::is_valid(r.target)) throw ParseError(ErrorCode::MalformedRecord, i + 1, "invalid target IRI");
    ++counts[{std::move(anchor), r.target}];
  }
  std::vector<AnchorCount> rows;
  rows.reserve(counts.size());
  for (auto& [key, n] : counts) rows.push_back({Iri(key.second), key.first, n});
  return AnchorTable(std::move(rows), records.size());
}

namespace detail {

inline std::vector<std::string> anchor_set(std::span<const std::string> anchors) {
  std::set<std::string> unique;
  for (const auto& a : anchors) {
    auto n = normalize_anchor(a);
    if (!n.empty()) unique.insert(std::move(n));
  }
  if (unique.empty()) throw Error(ErrorCode::EmptyAnchorSet, "no anchors given");
  return {unique.begin(), unique.end()};
}

}  // namespace detail

// Sum over distinct anchors a_i of #(u, a_i).
inline std::uint64_t wikistat_score(const AnchorTable& table, std::span<const std::string> anchors, const Iri& u) {
  std::uint64_t sum = 0;
  for (const auto& a : detail::anchor_set(anchors))
    for (const auto& row : table.lookup(a))
      if (row.target == u) sum += row.count;
  return sum;
}

// P(u | a_1 or ... or a_n) = score(u) / sum_i #(a_i). N cancels.
inline double wikistat_probability(const AnchorTable& table, std::span<const std::string> anchors, const Iri& u) {
  std::uint64_t denominator = 0;
  for (const auto& a : detail::anchor_set(anchors)) denominator += table.anchor_total(a);
  if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "no anchor occurs in the table");
  return static_cast<double>(wikistat_score(table, anchors, u)) / static_cast<double>(denominator);
}

// Every u reachable from the anchors, ordered by summed count. Scores are the
// integer sums; ordering by probability is identical because the
// denominator is shared.
inline std::vector<LinkCandidate> rank_wikistat_terms(std::span<const std::string> anchors, const AnchorTable& table,
                                                      std::size_t k) {
  std::map<Iri, std::uint64_t> sums;
  for (const auto& a : detail::anchor_set(anchors))
    for (const auto& row : table.lookup(a)) sums[row.target] += row.count;

  std::vector<LinkCandidate> ranked;
  ranked.reserve(sums.size());
  for (const auto& [target, sum] : sums) {
    LinkCandidate c;
    c.target = target;
    c.score = static_cast<double>(sum);
    std::string title(target.local_name());
    std::replace(title.begin(), title.end(), '_', ' ');
    c.display_label = std::move(title);
    ranked.push_back(std::move(c));
  }
  finalize_ranking(ranked, k);
  return ranked;
}

inline std::vector<LinkCandidate> rank_wikistat(const Entity& local, std::span<const Iri> local_label_properties,
                                                const AnchorTable& table, std::size_t k) {
  auto terms = extract_search_terms(local, local_label_properties);
  return rank_wikistat_terms(terms, table, k);
}

}  // namespace lode
