#pragma once

// Brute-force WikiStat reference and random anchor tables.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lode/wikistat.hpp"

namespace oracle {

using namespace lode;

inline const std::string kDbr(vocab::kDbr);

// The seven Plato/Platon anchor rows.
inline std::vector<LinkRecord> plato_anchor_records() {
  struct Row {
    const char* anchor;
    const char* target;
    int count;
  };
  const Row rows[] = {{"Plato", "Plato", 3560},         {"PLATO", "PLATO_(computer_system)", 47},
                      {"Plato", "Plato,_Missouri", 20}, {"Plato", "Plato_(crater)", 15},
                      {"Plato", "Beer_measurement", 13}, {"Plato", "Plato,_Magdalena", 9},
                      {"Platon", "Plato", 6}};
  std::vector<LinkRecord> out;
  int page = 0;
  for (const auto& r : rows)
    for (int i = 0; i < r.count; ++i)
      out.push_back({"http://en.wikipedia.org/page/" + std::to_string(page++), kDbr + r.target, r.anchor});
  return out;
}

// Brute force straight off the raw (target, anchor, count) list.
struct BruteForce {
  std::vector<AnchorCount> rows;

  std::uint64_t score(const std::set<std::string>& anchors, const Iri& u) const {
    std::uint64_t s = 0;
    for (const auto& r : rows)
      if (r.target == u && anchors.count(r.anchor)) s += r.count;
    return s;
  }
  std::uint64_t denominator(const std::set<std::string>& anchors) const {
    std::uint64_t s = 0;
    for (const auto& r : rows)
      if (anchors.count(r.anchor)) s += r.count;
    return s;
  }
  std::vector<std::pair<Iri, std::uint64_t>> ranking(const std::set<std::string>& anchors) const {
    std::set<Iri> targets;
    for (const auto& r : rows) targets.insert(r.target);
    std::vector<std::pair<Iri, std::uint64_t>> out;
    for (const auto& t : targets)
      if (auto s = score(anchors, t); s > 0) out.emplace_back(t, s);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
  }
};

inline std::vector<AnchorCount> random_rows(std::mt19937_64& rng, std::size_t n, std::size_t anchors, std::size_t targets) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> cells;
  for (std::size_t i = 0; i < n; ++i) {
    std::string a = "a" + std::to_string(rng() % anchors);
    if (rng() % 5 == 0) a[0] = 'A';
    cells[{a, "http://example.org/u" + std::to_string(rng() % targets)}] = 1 + rng() % (rng() % 4 == 0 ? 5000 : 20);
  }
  std::vector<AnchorCount> rows;
  for (auto& [key, count] : cells) rows.push_back({Iri(key.second), key.first, count});
  return rows;
}

inline std::uint64_t row_sum(const std::vector<AnchorCount>& rows) {
  std::uint64_t s = 0;
  for (const auto& r : rows) s += r.count;
  return s;
}

}  // namespace oracle
