#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

struct GoldStandardEntry {
  Iri local;
  Iri target;
};

// "localIRI<TAB>targetIRI" lines, '#' comments. Local IRIs must be unique.
inline std::vector<GoldStandardEntry> read_gold_standard(std::istream& in,
                                                         const PrefixTable& prefixes = PrefixTable::defaults()) {
  std::vector<GoldStandardEntry> out;
  std::set<Iri> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto tab = view.find('\t');
    if (tab == std::string_view::npos) throw ParseError(ErrorCode::MalformedLine, lineno, "expected localIRI<TAB>targetIRI");
    GoldStandardEntry e;
    try {
      e = {prefixes.expand(view.substr(0, tab)), prefixes.expand(view.substr(tab + 1))};
    } catch (const Error& err) {
      throw ParseError(ErrorCode::MalformedLine, lineno, err.what());
    }
    if (!seen.insert(e.local).second)
      throw ParseError(ErrorCode::DuplicateGoldEntry, lineno, "duplicate local IRI " + e.local.str());
    out.push_back(std::move(e));
  }
  return out;
}

// Mean of 1/rank with absent ranks contributing 0.
inline double mean_reciprocal_rank(std::span<const std::optional<std::size_t>> ranks) {
  if (ranks.empty()) throw Error(ErrorCode::EmptyInput, "no ranks");
  double sum = 0.0;
  for (const auto& r : ranks)
    if (r) {
      if (*r == 0) throw Error(ErrorCode::InvalidOperation, "ranks are 1-based");
      sum += 1.0 / static_cast<double>(*r);
    }
  return sum / static_cast<double>(ranks.size());
}

struct EvalEntryResult {
  Iri local;
  Iri target;
  std::optional<std::size_t> rank;  // 1-based position of target, if ranked
  double latency_seconds = 0.0;
  bool no_search_terms = false;
};

struct EvalReport {
  Algorithm algorithm = Algorithm::EndpointAL;
  std::size_t k = kDefaultCandidates;
  std::size_t entries = 0;
  double mrr = 0.0;
  double mean_latency_seconds = 0.0;
  double latency_ci_low = 0.0;
  double latency_ci_high = 0.0;
  std::map<std::size_t, std::size_t> position_histogram;  // rank -> count
  std::size_t missed = 0;                                 // includes no_search_terms
  std::size_t no_search_terms = 0;
  std::vector<EvalEntryResult> results;
};

using Ranker = std::function<std::vector<LinkCandidate>(const Entity&, std::size_t k)>;

// Ranks every gold entity and aggregates MRR, latency (mean with a normal
// 95% interval) and the histogram of correct-candidate positions.
inline EvalReport run_benchmark(std::span<const GoldStandardEntry> gold, const Repository& local, const Ranker& rank,
                                Algorithm algorithm, std::size_t k = kDefaultCandidates) {
  if (gold.empty()) throw Error(ErrorCode::EmptyInput, "empty gold standard");
  EvalReport report;
  report.algorithm = algorithm;
  report.k = k;
  report.entries = gold.size();

  std::vector<std::optional<std::size_t>> ranks;
  std::vector<double> latencies;
  for (const auto& entry : gold) {
    Entity e = local.entity(entry.local);
    if (e.empty()) throw Error(ErrorCode::UnknownLocalEntity, entry.local.str());
    EvalEntryResult r{entry.local, entry.target, std::nullopt, 0.0, false};
    auto start = std::chrono::steady_clock::now();
    try {
      auto ranking = rank(e, k);
      for (const auto& c : ranking)
        if (c.target == entry.target) {
          r.rank = static_cast<std::size_t>(c.rank);
          break;
        }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoSearchTerms) throw;
      r.no_search_terms = true;
    }
    r.latency_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (r.rank)
      ++report.position_histogram[*r.rank];
    else
      ++report.missed;
    if (r.no_search_terms) ++report.no_search_terms;
    ranks.push_back(r.rank);
    latencies.push_back(r.latency_seconds);
    report.results.push_back(std::move(r));
  }

  report.mrr = mean_reciprocal_rank(ranks);
  const double n = static_cast<double>(latencies.size());
  double mean = 0.0;
  for (double l : latencies) mean += l;
  mean /= n;
  double var = 0.0;
  if (latencies.size() > 1) {
    for (double l : latencies) var += (l - mean) * (l - mean);
    var /= (n - 1.0);
  }
  const double half = 1.96 * std::sqrt(var / n);
  report.mean_latency_seconds = mean;
  report.latency_ci_low = std::max(0.0, mean - half);
  report.latency_ci_high = mean + half;
  return report;
}

// Plain-text comparison table, one row per configuration.
inline std::string format_summary(std::span<const EvalReport> reports) {
  std::string out = "algorithm     entries  k   MRR     rank1   missed  mean-latency-ms (95% CI)\n";
  char buf[256];
  for (const auto& r : reports) {
    auto first = r.position_histogram.count(1) ? r.position_histogram.at(1) : 0;
    std::snprintf(buf, sizeof buf, "%-13s %7zu %3zu  %.4f  %6zu  %6zu  %.3f (%.3f..%.3f)\n",
                  std::string(to_string(r.algorithm)).c_str(), r.entries, r.k, r.mrr, first, r.missed,
                  r.mean_latency_seconds * 1e3, r.latency_ci_low * 1e3, r.latency_ci_high * 1e3);
    out += buf;
  }
  out += "latencies are in-process local-adapter timings (no network round trip)\n";
  return out;
}

}  // namespace lode
