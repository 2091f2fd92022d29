#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lode/error.hpp"

namespace lode {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDbo = "http://dbpedia.org/ontology/";
inline constexpr std::string_view kDbp = "http://dbpedia.org/property/";
inline constexpr std::string_view kDbr = "http://dbpedia.org/resource/";

inline const std::string kRdfType = std::string(kRdf) + "type";
inline const std::string kRdfsLabel = std::string(kRdfs) + "label";
inline const std::string kOwlSameAs = std::string(kOwl) + "sameAs";
inline const std::string kDboAbstract = std::string(kDbo) + "abstract";
inline const std::string kDboRedirects = std::string(kDbo) + "wikiPageRedirects";
inline const std::string kDboDisambiguates = std::string(kDbo) + "wikiPageDisambiguates";
}  // namespace vocab

namespace detail {

inline bool is_scheme_char(char c, bool first) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  if (first) return false;
  return (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// An absolute IRI: "scheme:rest" with no whitespace or delimiter characters.
// Compact forms are expanded through PrefixTable before an Iri is built.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (!is_valid(value_)) throw Error(ErrorCode::InvalidIri, "'" + value_ + "'");
  }

  static bool is_valid(std::string_view v) {
    auto colon = v.find(':');
    if (v.empty() || colon == std::string_view::npos || colon == 0) return false;
    for (std::size_t i = 0; i < colon; ++i)
      if (!detail::is_scheme_char(v[i], i == 0)) return false;
    if (colon + 1 == v.size()) return false;
    for (unsigned char c : v)
      if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '\\' ||
          c == '|' || c == '^' || c == '`')
        return false;
    return true;
  }

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  // Text after the last '#' or '/', used as a fallback display name.
  std::string_view local_name() const {
    std::string_view v = value_;
    auto pos = v.find_last_of("#/");
    if (pos == std::string_view::npos) pos = v.find(':');
    return pos == std::string_view::npos || pos + 1 >= v.size() ? v : v.substr(pos + 1);
  }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

struct Literal {
  std::string lexical;
  std::optional<std::string> language;
  std::optional<Iri> datatype;

  Literal() = default;
  explicit Literal(std::string lex, std::optional<std::string> lang = std::nullopt,
                   std::optional<Iri> dt = std::nullopt)
      : lexical(std::move(lex)), language(std::move(lang)), datatype(std::move(dt)) {
    if (language && datatype)
      throw Error(ErrorCode::InvalidOperation, "literal cannot carry both language tag and datatype");
  }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Term = std::variant<Iri, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline const Iri* as_iri(const Term& t) { return std::get_if<Iri>(&t); }
inline const Literal* as_literal(const Term& t) { return std::get_if<Literal>(&t); }

struct Origin {
  enum class Kind { Local, Enhanced, Target };

  Kind kind = Kind::Local;
  std::optional<Iri> source;  // set iff kind == Enhanced

  static Origin local() { return {Kind::Local, std::nullopt}; }
  static Origin target() { return {Kind::Target, std::nullopt}; }
  static Origin enhanced(Iri source) { return {Kind::Enhanced, std::move(source)}; }

  friend bool operator==(const Origin&, const Origin&) = default;
};

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;
  Origin origin;

  // Equality including provenance; statement identity ignores origin.
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline bool same_statement(const Triple& a, const Triple& b) {
  return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
}

namespace detail {

inline void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

}  // namespace detail

inline std::string to_ntriples(const Term& t) {
  std::string out;
  if (auto* iri = as_iri(t)) {
    out.reserve(iri->str().size() + 2);
    out += '<';
    out += iri->str();
    out += '>';
    return out;
  }
  const auto& lit = std::get<Literal>(t);
  out += '"';
  detail::append_escaped(out, lit.lexical);
  out += '"';
  if (lit.language) {
    out += '@';
    out += *lit.language;
  } else if (lit.datatype) {
    out += "^^<";
    out += lit.datatype->str();
    out += '>';
  }
  return out;
}

// Canonical single-line N-Triples form of the statement (origin not included).
inline std::string to_ntriples(const Triple& t) {
  std::string out;
  out += '<';
  out += t.subject.str();
  out += "> <";
  out += t.predicate.str();
  out += "> ";
  out += to_ntriples(t.object);
  out += " .";
  return out;
}

// Stable 64-bit statement hash; also the key of the provenance sidecar file.
inline std::uint64_t statement_hash(const Triple& t) { return detail::fnv1a(to_ntriples(t)); }

struct StatementHash {
  std::size_t operator()(const Triple& t) const { return static_cast<std::size_t>(statement_hash(t)); }
};

struct StatementEq {
  bool operator()(const Triple& a, const Triple& b) const { return same_statement(a, b); }
};

// Prefix -> namespace table for compact IRIs such as "rdfs:label".
class PrefixTable {
 public:
  static PrefixTable defaults() {
    PrefixTable t;
    t.add("rdf", std::string(vocab::kRdf));
    t.add("rdfs", std::string(vocab::kRdfs));
    t.add("owl", std::string(vocab::kOwl));
    t.add("skos", std::string(vocab::kSkos));
    t.add("foaf", std::string(vocab::kFoaf));
    t.add("dcterms", std::string(vocab::kDcterms));
    t.add("xsd", std::string(vocab::kXsd));
    t.add("dbo", std::string(vocab::kDbo));
    t.add("dbp", std::string(vocab::kDbp));
    t.add("dbpedia", std::string(vocab::kDbr));
    return t;
  }

  // Reads "prefix<TAB>namespace" lines; '#' starts a comment line.
  static PrefixTable load(std::istream& in, PrefixTable base = defaults()) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto view = detail::trim(line);
      if (view.empty() || view.front() == '#') continue;
      auto tab = view.find('\t');
      if (tab == std::string_view::npos)
        throw ParseError(ErrorCode::MalformedLine, lineno, "expected prefix<TAB>namespace");
      auto prefix = detail::trim(view.substr(0, tab));
      auto ns = detail::trim(view.substr(tab + 1));
      if (prefix.empty() || !Iri::is_valid(ns))
        throw ParseError(ErrorCode::MalformedLine, lineno, "invalid prefix entry");
      base.add(std::string(prefix), std::string(ns));
    }
    return base;
  }

  void add(std::string prefix, std::string ns) { map_[std::move(prefix)] = std::move(ns); }

  const std::map<std::string, std::string>& entries() const noexcept { return map_; }

  // Expands "prefix:local" when the prefix is known; otherwise the text must
  // already be an absolute IRI.
  Iri expand(std::string_view text) const {
    auto s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>') return Iri(std::string(s.substr(1, s.size() - 2)));
    auto colon = s.find(':');
    if (colon != std::string_view::npos && s.substr(colon).rfind("://", 0) != 0) {
      auto it = map_.find(std::string(s.substr(0, colon)));
      if (it != map_.end()) return Iri(it->second + std::string(s.substr(colon + 1)));
    }
    return Iri(std::string(s));
  }

  // Shortest compact form using the longest matching namespace; the full IRI
  // when no namespace applies.
  std::string compact(const Iri& iri) const {
    const std::string* best_prefix = nullptr;
    std::size_t best_len = 0;
    for (const auto& [prefix, ns] : map_) {
      if (ns.size() > best_len && ns.size() < iri.str().size() && iri.str().compare(0, ns.size(), ns) == 0) {
        best_prefix = &prefix;
        best_len = ns.size();
      }
    }
    if (!best_prefix) return iri.str();
    return *best_prefix + ":" + iri.str().substr(best_len);
  }

 private:
  std::map<std::string, std::string> map_;
};

}  // namespace lode

template <>
struct std::hash<lode::Iri> {
  std::size_t operator()(const lode::Iri& iri) const noexcept { return std::hash<std::string>{}(iri.str()); }
};
