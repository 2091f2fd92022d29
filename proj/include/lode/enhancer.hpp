#pragma once

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lode/context.hpp"
#include "lode/linking.hpp"
#include "lode/rdf/repository.hpp"

namespace lode {

enum class EnhancementKind { AddValue, AddToNewProperty, AddType, Delete };

inline std::string_view to_string(EnhancementKind k) {
  switch (k) {
    case EnhancementKind::AddValue: return "ADD_VALUE";
    case EnhancementKind::AddToNewProperty: return "ADD_TO_NEW_PROPERTY";
    case EnhancementKind::AddType: return "ADD_TYPE";
    case EnhancementKind::Delete: return "DELETE";
  }
  return "?";
}

inline EnhancementKind parse_enhancement_kind(std::string_view text) {
  for (auto k : {EnhancementKind::AddValue, EnhancementKind::AddToNewProperty, EnhancementKind::AddType,
                 EnhancementKind::Delete})
    if (text == to_string(k)) return k;
  throw Error(ErrorCode::InvalidOperation, "unknown enhancement kind '" + std::string(text) + "'");
}

struct EnhancementOp {
  EnhancementKind kind = EnhancementKind::AddValue;
  Iri subject;
  Iri predicate;
  Term value;
  std::optional<Iri> source;  // target entity the fact is copied from; ADD_* only
};

struct EnhancementOutcome {
  Triple triple;
  bool changed = false;
};

// Applies op to the local repository. Copied IRI values are kept verbatim so
// the fact stays traceable to the target repository. When target is given,
// the provenance IRI must be one of its entities.
inline EnhancementOutcome apply_enhancement_in_place(Repository& local, const EnhancementOp& op,
                                                     const Repository* target = nullptr) {
  if (!local.has_subject(op.subject)) throw Error(ErrorCode::UnknownSubject, op.subject.str());

  if (op.kind == EnhancementKind::Delete) {
    Triple probe{op.subject, op.predicate, op.value, Origin::local()};
    const Triple* existing = local.find(probe);
    if (!existing) throw Error(ErrorCode::TripleNotFound, to_ntriples(probe));
    if (existing->origin.kind == Origin::Kind::Target)
      throw Error(ErrorCode::InvalidOperation, "target-repository triples are read-only");
    Triple removed = *existing;
    local.remove(removed);
    return {std::move(removed), true};
  }

  if (!op.source) throw Error(ErrorCode::InvalidOperation, std::string(to_string(op.kind)) + " requires a source entity");
  if (target && !target->has_subject(*op.source)) throw Error(ErrorCode::UnknownSourceEntity, op.source->str());

  Iri predicate = op.predicate;
  if (op.kind == EnhancementKind::AddType) {
    if (!predicate.empty() && predicate.str() != vocab::kRdfType)
      throw Error(ErrorCode::InvalidOperation, "ADD_TYPE uses rdf:type");
    if (!is_iri(op.value)) throw Error(ErrorCode::InvalidOperation, "ADD_TYPE value must be an IRI");
    predicate = Iri(vocab::kRdfType);
  }
  if (predicate.empty()) throw Error(ErrorCode::InvalidOperation, "missing predicate");

  if (op.kind == EnhancementKind::AddToNewProperty) {
    for (const auto* t : local.by_subject(op.subject))
      if (t->predicate == predicate)
        throw Error(ErrorCode::PropertyAlreadyExists, predicate.str() + " already used on " + op.subject.str());
  }

  Triple triple{op.subject, std::move(predicate), op.value, Origin::enhanced(*op.source)};
  bool changed = local.add(triple);
  return {std::move(triple), changed};
}

// Returns the new snapshot; the input is untouched.
inline Repository apply_enhancement(const Repository& local, const EnhancementOp& op,
                                    const Repository* target = nullptr) {
  Repository next = local;
  apply_enhancement_in_place(next, op, target);
  return next;
}

// Provenance sidecar: one "hash<TAB>sourceIRI" line per enhanced triple, the
// hash being the 16-hex-digit statement_hash of the triple.
inline void write_provenance(std::ostream& out, const Repository& repo) {
  repo.for_each([&](const Triple& t) {
    if (t.origin.kind != Origin::Kind::Enhanced || !t.origin.source) return;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016" PRIx64, statement_hash(t));
    out << hex << '\t' << t.origin.source->str() << '\n';
  });
}

inline std::map<std::uint64_t, Iri> read_provenance(std::istream& in) {
  std::map<std::uint64_t, Iri> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto tab = view.find('\t');
    if (tab != 16) throw ParseError(ErrorCode::MalformedLine, lineno, "expected 16 hex digits<TAB>sourceIRI");
    std::uint64_t hash = 0;
    for (char c : view.substr(0, 16)) {
      int d = (c >= '0' && c <= '9') ? c - '0' : (c >= 'a' && c <= 'f') ? c - 'a' + 10 : -1;
      if (d < 0) throw ParseError(ErrorCode::MalformedLine, lineno, "invalid hash digit");
      hash = (hash << 4) | static_cast<std::uint64_t>(d);
    }
    auto source = detail::trim(view.substr(tab + 1));
    if (!Iri::is_valid(source)) throw ParseError(ErrorCode::MalformedLine, lineno, "invalid source IRI");
    out.emplace(hash, Iri(std::string(source)));
  }
  return out;
}

// Marks triples listed in the sidecar as ENHANCED; returns how many matched.
inline std::size_t apply_provenance(Repository& repo, const std::map<std::uint64_t, Iri>& provenance) {
  if (provenance.empty()) return 0;
  std::vector<std::pair<Triple, Iri>> hits;
  repo.for_each([&](const Triple& t) {
    auto it = provenance.find(statement_hash(t));
    if (it != provenance.end()) hits.emplace_back(t, it->second);
  });
  for (auto& [t, source] : hits) repo.set_origin(t, Origin::enhanced(std::move(source)));
  return hits.size();
}

// Link types that assert identity and therefore make the target's facts
// candidates for the local entity.
inline bool is_equivalence_link(const Iri& predicate) {
  const std::string owl(vocab::kOwl);
  return predicate.str() == owl + "sameAs" || predicate.str() == owl + "equivalentClass" ||
         predicate.str() == owl + "equivalentProperty";
}

struct EnhancementGroup {
  Iri source;     // linked target entity
  Iri predicate;  // rdf:type for the class group
  std::vector<Term> values;
};

// Frequency-selected excerpt of each linked target entity: its top-k types
// (as one rdf:type group) followed by its top-k property groups.
inline std::vector<EnhancementGroup> enhancement_candidates(const Iri& local_iri, std::span<const LinkAssertion> links,
                                                            const Repository& target,
                                                            const PropertyFrequencyIndex& index, std::size_t k) {
  std::vector<Iri> linked;
  for (const auto& l : links)
    if (l.source == local_iri && is_equivalence_link(l.link_type.iri) &&
        std::find(linked.begin(), linked.end(), l.target) == linked.end())
      linked.push_back(l.target);
  if (linked.empty()) throw Error(ErrorCode::NoLinkEstablished, local_iri.str());

  std::vector<EnhancementGroup> out;
  if (k == 0) return out;
  for (const auto& source : linked) {
    Entity e = target.entity(source);
    auto types = select_type_context(e, index, k);
    if (!types.empty()) {
      EnhancementGroup g{source, Iri(vocab::kRdfType), {}};
      for (auto& t : types) g.values.emplace_back(std::move(t));
      out.push_back(std::move(g));
    }
    for (auto& entry : select_context(e, index, k))
      out.push_back({source, std::move(entry.predicate), std::move(entry.values)});
  }
  return out;
}

}  // namespace lode
