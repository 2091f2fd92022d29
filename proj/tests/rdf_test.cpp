#include <catch_amalgamated.hpp>

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "lode/rdf/ntriples.hpp"
#include "lode/rdf/repository.hpp"
#include "support/oracles.hpp"

using namespace lode;

namespace {

const std::string kLabel = vocab::kRdfsLabel;
const std::string kName = std::string(vocab::kFoaf) + "name";

Triple lit(const std::string& s, const std::string& p, const std::string& value) {
  return Triple{Iri(s), Iri(p), Literal(value), Origin::local()};
}

Triple link(const std::string& s, const std::string& p, const std::string& o) {
  return Triple{Iri(s), Iri(p), Iri(o), Origin::local()};
}

}  // namespace

TEST_CASE("parse a single statement", "[rdf][ntriples]") {
  auto repo = parse_ntriples("<urn:a> <urn:p> <urn:b> .\n");
  REQUIRE(repo.size() == 1);
  auto t = repo.triples().front();
  CHECK(t.subject.str() == "urn:a");
  CHECK(std::get<Iri>(t.object).str() == "urn:b");
  CHECK(t.origin.kind == Origin::Kind::Local);
}

TEST_CASE("language-tagged label literal", "[rdf][ntriples]") {
  auto repo = parse_ntriples(
      "<urn:t4132> <http://www.w3.org/2000/01/rdf-schema#label> \"Ludwig Wittgenstein\"@en .", Origin::target());
  REQUIRE(repo.size() == 1);
  auto t = repo.triples().front();
  const auto& l = std::get<Literal>(t.object);
  CHECK(l.lexical == "Ludwig Wittgenstein");
  CHECK(l.language == std::optional<std::string>("en"));
  CHECK_FALSE(l.datatype);
  CHECK(t.origin.kind == Origin::Kind::Target);
}

TEST_CASE("empty input and comments", "[rdf][ntriples]") {
  CHECK(parse_ntriples("").size() == 0);
  CHECK(parse_ntriples("# only a comment\n\n   \n").size() == 0);
}

TEST_CASE("typed literal, escapes and trailing comment", "[rdf][ntriples]") {
  auto repo = parse_ntriples(
      "<urn:a> <urn:p> \"1889\"^^<http://www.w3.org/2001/XMLSchema#gYear> . # born\n"
      "<urn:a> <urn:q> \"line\\nbreak \\\"q\\\" \\u00e9\" .\n");
  REQUIRE(repo.size() == 2);
  auto ts = repo.triples();
  CHECK(std::get<Literal>(ts[0].object).datatype->str() == "http://www.w3.org/2001/XMLSchema#gYear");
  CHECK(std::get<Literal>(ts[1].object).lexical == "line\nbreak \"q\" \xC3\xA9");
}

TEST_CASE("malformed lines name the offending line", "[rdf][ntriples]") {
  const char* cases[] = {
      "<urn:a> <urn:p> <urn:b>",              // missing dot
      "_:b1 <urn:p> <urn:b> .",               // blank node subject
      "<urn:a> <urn:p> _:b2 .",               // blank node object
      "<urn:a> <urn:p> \"open .",             // unterminated literal
      "<urn:a> <urn:p> \"x\"@ .",             // empty tag
      "<not an iri> <urn:p> <urn:b> .",       // whitespace in IRI
      "<urn:a> <urn:p> <urn:b> . trailing",   // junk
  };
  for (const char* bad : cases) {
    std::string text = "<urn:ok> <urn:p> \"fine\" .\n# comment\n" + std::string(bad) + "\n";
    try {
      parse_ntriples(text);
      FAIL("accepted: " << bad);
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::MalformedLine);
      CHECK(e.position() == 3);
    }
  }
}

TEST_CASE("duplicate statements are a silent no-op", "[rdf]") {
  Repository repo;
  CHECK(repo.add(lit("urn:a", kLabel, "x")));
  CHECK_FALSE(repo.add(lit("urn:a", kLabel, "x")));
  CHECK(repo.size() == 1);
  // Same lexical form with a language tag is a different statement.
  CHECK(repo.add(Triple{Iri("urn:a"), Iri(kLabel), Literal("x", "en"), Origin::local()}));
  CHECK(repo.size() == 2);
}

TEST_CASE("getEntity", "[rdf]") {
  Repository repo;
  repo.add(lit("urn:e", kLabel, "Plato"));
  repo.add(link("urn:e", vocab::kRdfType, "http://inpho.example/thinker"));
  repo.add(lit("urn:e", "urn:born", "-428"));
  repo.add(lit("urn:other", kLabel, "Aristotle"));

  auto e = get_entity(repo, Iri("urn:e"));
  CHECK(e.assertions.size() == 3);
  CHECK(e.types == std::set<Iri>{Iri("http://inpho.example/thinker")});
  for (const auto& t : e.assertions) CHECK(t.subject == e.iri);

  auto missing = get_entity(repo, Iri("urn:nobody"));
  CHECK(missing.assertions.empty());
  CHECK(missing.types.empty());
}

TEST_CASE("extractSearchTerms follows label property priority", "[rdf]") {
  Repository repo;
  repo.add(lit("urn:moore", kLabel, "George Moore"));
  repo.add(lit("urn:moore", kName, "  G.E. Moore "));
  repo.add(lit("urn:moore", kLabel, "George Moore"));  // duplicate statement
  repo.add(Triple{Iri("urn:moore"), Iri(kLabel), Literal("G.E. Moore", "en"), Origin::local()});
  repo.add(lit("urn:moore", kLabel, "   "));
  CHECK(extract_search_terms(repo, Iri("urn:moore")) == std::vector<std::string>{"G.E. Moore", "George Moore"});

  repo.add(lit("urn:plato", kLabel, "Plato"));
  CHECK(extract_search_terms(repo, Iri("urn:plato")) == std::vector<std::string>{"Plato"});

  repo.add(lit("urn:nolabel", "urn:p", "text"));
  try {
    extract_search_terms(repo, Iri("urn:nolabel"));
    FAIL("expected NoSearchTerms");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSearchTerms);
  }
}

TEST_CASE("label property list is user-extensible", "[rdf]") {
  Repository repo;
  repo.add(lit("urn:x", "urn:myLabel", "Custom Name"));
  CHECK(repo.text_search("custom", TextField::Label).empty());
  RepoConfig cfg;
  cfg.label_properties.emplace_back("urn:myLabel");
  repo.reconfigure(cfg);
  CHECK(repo.text_search("custom", TextField::Label) == std::vector<Iri>{Iri("urn:x")});
  CHECK(extract_search_terms(repo, Iri("urn:x")) == std::vector<std::string>{"Custom Name"});
}

TEST_CASE("textSearch token containment", "[rdf][text]") {
  Repository repo;
  repo.add(lit("urn:plato", kLabel, "Plato"));
  repo.add(lit("urn:lw", vocab::kDboAbstract, "In 1929 the philosopher Ludwig Wittgenstein was back in Cambridge."));
  repo.add(lit("urn:lw2", vocab::kDboAbstract, "Wittgenstein, Ludwig: a catalogue."));

  CHECK(repo.text_search("Plato", TextField::Label) == std::vector<Iri>{Iri("urn:plato")});
  CHECK(repo.text_search("  plato ", TextField::Label) == std::vector<Iri>{Iri("urn:plato")});
  CHECK(repo.text_search("Plato", TextField::Abstract).empty());
  CHECK(repo.text_search("Ludwig Wittgenstein", TextField::Abstract) == std::vector<Iri>{Iri("urn:lw")});
  // Token order matters: "Wittgenstein Ludwig" is not a contiguous run in urn:lw.
  CHECK(repo.text_search("Wittgenstein Ludwig", TextField::Abstract) == std::vector<Iri>{Iri("urn:lw2")});
  // Partial tokens never match.
  CHECK(repo.text_search("Wittgen", TextField::Abstract).empty());

  try {
    repo.text_search("   ", TextField::Label);
    FAIL("expected EmptyTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyTerm);
  }
}

TEST_CASE("text search agrees with the brute-force scan oracle", "[rdf][text][property]") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    RepoConfig cfg;
    auto triples = oracle::random_triples(rng, {800, 80, 6, 4, 20}, cfg.label_properties, cfg.abstract_property);
    Repository repo(cfg);
    for (const auto& t : triples) repo.add(t);
    std::set<Iri> label_preds(cfg.label_properties.begin(), cfg.label_properties.end());
    std::set<Iri> abstract_preds{cfg.abstract_property};
    for (int q = 0; q < 25; ++q) {
      auto term = oracle::random_phrase(rng, 20, 3);
      auto labels = repo.text_search(term, TextField::Label);
      auto abstracts = repo.text_search(term, TextField::Abstract);
      auto want_labels = oracle::text_scan(triples, label_preds, term);
      auto want_abstracts = oracle::text_scan(triples, abstract_preds, term);
      REQUIRE(std::set<Iri>(labels.begin(), labels.end()) == want_labels);
      REQUIRE(std::set<Iri>(abstracts.begin(), abstracts.end()) == want_abstracts);
    }
  }
}

TEST_CASE("index lookups equal linear scans", "[rdf][property]") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {0u, 10u, 500u, 3000u, 10000u}) {
    RepoConfig cfg;
    auto triples = oracle::random_triples(rng, {n, 1 + n / 8, 10, 6, 40}, cfg.label_properties, cfg.abstract_property);
    Repository repo(cfg);
    for (const auto& t : triples) repo.add(t);
    auto unique = oracle::dedupe(triples);
    REQUIRE(repo.size() == unique.size());

    auto scan = [&](auto pred) {
      std::vector<Triple> out;
      for (const auto& t : unique)
        if (pred(t)) out.push_back(t);
      return out;
    };
    auto deref = [](const std::vector<const Triple*>& ptrs) {
      std::vector<Triple> out;
      for (auto* p : ptrs) out.push_back(*p);
      return out;
    };

    for (std::size_t i = 0; i < 1 + n / 8; i += 3) {
      Iri s("http://example.org/e" + std::to_string(i));
      REQUIRE(deref(repo.by_subject(s)) == scan([&](const Triple& t) { return t.subject == s; }));
      REQUIRE(deref(repo.by_object(Term(s))) == scan([&](const Triple& t) { return t.object == Term(s); }));
    }
    for (const auto& p : repo.predicates())
      REQUIRE(deref(repo.by_predicate(p)) == scan([&](const Triple& t) { return t.predicate == p; }));
    for (int i = 0; i < 6; ++i) {
      Iri type("http://example.org/T" + std::to_string(i));
      std::set<Iri> want;
      for (const auto& t : unique)
        if (t.predicate.str() == vocab::kRdfType && t.object == Term(type)) want.insert(t.subject);
      auto got = repo.instances_of(type);
      REQUIRE(std::set<Iri>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("serialize then parse round-trips the statement set", "[rdf][property]") {
  std::mt19937_64 rng(3);
  RepoConfig cfg;
  auto triples = oracle::random_triples(rng, {2000, 200, 8, 5, 30}, cfg.label_properties, cfg.abstract_property);
  Repository repo(cfg);
  for (const auto& t : triples) repo.add(t);
  repo.add(Triple{Iri("urn:q"), Iri("urn:p"), Literal("tab\there \"quoted\" back\\slash\r\nnew"), Origin::local()});
  repo.add(Triple{Iri("urn:q"), Iri("urn:p"), Literal("7", std::nullopt, Iri(std::string(vocab::kXsd) + "int")),
                  Origin::local()});

  auto text = to_ntriples(repo);
  auto back = parse_ntriples(text, Origin::local(), cfg);
  CHECK(back.same_statements(repo));
  CHECK(back.fingerprint() == repo.fingerprint());
  CHECK(to_ntriples(back) == text);
}

TEST_CASE("add then remove restores the repository", "[rdf][property]") {
  std::mt19937_64 rng(11);
  RepoConfig cfg;
  auto triples = oracle::random_triples(rng, {600, 50, 6, 4, 20}, cfg.label_properties, cfg.abstract_property);
  Repository repo(cfg);
  for (const auto& t : triples) repo.add(t);
  const auto before = repo.fingerprint();
  const auto size = repo.size();

  auto extra = oracle::random_triples(rng, {300, 70, 6, 4, 20}, cfg.label_properties, cfg.abstract_property);
  std::vector<Triple> added;
  for (const auto& t : extra)
    if (repo.add(t)) added.push_back(t);
  for (const auto& t : added) REQUIRE(repo.remove(t));
  CHECK(repo.size() == size);
  CHECK(repo.fingerprint() == before);
  CHECK_FALSE(repo.remove(lit("urn:none", kLabel, "nothing")));

  // Text indexes follow removals too.
  std::set<Iri> label_preds(cfg.label_properties.begin(), cfg.label_properties.end());
  auto live = repo.triples();
  for (int q = 0; q < 20; ++q) {
    auto term = oracle::random_phrase(rng, 20, 2);
    auto got = repo.text_search(term, TextField::Label);
    REQUIRE(std::set<Iri>(got.begin(), got.end()) == oracle::text_scan(live, label_preds, term));
  }
}

TEST_CASE("removing most triples compacts without losing order", "[rdf]") {
  Repository repo;
  for (int i = 0; i < 200; ++i) repo.add(lit("urn:s" + std::to_string(i % 7), kLabel, "v" + std::to_string(i)));
  for (int i = 0; i < 200; i += 1)
    if (i % 10 != 0) repo.remove(lit("urn:s" + std::to_string(i % 7), kLabel, "v" + std::to_string(i)));
  auto ts = repo.triples();
  REQUIRE(ts.size() == 20);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(std::get<Literal>(ts[i].object).lexical == "v" + std::to_string(i * 10));
  CHECK(repo.text_search("v150", TextField::Label).size() == 1);
  CHECK(repo.text_search("v151", TextField::Label).empty());
}

TEST_CASE("prefix table expands and compacts", "[rdf]") {
  auto prefixes = PrefixTable::defaults();
  CHECK(prefixes.expand("rdfs:label").str() == kLabel);
  CHECK(prefixes.expand("<urn:x>").str() == "urn:x");
  CHECK(prefixes.expand("http://example.org/a").str() == "http://example.org/a");
  CHECK(prefixes.compact(Iri(kLabel)) == "rdfs:label");
  CHECK(prefixes.compact(Iri("http://example.org/a")) == "http://example.org/a");

  std::istringstream file("# prefixes\nthinker\thttp://inpho.cogs.indiana.edu/thinker/\n");
  auto loaded = PrefixTable::load(file);
  CHECK(loaded.expand("thinker:t4132").str() == "http://inpho.cogs.indiana.edu/thinker/t4132");
  CHECK(loaded.compact(Iri("http://inpho.cogs.indiana.edu/thinker/t4132")) == "thinker:t4132");

  std::istringstream bad("thinker http://no-tab/\n");
  CHECK_THROWS_AS(PrefixTable::load(bad), ParseError);
}

TEST_CASE("IRI validation", "[rdf]") {
  CHECK(Iri::is_valid("http://dbpedia.org/resource/Plato"));
  CHECK(Iri::is_valid("urn:a"));
  CHECK_FALSE(Iri::is_valid(""));
  CHECK_FALSE(Iri::is_valid("noscheme"));
  CHECK_FALSE(Iri::is_valid("http://a b"));
  CHECK_FALSE(Iri::is_valid(":x"));
  CHECK_THROWS_AS(Iri("bad iri"), Error);
  CHECK(Iri("http://dbpedia.org/resource/Plato").local_name() == "Plato");
  CHECK(Iri("http://www.w3.org/2002/07/owl#sameAs").local_name() == "sameAs");
}

TEST_CASE("literal cannot have both language and datatype", "[rdf]") {
  CHECK_THROWS_AS(Literal("x", "en", Iri("urn:dt")), Error);
}

TEST_CASE("store publishes whole snapshots to concurrent readers", "[rdf][concurrency]") {
  Store store;
  std::atomic<bool> done{false};
  std::atomic<int> torn{0};
  std::thread reader([&] {
    while (!done) {
      auto snap = store.snapshot();
      // Every update adds a pair; a reader must never see half of one.
      if (snap->size() % 2 != 0) ++torn;
    }
  });
  for (int i = 0; i < 300; ++i) {
    store.update([&](Repository& r) {
      r.add(lit("urn:a" + std::to_string(i), kLabel, "x"));
      r.add(lit("urn:b" + std::to_string(i), kLabel, "y"));
    });
  }
  done = true;
  reader.join();
  CHECK(torn == 0);
  CHECK(store.snapshot()->size() == 600);

  auto before = store.snapshot();
  CHECK_THROWS(store.update([&](Repository& r) {
    r.add(lit("urn:c", kLabel, "z"));
    throw Error(ErrorCode::InvalidOperation, "abort");
  }));
  CHECK(store.snapshot() == before);
}
