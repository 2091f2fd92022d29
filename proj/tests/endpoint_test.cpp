#include <catch_amalgamated.hpp>

#include <cstring>
#include <random>

#include "lode/endpoint.hpp"
#include "lode/rdf/ntriples.hpp"
#include "support/oracles.hpp"

using namespace lode;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t max_len, const char* alphabet = "abcd") {
  std::size_t n = rng() % (max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += alphabet[rng() % std::strlen(alphabet)];
  return s;
}

const std::string kDbr(vocab::kDbr);
const std::string kDbo(vocab::kDbo);

// Small DBpedia-like target with labels, abstracts, a redirect chain, a
// disambiguation page, and typed entities.
Repository toy_target() {
  std::string nt = R"(
<http://dbpedia.org/resource/Plato> <http://www.w3.org/2000/01/rdf-schema#label> "Plato"@en .
<http://dbpedia.org/resource/Plato> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/ontology/Philosopher> .
<http://dbpedia.org/resource/Plato> <http://dbpedia.org/ontology/abstract> "Plato was a philosopher in Classical Greece."@en .
<http://dbpedia.org/resource/Plato,_Missouri> <http://www.w3.org/2000/01/rdf-schema#label> "Plato, Missouri"@en .
<http://dbpedia.org/resource/Plato,_Missouri> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/ontology/Place> .
<http://dbpedia.org/resource/Ludwig_Wittgenstein> <http://www.w3.org/2000/01/rdf-schema#label> "Ludwig Wittgenstein"@en .
<http://dbpedia.org/resource/Ludwig_Wittgenstein> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/ontology/Philosopher> .
<http://dbpedia.org/resource/Ludwig_Wittgenstein> <http://dbpedia.org/ontology/abstract> "Ludwig Josef Johann Wittgenstein was an Austrian-British philosopher."@en .
<http://dbpedia.org/resource/Tractatus> <http://www.w3.org/2000/01/rdf-schema#label> "Tractatus Logico-Philosophicus"@en .
<http://dbpedia.org/resource/Tractatus> <http://dbpedia.org/ontology/abstract> "A book by the philosopher Ludwig Wittgenstein."@en .
<http://dbpedia.org/resource/Wittgensteinian_tradition> <http://www.w3.org/2000/01/rdf-schema#label> "Ludwig Wittgenstein school"@en .
<http://dbpedia.org/resource/Wittgensteinian_tradition> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://dbpedia.org/ontology/PhilosophicalTradition> .
<http://dbpedia.org/resource/Wittgenstein_L> <http://www.w3.org/2000/01/rdf-schema#label> "L. Wittgenstein"@en .
<http://dbpedia.org/resource/Wittgenstein_L> <http://dbpedia.org/ontology/wikiPageRedirects> <http://dbpedia.org/resource/Wittgenstein_redirect2> .
<http://dbpedia.org/resource/Wittgenstein_redirect2> <http://dbpedia.org/ontology/wikiPageRedirects> <http://dbpedia.org/resource/Ludwig_Wittgenstein> .
<http://dbpedia.org/resource/Moore> <http://www.w3.org/2000/01/rdf-schema#label> "Moore"@en .
<http://dbpedia.org/resource/Moore> <http://dbpedia.org/ontology/wikiPageDisambiguates> <http://dbpedia.org/resource/G._E._Moore> .
<http://dbpedia.org/resource/Moore> <http://dbpedia.org/ontology/wikiPageDisambiguates> <http://dbpedia.org/resource/Moore,_Oklahoma> .
<http://dbpedia.org/resource/G._E._Moore> <http://www.w3.org/2000/01/rdf-schema#label> "George Moore"@en .
<http://dbpedia.org/resource/G._E._Moore> <http://xmlns.com/foaf/0.1/name> "G. E. Moore"@en .
<http://dbpedia.org/resource/Moore,_Oklahoma> <http://www.w3.org/2000/01/rdf-schema#label> "Moore, Oklahoma"@en .
<http://dbpedia.org/resource/Cyc_A> <http://dbpedia.org/ontology/wikiPageRedirects> <http://dbpedia.org/resource/Cyc_B> .
<http://dbpedia.org/resource/Cyc_B> <http://dbpedia.org/ontology/wikiPageRedirects> <http://dbpedia.org/resource/Cyc_A> .
)";
  return parse_ntriples(nt, Origin::target());
}

Entity local_entity(const std::string& iri, std::vector<std::string> labels, std::vector<std::string> types = {}) {
  Repository r;
  for (auto& l : labels) r.add(Triple{Iri(iri), Iri(vocab::kRdfsLabel), Literal(l), Origin::local()});
  for (auto& t : types) r.add(Triple{Iri(iri), Iri(vocab::kRdfType), Iri(t), Origin::local()});
  return r.entity(Iri(iri));
}

}  // namespace

TEST_CASE("levenshtein distance examples", "[levenshtein]") {
  CHECK(levenshtein_distance("Ludwig", "Ludwik") == 1);
  CHECK(levenshtein_distance("x", "x") == 0);
  CHECK(levenshtein_distance("", "abc") == 3);
  CHECK(levenshtein_distance("abc", "") == 3);
  CHECK(levenshtein_distance("kitten", "sitting") == 3);
  // Code points, not bytes.
  CHECK(levenshtein_distance("G\xC3\xB6" "del", "Godel") == 1);
}

TEST_CASE("levenshtein similarity examples", "[levenshtein]") {
  CHECK(levenshtein_similarity("Ludwig", "Ludwik") == Catch::Approx(5.0 / 6.0).margin(1e-12));
  CHECK(levenshtein_similarity("Plato", "Plato") == 1.0);
  CHECK(levenshtein_similarity("a", "b") == 0.0);
  CHECK(levenshtein_similarity("", "") == 1.0);
  CHECK(levenshtein_similarity("PLATO", "plato") == 1.0);
  CHECK(levenshtein_similarity("\xC3\x89mile", "\xC3\xA9mile") == 1.0);
}

TEST_CASE("levenshtein equals the naive recursion on short strings", "[levenshtein][property]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    auto a = random_word(rng, 6);
    auto b = random_word(rng, 6);
    REQUIRE(levenshtein_distance(a, b) == oracle::naive_levenshtein(a, b));
  }
}

TEST_CASE("levenshtein metric properties", "[levenshtein][property]") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_word(rng, 12, "abcxyz");
    auto b = random_word(rng, 12, "abcxyz");
    auto c = random_word(rng, 12, "abcxyz");
    auto ab = levenshtein_distance(a, b);
    REQUIRE(ab == levenshtein_distance(b, a));
    REQUIRE(levenshtein_distance(a, a) == 0);
    REQUIRE(ab >= (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size()));
    REQUIRE(levenshtein_distance(a, c) <= ab + levenshtein_distance(b, c));
    auto sim = levenshtein_similarity(a, b);
    REQUIRE(sim >= 0.0);
    REQUIRE(sim <= 1.0);
    REQUIRE(sim == Catch::Approx(oracle::matrix_similarity(a, b)).margin(1e-12));
  }
}

TEST_CASE("searchCandidates label / abstract fields", "[endpoint]") {
  auto target = toy_target();
  EndpointConfig label_only;
  label_only.use_abstract = false;
  std::vector<std::string> plato{"Plato"};
  CHECK(search_candidates(plato, target, label_only) ==
        std::vector<Iri>{Iri(kDbr + "Plato"), Iri(kDbr + "Plato,_Missouri")});

  EndpointConfig abstract_only;
  abstract_only.use_label = false;
  std::vector<std::string> lw{"Ludwig Wittgenstein"};
  auto hits = search_candidates(lw, target, abstract_only);
  // The Tractatus is found through its abstract although its label does not match.
  CHECK(std::find(hits.begin(), hits.end(), Iri(kDbr + "Tractatus")) != hits.end());
  CHECK(std::find(hits.begin(), hits.end(), Iri(kDbr + "Ludwig_Wittgenstein")) == hits.end());

  std::vector<std::string> none{"Zarathustra"};
  CHECK(search_candidates(none, target, EndpointConfig{}).empty());

  EndpointConfig neither;
  neither.use_label = neither.use_abstract = false;
  CHECK_THROWS_AS(search_candidates(plato, target, neither), Error);
  std::vector<std::string> empty_term{" "};
  CHECK_THROWS_AS(search_candidates(empty_term, target, EndpointConfig{}), Error);
}

TEST_CASE("filterDisjoint", "[endpoint]") {
  auto target = toy_target();
  auto thinker = local_entity("http://inpho.example/t1", {"Ludwig Wittgenstein"}, {"http://inpho.example/Thinker"});
  std::vector<Iri> candidates{Iri(kDbr + "Ludwig_Wittgenstein"), Iri(kDbr + "Wittgensteinian_tradition"),
                              Iri(kDbr + "Tractatus")};
  DisjointnessSet none;
  CHECK(filter_disjoint(candidates, thinker, none, target) == candidates);

  DisjointnessSet decl;
  decl.declare(Iri("http://inpho.example/Thinker"), Iri(kDbo + "PhilosophicalTradition"));
  CHECK(filter_disjoint(candidates, thinker, decl, target) ==
        std::vector<Iri>{Iri(kDbr + "Ludwig_Wittgenstein"), Iri(kDbr + "Tractatus")});

  // Declarations are symmetric.
  DisjointnessSet reversed;
  reversed.declare(Iri(kDbo + "PhilosophicalTradition"), Iri("http://inpho.example/Thinker"));
  CHECK(filter_disjoint(candidates, thinker, reversed, target).size() == 2);
}

TEST_CASE("resolveRedirects", "[endpoint]") {
  auto target = toy_target();
  EndpointConfig cfg;
  CHECK(resolve_redirects(Iri(kDbr + "Plato"), target, cfg) == std::vector<Iri>{Iri(kDbr + "Plato")});
  CHECK(resolve_redirects(Iri(kDbr + "Wittgenstein_L"), target, cfg) ==
        std::vector<Iri>{Iri(kDbr + "Ludwig_Wittgenstein")});
  CHECK(resolve_redirects(Iri(kDbr + "Moore"), target, cfg) ==
        std::vector<Iri>{Iri(kDbr + "G._E._Moore"), Iri(kDbr + "Moore,_Oklahoma")});
  // A <-> B cycle stops at the last IRI before repetition.
  CHECK(resolve_redirects(Iri(kDbr + "Cyc_A"), target, cfg) == std::vector<Iri>{Iri(kDbr + "Cyc_B")});
  // Depth exhaustion returns the deepest IRI reached.
  cfg.max_redirect_depth = 1;
  CHECK(resolve_redirects(Iri(kDbr + "Wittgenstein_L"), target, cfg) ==
        std::vector<Iri>{Iri(kDbr + "Wittgenstein_redirect2")});
}

TEST_CASE("rankEndpoint takes the best term/label pair", "[endpoint]") {
  auto target = toy_target();
  auto moore = local_entity("http://inpho.example/t2", {"G.E. Moore", "George Moore"});
  EndpointConfig cfg;
  auto ranked = rank_endpoint(moore, default_label_properties(), target, cfg, {}, 10);
  REQUIRE_FALSE(ranked.empty());
  CHECK(ranked.front().target == Iri(kDbr + "G._E._Moore"));
  CHECK(ranked.front().score == 1.0);
  CHECK(ranked.front().rank == 1);
  // The disambiguation page itself never appears; its entries do.
  for (const auto& c : ranked) CHECK(c.target != Iri(kDbr + "Moore"));

  auto thinker = local_entity("http://inpho.example/t1", {"Ludwig Wittgenstein"}, {"http://inpho.example/Thinker"});
  DisjointnessSet decl;
  decl.declare(Iri("http://inpho.example/Thinker"), Iri(kDbo + "PhilosophicalTradition"));
  auto lw = rank_endpoint(thinker, default_label_properties(), target, cfg, decl, 10);
  REQUIRE(lw.size() == 2);
  CHECK(lw[0].target == Iri(kDbr + "Ludwig_Wittgenstein"));
  CHECK(lw[0].display_label == "Ludwig Wittgenstein");
  CHECK(lw[1].target == Iri(kDbr + "Tractatus"));

  auto single = rank_endpoint(local_entity("urn:x", {"Tractatus Logico"}), default_label_properties(), target,
                              cfg.with_fields(Algorithm::EndpointL), {}, 10);
  REQUIRE(single.size() == 1);
  CHECK(single[0].rank == 1);

  CHECK_THROWS_AS(rank_endpoint(local_entity("urn:y", {}), default_label_properties(), target, cfg, {}, 10), Error);
}

TEST_CASE("rankEndpoint prefix and anti-monotone filtering", "[endpoint][property]") {
  auto target = toy_target();
  auto thinker = local_entity("http://inpho.example/t1", {"Ludwig Wittgenstein", "Plato"}, {"http://inpho.example/Thinker"});
  EndpointConfig cfg;
  auto full = rank_endpoint(thinker, default_label_properties(), target, cfg, {}, 100);
  for (std::size_t k = 1; k <= full.size(); ++k) {
    auto part = rank_endpoint(thinker, default_label_properties(), target, cfg, {}, k);
    REQUIRE(part.size() == k);
    for (std::size_t i = 0; i < k; ++i) {
      REQUIRE(part[i].target == full[i].target);
      REQUIRE(part[i].score == full[i].score);
    }
  }
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(full[i].rank == static_cast<int>(i + 1));
    CHECK(full[i].score >= 0.0);
    CHECK(full[i].score <= 1.0);
    if (i) CHECK(full[i - 1].score >= full[i].score);
  }

  DisjointnessSet decl;
  decl.declare(Iri("http://inpho.example/Thinker"), Iri(kDbo + "Place"));
  auto filtered = rank_endpoint(thinker, default_label_properties(), target, cfg, decl, 100);
  CHECK(filtered.size() < full.size());
  for (const auto& c : filtered)
    CHECK(std::any_of(full.begin(), full.end(), [&](const LinkCandidate& f) { return f.target == c.target; }));
}

TEST_CASE("endpoint config per algorithm", "[endpoint]") {
  EndpointConfig base;
  auto a = base.with_fields(Algorithm::EndpointA);
  CHECK((!a.use_label && a.use_abstract));
  auto l = base.with_fields(Algorithm::EndpointL);
  CHECK((l.use_label && !l.use_abstract));
  auto al = base.with_fields(Algorithm::EndpointAL);
  CHECK((al.use_label && al.use_abstract));
  CHECK_THROWS_AS(base.with_fields(Algorithm::WikiStat), Error);

  // A mismatched abstract property is reported, not silently ignored.
  auto target = toy_target();
  EndpointConfig other;
  other.abstract_property = Iri("http://dbpedia.org/property/abstract");
  std::vector<std::string> plato{"Plato"};
  CHECK_THROWS_AS(search_candidates(plato, target, other), Error);
}
