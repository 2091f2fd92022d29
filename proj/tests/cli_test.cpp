#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <random>

#include "support/toy.hpp"

using namespace lode;
using namespace lode::testing;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const TempDir& scratch) {
  auto out = scratch.path() / "stdout.txt";
  auto err = scratch.path() / "stderr.txt";
  std::string cmd = args + " >" + out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string lode_cli(const std::string& args) { return std::string(LODE_CLI) + " " + args; }

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("import reports the malformed line", "[cli]") {
  TempDir dir("cli-bad");
  auto nt = dir.path() / "bad.nt";
  {
    std::ofstream out(nt);
    for (int i = 1; i <= 16; ++i)
      out << "<http://example.org/e" << i << "> <http://www.w3.org/2000/01/rdf-schema#label> \"E" << i << "\" .\n";
    out << "<http://example.org/e17> <http://www.w3.org/2000/01/rdf-schema#label> \"unterminated .\n";
    out << "<http://example.org/e18> <http://www.w3.org/2000/01/rdf-schema#label> \"E18\" .\n";
  }
  auto r = run(lode_cli("--data-dir " + q(dir.path() / "data") + " import --local " + q(nt)), dir);
  CHECK(r.status == 1);
  CHECK(r.err.find("line 17") != std::string::npos);
  CHECK(r.err.find("bad.nt") != std::string::npos);
  CHECK(!fs::exists(dir.path() / "data" / "local.nt"));

  auto blank = dir.path() / "blank.nt";
  std::ofstream(blank) << "_:b0 <http://www.w3.org/2000/01/rdf-schema#label> \"x\" .\n";
  auto r2 = run(lode_cli("--data-dir " + q(dir.path() / "data") + " import --target " + q(blank)), dir);
  CHECK(r2.status == 1);
  CHECK(r2.err.find("line 1") != std::string::npos);
}

TEST_CASE("import of a link dump equals in-process aggregation", "[cli]") {
  TempDir dir("cli-dump");
  std::mt19937_64 rng(7);
  const std::vector<std::string> anchors = {"Plato", "plato", "Platon", "  Plato  ", "Plato  the  Greek", "Aristotle"};
  const std::vector<std::string> targets = {"http://dbpedia.org/resource/Plato", "http://dbpedia.org/resource/Plato_(crater)",
                                            "http://dbpedia.org/resource/Aristotle"};
  auto dump = dir.path() / "links.tsv";
  {
    std::ofstream out(dump);
    out << "# source\ttarget\tanchor\n";
    for (int i = 0; i < 3000; ++i)
      out << "http://en.wikipedia.org/wiki/Page" << rng() % 400 << '\t' << targets[rng() % targets.size()] << '\t'
          << anchors[rng() % anchors.size()] << '\n';
  }
  auto data = dir.path() / "data";
  auto r = run(lode_cli("--data-dir " + q(data) + " import --link-dump " + q(dump)), dir);
  INFO(r.err);
  REQUIRE(r.status == 0);
  std::ifstream dump_in(dump);
  auto expected = build_anchor_table(read_link_dump(dump_in));
  std::ifstream table_in(data / "anchors.tsv");
  auto imported = AnchorTable::read(table_in);
  CHECK(imported.total_links() == 3000);
  CHECK(imported.total_links() == expected.total_links());
  CHECK(imported.rows() == expected.rows());

  std::ofstream(dump, std::ios::app) << "http://en.wikipedia.org/wiki/X\tnot an iri\tPlato\n";
  auto bad = run(lode_cli("--data-dir " + q(data) + " import --link-dump " + q(dump)), dir);
  CHECK(bad.status == 1);
  CHECK(bad.err.find("line 3002") != std::string::npos);
}

TEST_CASE("import, eval and rank on the toy corpus", "[cli]") {
  TempDir dir("cli-toy");
  auto data = dir.path() / "data";
  auto toy = toy_dir();
  auto r = run(lode_cli("--data-dir " + q(data) + " --prefixes " + q(toy / "prefixes.tsv") + " import --local " +
                        q(toy / "local.nt") + " --target " + q(toy / "target.nt") + " --anchors " +
                        q(toy / "anchors.tsv") + " --disjointness " + q(toy / "disjointness.tsv")),
           dir);
  INFO(r.err);
  REQUIRE(r.status == 0);
  for (const char* f : {"local.nt", "target.nt", "anchors.tsv", "disjointness.tsv", "prefixes.tsv"})
    CHECK(fs::exists(data / f));
  CHECK(r.out.find("target.nt: 7570 triples, 2000 entities") != std::string::npos);

  auto report = dir.path() / "report.json";
  auto e = run(lode_cli("--data-dir " + q(data) + " eval --gold " + q(toy / "gold-persons.tsv") +
                        " --algorithm endpoint-al --algorithm wikistat --out " + q(report)),
               dir);
  INFO(e.err);
  REQUIRE(e.status == 0);
  CHECK(e.out.find("endpoint-al") != std::string::npos);
  auto doc = render::Json::parse(slurp(report));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);

  auto engine = Engine::open(toy_config(data));
  std::ifstream gin(toy / "gold-persons.tsv");
  auto gold = read_gold_standard(gin, engine->prefixes());
  auto res = engine->resources();
  for (std::size_t i = 0; i < 2; ++i) {
    auto alg = i == 0 ? Algorithm::EndpointAL : Algorithm::WikiStat;
    Ranker ranker = [&](const Entity& ent, std::size_t k) { return rank_candidates(ent, alg, k, res); };
    auto expected = run_benchmark(gold, *engine->local(), ranker, alg, kDefaultCandidates);
    CHECK(doc[i]["algorithm"] == std::string(to_string(alg)));
    CHECK(doc[i]["entries"] == gold.size());
    CHECK(doc[i]["mrr"].get<double>() == expected.mrr);
    CHECK(doc[i]["missed"] == expected.missed);
  }

  auto rk = run(lode_cli("--data-dir " + q(data) + " rank thinker:t3724 --algorithm wikistat --k 3"), dir);
  INFO(rk.err);
  REQUIRE(rk.status == 0);
  auto ranked = render::Json::parse(rk.out);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0]["target"]["iri"] == "http://dbpedia.org/resource/Plato");
  CHECK(ranked[0]["score"] == 3566.0);

  auto missing = run(lode_cli("--data-dir " + q(data) + " eval"), dir);
  CHECK(missing.status != 0);
  auto unknown = run(lode_cli("--data-dir " + q(data) + " rank thinker:t0"), dir);
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("UnknownLocalEntity") != std::string::npos);
}

TEST_CASE("the toy generator is deterministic", "[cli][toy]") {
  TempDir dir("toygen");
  auto r = run(std::string(LODE_TOYGEN) + " " + q(dir.path() / "toy"), dir);
  REQUIRE(r.status == 0);
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(toy_dir())) {
    INFO(f.path().filename().string());
    CHECK(slurp(f.path()) == slurp(dir.path() / "toy" / f.path().filename()));
    ++files;
  }
  CHECK(files == 8);
}
