// Deterministic toy corpus: an InPhO-like local repository (thinkers and
// ideas), a DBpedia-like target repository and a Wikipedia-like anchor
// table, plus gold standards.
//
//   lode_toygen OUTDIR
//
// Persons carry their full name as label in both repositories, but their
// full-name anchors are sparse and often point at namesakes. Concepts are
// known locally under aliases; the target has the canonical title, redirect
// pages for some aliases, and decoy pages whose titles contain the alias,
// while anchor statistics favour the canonical page.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lode/rdf/ntriples.hpp"
#include "lode/wikistat.hpp"

namespace fs = std::filesystem;
using namespace lode;

namespace {

// splitmix64; the mapping to ranges is ours so output never depends on the
// standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::uint64_t s_;
};

const std::string kInpho = "https://www.inphoproject.org/";
const std::string kThinker = kInpho + "thinker/";
const std::string kIdea = kInpho + "idea/";
const std::string kNell = "http://rtw.ml.cmu.edu/rtw/kb/";
const std::string kDbr(vocab::kDbr);
const std::string kDbo(vocab::kDbo);
const std::string kFoafName = std::string(vocab::kFoaf) + "name";
const std::string kSkosPref = std::string(vocab::kSkos) + "prefLabel";

const std::vector<std::string> kFirst = {
    "Anton",  "Bertha",  "Carl",   "Dora",    "Emil",    "Frieda", "Gustav", "Hanna",  "Ivo",     "Jakob",
    "Klara",  "Lorenz",  "Martha", "Nikolai", "Olga",    "Paul",   "Quirin", "Rosa",   "Samuel",  "Thea",
    "Ulrich", "Vera",    "Walter", "Xaver",   "Yvonne",  "Zeno",   "Agnes",  "Bruno",  "Cecilia", "Dietrich",
    "Edith",  "Felix",   "Greta",  "Heinrich", "Ilse",   "Johann", "Karin",  "Leopold", "Mila",   "Norbert",
    "Otto",   "Pia",     "Rudolf", "Sophie",  "Theodor", "Ursula", "Viktor", "Wilma",  "Arvid",   "Berit"};
const std::vector<std::string> kLast = {
    "Abendroth", "Brenner",   "Castellan", "Dornbach",  "Eckhart",   "Falkner",   "Grauwald",  "Hollstein",
    "Imhof",     "Jessberg",  "Kaltenecker", "Lindqvist", "Morgenthal", "Nettelbeck", "Oberlin", "Pfannkuch",
    "Quellmalz", "Rautenberg", "Sandrock", "Tiefenbach", "Uhlendorf", "Vossberg",  "Weidlich",  "Xylander",
    "Ystad",     "Zwingmann", "Ahlgren",   "Birkholz",  "Crusius",   "Deichmann", "Elsner",    "Fabricius",
    "Gellert",   "Hasenclever", "Iselin",  "Jaspersen", "Kortum",    "Leutwein",  "Mahlberg",  "Nordhoff",
    "Osterhaus", "Pruckner",  "Reinbeck",  "Schadow",   "Trautwein", "Unruh",     "Vierling",  "Wachsmuth",
    "Zedlitz",   "Aichinger", "Bechstein", "Carstens",  "Dachsel",   "Ebersbach", "Fischbach", "Gorsleben",
    "Hartlaub",  "Irmscher",  "Jordanes",  "Kessler",   "Liebrecht", "Mauersberger", "Neidhart", "Olbrich",
    "Pietzsch",  "Rabenau",   "Stolberg",  "Tannhauser", "Ungerer",  "Volkmar",   "Wendland",  "Zuckmayer"};
const std::vector<std::string> kNationality = {"German", "Austrian", "Swiss", "Danish", "Dutch", "Swedish", "Czech"};
const std::vector<std::string> kOccupation = {"footballer", "politician", "painter", "composer", "actor", "chemist"};
const std::vector<std::string> kOccupationType = {"Athlete", "Politician", "Artist", "MusicalArtist", "Actor", "Scientist"};

// Adjective, its field noun.
const std::vector<std::pair<std::string, std::string>> kFields = {
    {"Moral", "ethics"},          {"Epistemic", "knowledge"},  {"Modal", "possibility"},
    {"Aesthetic", "beauty"},      {"Political", "the state"},  {"Logical", "inference"},
    {"Semantic", "meaning"},      {"Causal", "causation"},     {"Scientific", "science"},
    {"Mathematical", "numbers"},  {"Religious", "faith"},      {"Temporal", "time"},
    {"Legal", "law"},             {"Social", "society"},       {"Linguistic", "language"},
    {"Mental", "the mind"},       {"Historical", "history"},   {"Ethical", "virtue"},
    {"Metaphysical", "substance"}, {"Perceptual", "perception"}};
const std::vector<std::string> kIsms = {"realism",  "skepticism",  "holism",      "relativism",   "dualism",
                                        "naturalism", "nominalism", "pluralism",   "contextualism", "functionalism",
                                        "idealism", "empiricism",  "rationalism", "pragmatism",   "monism"};
const std::vector<std::string> kDecoyKinds = {"book", "album", "film", "journal"};
const std::vector<std::string> kDecoyTypes = {"Book", "Album", "Film", "AcademicJournal"};
const std::vector<std::string> kTownRoots = {"Alten", "Birk", "Falken", "Gruen", "Hohen", "Kloster", "Lichten",
                                             "Mittel", "Neu", "Ober", "Rosen", "Stein", "Unter", "Wald"};
const std::vector<std::string> kTownEnds = {"bach", "berg", "burg", "dorf", "feld", "hausen", "heim", "stadt"};
const std::vector<std::string> kWords = {"Silver", "Northern", "Quiet", "Broken", "Golden", "Distant", "Crimson",
                                         "Hidden", "Winter", "Open", "Last", "Secret", "Endless", "Little"};
const std::vector<std::string> kNouns = {"River", "Garden", "Harbour", "Letters", "Machine", "Season", "Voices",
                                         "Mirror", "Road", "Island", "Fields", "Lantern", "Orchestra", "Tide"};

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string title_iri(const std::string& title) {
  std::string out = kDbr;
  for (char c : title) out += c == ' ' ? '_' : c;
  return out;
}

struct Output {
  Repository local;
  Repository target;
  std::map<std::pair<std::string, std::string>, std::uint64_t> anchors;  // (anchor, target) -> count
  std::vector<std::pair<std::string, std::string>> gold_persons;
  std::vector<std::pair<std::string, std::string>> gold_concepts;

  void l(const std::string& s, const std::string& p, Term o) { local.add(Triple{Iri(s), Iri(p), std::move(o), Origin::local()}); }
  void t(const std::string& s, const std::string& p, Term o) { target.add(Triple{Iri(s), Iri(p), std::move(o), Origin::target()}); }
  void label(const std::string& s, const std::string& text) { t(s, vocab::kRdfsLabel, Literal(text, std::string("en"))); }
  void type(const std::string& s, const std::string& cls) { t(s, vocab::kRdfType, Iri(kDbo + cls)); }
  void anchor(const std::string& text, const std::string& target_iri, std::uint64_t n) { anchors[{text, target_iri}] += n; }
};

std::vector<std::string> make_towns(Rng& rng, Output& out) {
  std::set<std::string> names;
  while (names.size() < 80) names.insert(rng.pick(kTownRoots) + rng.pick(kTownEnds));
  std::vector<std::string> iris;
  for (const auto& n : names) {
    auto iri = title_iri(n);
    out.label(iri, n);
    out.type(iri, "Place");
    out.type(iri, "Town");
    out.t(iri, kDbo + "abstract", Literal(n + " is a small town with a historic market square.", std::string("en")));
    out.anchor(n, iri, rng.between(5, 200));
    iris.push_back(iri);
  }
  return iris;
}

struct Person {
  std::string local_iri;
  std::string target_iri;
  std::string name;
  std::string first, last;
  std::uint64_t year = 0;  // 0: random
  std::string town;        // empty: random
  std::string nationality;
};

std::string article(const std::string& word) {
  return std::string("AEIOU").find(word.front()) != std::string::npos ? "an " : "a ";
}

void make_person(Rng& rng, Output& out, const Person& p, const std::vector<std::string>& towns,
                 const std::vector<std::string>& concept_titles) {
  auto year = rng.between(1700, 1950);
  auto nat = rng.pick(kNationality);
  auto town = rng.pick(towns);
  if (p.year) year = p.year;
  if (!p.nationality.empty()) nat = p.nationality;
  if (!p.town.empty()) town = p.town;
  // Local record.
  out.l(p.local_iri, vocab::kRdfType, Iri(kInpho + "Thinker"));
  out.l(p.local_iri, kFoafName, Literal(p.name));
  out.l(p.local_iri, kInpho + "birthYear", Literal(std::to_string(year), std::nullopt, Iri(std::string(vocab::kXsd) + "gYear")));
  out.l(p.local_iri, kInpho + "nationality", Literal(nat));

  // Target page.
  out.label(p.target_iri, p.name);
  if (rng.chance(50)) out.t(p.target_iri, kFoafName, Literal(p.name, std::string("en")));
  out.type(p.target_iri, "Person");
  out.type(p.target_iri, "Philosopher");
  out.t(p.target_iri, kDbo + "birthPlace", Iri(town));
  out.t(p.target_iri, kDbo + "birthYear", Literal(std::to_string(year), std::nullopt, Iri(std::string(vocab::kXsd) + "gYear")));
  std::string abstract = p.name + " (born " + std::to_string(year) + ") was " + article(nat) + nat + " philosopher";
  if (!concept_titles.empty()) abstract += " who wrote on " + rng.pick(concept_titles);
  out.t(p.target_iri, kDbo + "abstract", Literal(abstract + ".", std::string("en")));

  // Sparse full-name anchors; the surname alone is the common anchor.
  if (rng.chance(55)) out.anchor(p.name, p.target_iri, rng.between(1, 40));
  out.anchor(p.last, p.target_iri, rng.between(5, 120));

  // Namesakes share the name and often dominate its anchor statistics.
  std::size_t namesakes = rng.chance(60) ? 1 + rng.below(2) : 0;
  std::vector<std::string> sakes;
  for (std::size_t i = 0; i < namesakes; ++i) {
    auto occ = rng.below(kOccupation.size());
    auto title = p.name + " (" + kOccupation[occ] + ")";
    auto iri = title_iri(title);
    if (out.target.has_subject(Iri(iri))) continue;
    out.label(iri, title);
    out.type(iri, "Person");
    out.type(iri, kOccupationType[occ]);
    out.t(iri, kDbo + "birthPlace", Iri(rng.pick(towns)));
    out.t(iri, kDbo + "abstract",
          Literal(p.name + " (born " + std::to_string(rng.between(1900, 1995)) + ") is " + [&] {
                    auto n = rng.pick(kNationality);
                    return article(n) + n;
                  }() + " " + kOccupation[occ] + ".",
                  std::string("en")));
    if (rng.chance(50)) out.anchor(p.name, iri, rng.between(1, 60));
    out.anchor(title, iri, rng.between(1, 10));
    out.anchor(p.last, iri, rng.between(1, 80));
    sakes.push_back(iri);
  }
  // A relative with the same surname.
  if (rng.chance(30)) {
    auto name = rng.pick(kFirst) + " " + p.last;
    auto iri = title_iri(name);
    if (name != p.name && !out.target.has_subject(Iri(iri))) {
      out.label(iri, name);
      out.type(iri, "Person");
      out.t(iri, kDbo + "abstract", Literal(name + " was a relative of the philosopher " + p.name + ".", std::string("en")));
      out.anchor(name, iri, rng.between(1, 30));
    }
  }
  if (!sakes.empty() && rng.chance(40)) {
    auto iri = title_iri(p.name + " (disambiguation)");
    out.label(iri, p.name + " (disambiguation)");
    out.t(iri, vocab::kDboDisambiguates, Iri(p.target_iri));
    for (const auto& s : sakes) out.t(iri, vocab::kDboDisambiguates, Iri(s));
  }
}

struct Concept {
  std::string local_iri;
  std::string target_iri;
  std::string title;                 // canonical target title
  std::vector<std::string> aliases;  // local labels
};

void make_concept(Rng& rng, Output& out, const Concept& c, const std::string& field, const std::vector<Person>& persons) {
  out.l(c.local_iri, vocab::kRdfType, Iri(kInpho + "Idea"));
  out.l(c.local_iri, vocab::kRdfsLabel, Literal(c.aliases[0]));
  if (c.aliases.size() > 1) out.l(c.local_iri, kSkosPref, Literal(c.aliases[1]));

  out.label(c.target_iri, c.title);
  out.type(c.target_iri, "TopicalConcept");
  std::string abstract = c.title + " is a family of positions in the philosophy of " + field + ".";
  if (rng.chance(50)) abstract += " It is also known as " + rng.pick(c.aliases) + ".";
  out.t(c.target_iri, kDbo + "abstract", Literal(abstract, std::string("en")));
  out.anchor(c.title, c.target_iri, rng.between(50, 500));

  for (const auto& alias : c.aliases) {
    if (lowercase(alias) == lowercase(c.title)) continue;
    // Surface forms link to the canonical page far more often than to decoys.
    if (rng.chance(92)) out.anchor(alias, c.target_iri, rng.between(20, 300));
    if (rng.chance(55)) {
      auto redirect = title_iri(alias);
      if (!out.target.has_subject(Iri(redirect))) {
        out.label(redirect, alias);
        out.t(redirect, vocab::kDboRedirects, Iri(c.target_iri));
      }
    }
    std::size_t decoys = 1 + rng.below(3);
    for (std::size_t i = 0; i < decoys; ++i) {
      auto kind = rng.below(kDecoyKinds.size());
      auto title = alias + " (" + kDecoyKinds[kind] + ")";
      auto iri = title_iri(title);
      if (out.target.has_subject(Iri(iri))) continue;
      out.label(iri, title);
      out.type(iri, kDecoyTypes[kind]);
      const auto& author = rng.pick(persons);
      out.t(iri, kDbo + "abstract",
            Literal(alias + " is a " + std::to_string(rng.between(1950, 2015)) + " " + kDecoyKinds[kind] + " by " +
                        author.first + " " + author.last.substr(0, 1) + ".",
                    std::string("en")));
      out.anchor(alias, iri, rng.between(1, 15));
      out.anchor(title, iri, rng.between(1, 20));
    }
  }
}

void make_filler(Rng& rng, Output& out, std::size_t n) {
  std::size_t made = 0;
  while (made < n) {
    auto title = rng.pick(kWords) + " " + rng.pick(kNouns);
    auto kind = rng.below(kDecoyKinds.size());
    if (rng.chance(50)) title += " (" + kDecoyKinds[kind] + ")";
    else if (rng.chance(50)) title = "The " + title;
    auto iri = title_iri(title);
    if (out.target.has_subject(Iri(iri))) {
      title += " " + std::to_string(made);
      iri = title_iri(title);
      if (out.target.has_subject(Iri(iri))) continue;
    }
    out.label(iri, title);
    out.type(iri, kDecoyTypes[kind]);
    out.t(iri, kDbo + "abstract", Literal(title + " is a work released in " + std::to_string(rng.between(1950, 2020)) + ".", std::string("en")));
    out.anchor(title, iri, rng.between(1, 90));
    ++made;
  }
}

void write_nt(const fs::path& path, const Repository& repo) {
  std::ofstream out(path);
  write_ntriples(out, repo);
}

void write_gold(const fs::path& path, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ofstream out(path);
  out << "# local\ttarget\n";
  for (const auto& [l, t] : rows) out << l << '\t' << t << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lode_toygen OUTDIR\n";
    return 2;
  }
  fs::path dir(argv[1]);
  fs::create_directories(dir);
  Rng rng(20130901);
  Output out;

  auto towns = make_towns(rng, out);

  // Concepts first so person abstracts can mention them.
  std::vector<Concept> concepts;
  std::set<std::string> used_titles;
  std::vector<std::string> concept_titles;
  std::vector<std::string> concept_fields;
  while (concepts.size() < 198) {
    const auto& [adj, field] = kFields[rng.below(kFields.size())];
    const auto& ism = rng.pick(kIsms);
    auto title = adj + " " + ism;
    if (!used_titles.insert(title).second) continue;
    Concept c;
    c.local_iri = kIdea + std::to_string(1000 + concepts.size() * 7);
    c.target_iri = title_iri(title);
    c.title = title;
    const std::string about = capitalize(ism) + " about " + field;
    const std::string paren = capitalize(ism) + " (" + field + ")";
    auto style = rng.below(10);
    if (style < 2) c.aliases = {capitalize(adj) + " " + capitalize(ism)};  // differs only in case
    else if (style < 5) c.aliases = {about};
    else if (style < 7) c.aliases = {paren};
    else c.aliases = {about, paren};
    concepts.push_back(c);
    concept_titles.push_back(title);
    concept_fields.push_back(field);
  }

  std::vector<Person> persons;
  std::set<std::string> names;
  // Fixed thinkers used by examples and tests.
  persons.push_back({kThinker + "t4132", kDbr + "Ludwig_Wittgenstein", "Ludwig Wittgenstein", "Ludwig", "Wittgenstein",
                     1889, kDbr + "Vienna", "Austrian"});
  out.label(kDbr + "Vienna", "Vienna");
  out.type(kDbr + "Vienna", "Place");
  out.type(kDbr + "Vienna", "City");
  out.anchor("Vienna", kDbr + "Vienna", 2210);
  names.insert("Ludwig Wittgenstein");
  while (persons.size() < 299) {
    auto first = rng.pick(kFirst), last = rng.pick(kLast);
    auto name = first + " " + last;
    if (!names.insert(name).second) continue;
    persons.push_back({kThinker + "t" + std::to_string(5000 + persons.size() * 13), title_iri(name), name, first, last, 0, "", ""});
  }
  for (const auto& p : persons) {
    make_person(rng, out, p, towns, concept_titles);
    out.gold_persons.emplace_back(p.local_iri, p.target_iri);
  }
  // Namesake of Wittgenstein that shares the surname.
  out.label(kDbr + "Paul_Wittgenstein", "Paul Wittgenstein");
  out.type(kDbr + "Paul_Wittgenstein", "Person");
  out.type(kDbr + "Paul_Wittgenstein", "MusicalArtist");
  out.t(kDbr + "Paul_Wittgenstein", kDbo + "abstract",
        Literal("Paul Wittgenstein was an Austrian-American concert pianist, brother of Ludwig Wittgenstein.", std::string("en")));
  out.anchor("Paul Wittgenstein", kDbr + "Paul_Wittgenstein", 41);

  // Plato, with the published anchor counts.
  {
    const std::string plato = kThinker + "t3724";
    out.l(plato, vocab::kRdfType, Iri(kInpho + "Thinker"));
    out.l(plato, kFoafName, Literal("Plato"));
    out.l(plato, vocab::kRdfsLabel, Literal("Platon"));
    out.label(kDbr + "Plato", "Plato");
    out.type(kDbr + "Plato", "Person");
    out.type(kDbr + "Plato", "Philosopher");
    out.t(kDbr + "Plato", kDbo + "abstract",
          Literal("Plato was a philosopher in Classical Greece and the founder of the Academy in Athens.", std::string("en")));
    struct Row {
      const char* anchor;
      const char* title;
      std::uint64_t count;
      const char* type;
    };
    const Row rows[] = {{"Plato", "Plato", 3560, nullptr},
                        {"PLATO", "PLATO_(computer_system)", 47, "Software"},
                        {"Plato", "Plato,_Missouri", 20, "Place"},
                        {"Plato", "Plato_(crater)", 15, "LunarCrater"},
                        {"Plato", "Beer_measurement", 13, "TopicalConcept"},
                        {"Plato", "Plato,_Magdalena", 9, "Place"},
                        {"Platon", "Plato", 6, nullptr}};
    for (const auto& r : rows) {
      auto iri = kDbr + r.title;
      out.anchor(r.anchor, iri, r.count);
      if (r.type) {
        std::string lab = r.title;
        for (auto& ch : lab)
          if (ch == '_') ch = ' ';
        out.label(iri, lab);
        out.type(iri, r.type);
      }
    }
    out.gold_persons.emplace_back(plato, kDbr + "Plato");
  }

  for (std::size_t i = 0; i < concepts.size(); ++i) {
    make_concept(rng, out, concepts[i], concept_fields[i], persons);
    out.gold_concepts.emplace_back(concepts[i].local_iri, concepts[i].target_iri);
  }
  // Two concepts outside the generated vocabulary.
  for (const auto& [id, alias, title] :
       std::vector<std::tuple<std::string, std::string, std::string>>{{"646", "Platonism", "Platonic realism"},
                                                                       {"1344", "Picture theory", "Picture theory of language"}}) {
    Concept c{kIdea + id, title_iri(title), title, {alias}};
    make_concept(rng, out, c, "language", persons);
    out.gold_concepts.emplace_back(c.local_iri, c.target_iri);
  }

  // Local sameAs duplicates from a second source.
  for (std::size_t i = 0; i < 25; ++i) {
    const auto& p = persons[(i * 11) % persons.size()];
    auto dup = kNell + "person_" + std::to_string(i);
    out.l(dup, vocab::kRdfType, Iri(kNell + "Person"));
    out.l(dup, vocab::kRdfsLabel, Literal(p.name));
    out.l(dup, vocab::kOwlSameAs, Iri(p.local_iri));
  }
  // Labels of the local classes.
  out.l(kInpho + "Thinker", vocab::kRdfsLabel, Literal("Thinker"));
  out.l(kInpho + "Idea", vocab::kRdfsLabel, Literal("Idea"));
  out.l(kNell + "Person", vocab::kRdfsLabel, Literal("Human person"));
  // Some local structure between thinkers and ideas.
  for (std::size_t i = 0; i < persons.size(); ++i) {
    if (rng.chance(60)) out.l(persons[i].local_iri, kInpho + "hasInfluenced", Iri(rng.pick(persons).local_iri));
    if (rng.chance(70)) out.l(persons[i].local_iri, kInpho + "relatedIdea", Iri(rng.pick(concepts).local_iri));
  }

  std::size_t target_entities = out.target.subjects().size();
  make_filler(rng, out, target_entities < 2000 ? 2000 - target_entities : 0);

  // Anchor noise: unrelated surface forms.
  auto targets = out.target.subjects();
  while (out.anchors.size() < 5000) {
    auto anchor = rng.pick(kWords) + " " + rng.pick(kNouns) + " " + std::to_string(rng.below(400));
    out.anchor(anchor, rng.pick(targets).str(), rng.between(1, 5));
  }

  std::vector<AnchorCount> rows;
  std::uint64_t total = 0;
  for (const auto& [key, n] : out.anchors) {
    rows.push_back({Iri(key.second), key.first, n});
    total += n;
  }
  AnchorTable table(std::move(rows), total + 250000);

  write_nt(dir / "local.nt", out.local);
  write_nt(dir / "target.nt", out.target);
  {
    std::ofstream a(dir / "anchors.tsv");
    table.write(a);
  }
  auto all = out.gold_persons;
  all.insert(all.end(), out.gold_concepts.begin(), out.gold_concepts.end());
  write_gold(dir / "gold.tsv", all);
  write_gold(dir / "gold-persons.tsv", out.gold_persons);
  write_gold(dir / "gold-concepts.tsv", out.gold_concepts);
  {
    std::ofstream d(dir / "disjointness.tsv");
    d << "# local type\ttarget type\n"
      << "inpho:Thinker\tdbo:Place\n"
      << "inpho:Thinker\tdbo:Software\n"
      << "inpho:Idea\tdbo:Person\n"
      << "inpho:Idea\tdbo:Place\n";
  }
  {
    std::ofstream p(dir / "prefixes.tsv");
    p << "# prefix\tnamespace\n"
      << "inpho\t" << kInpho << '\n'
      << "thinker\t" << kThinker << '\n'
      << "idea\t" << kIdea << '\n'
      << "nell\t" << kNell << '\n';
  }
  std::cout << "local: " << out.local.size() << " triples, " << out.gold_persons.size() + out.gold_concepts.size()
            << " gold entities\n"
            << "target: " << out.target.size() << " triples, " << out.target.subjects().size() << " entities\n"
            << "anchors: " << table.rows().size() << " rows\n";
  return 0;
}
