#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lode/lode.hpp"

namespace fs = std::filesystem;
using namespace lode;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  return in;
}

template <class F>
void write_file(const fs::path& path, F&& writer) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    writer(out);
    if (!out) throw Error(ErrorCode::Io, "write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Reports errors as "file: message" so the offending line is named.
template <class F>
auto with_file(const std::string& file, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw std::runtime_error(file + ": " + e.what());
  }
}

struct CommonOptions {
  std::string config_file;
  std::string data_dir;
  std::string prefixes;
};

ServiceConfig load_config(const CommonOptions& common) {
  ServiceConfig cfg;
  if (!common.config_file.empty()) cfg = with_file(common.config_file, [&] { return ServiceConfig::load_file(common.config_file); });
  if (!common.data_dir.empty()) cfg.data_dir = common.data_dir;
  if (!common.prefixes.empty()) cfg.prefixes = common.prefixes;
  return cfg;
}

PrefixTable load_prefixes(const ServiceConfig& cfg) {
  auto path = cfg.prefix_path();
  if (path.empty() || (!fs::exists(path) && cfg.prefixes.empty())) return PrefixTable::defaults();
  return with_file(path, [&] {
    auto in = open_input(path);
    return PrefixTable::load(in);
  });
}

struct ImportOptions {
  std::string local, target, anchors, link_dump, provenance, disjointness;
};

int run_import(const CommonOptions& common, const ImportOptions& opt) {
  auto cfg = load_config(common);
  if (cfg.data_dir.empty()) throw std::runtime_error("import needs --data-dir (or data_dir in the config)");
  if (opt.local.empty() && opt.target.empty() && opt.anchors.empty() && opt.link_dump.empty() && opt.provenance.empty() &&
      opt.disjointness.empty() && common.prefixes.empty())
    throw std::runtime_error("nothing to import; give at least one of --local --target --anchors --link-dump");
  if (!opt.anchors.empty() && !opt.link_dump.empty()) throw std::runtime_error("--anchors and --link-dump are exclusive");
  fs::path dir(cfg.data_dir);
  fs::create_directories(dir);

  if (!common.prefixes.empty()) {
    with_file(common.prefixes, [&] {
      auto in = open_input(common.prefixes);
      PrefixTable::load(in);
    });
    fs::copy_file(common.prefixes, dir / ServiceConfig::kPrefixFile, fs::copy_options::overwrite_existing);
    std::cout << "prefixes: " << (dir / ServiceConfig::kPrefixFile).string() << '\n';
  }
  auto prefixes = load_prefixes(cfg);
  RepoConfig repo_config{cfg.label_property_iris(prefixes), prefixes.expand(cfg.abstract_property)};

  auto import_repo = [&](const std::string& src, Origin origin, std::string_view name) {
    auto repo = with_file(src, [&] {
      auto in = open_input(src);
      Repository r(repo_config);
      read_ntriples(in, r, origin);
      return r;
    });
    write_file(dir / name, [&](std::ostream& out) { write_ntriples(out, repo); });
    std::cout << name << ": " << repo.size() << " triples, " << repo.subjects().size() << " entities\n";
    return repo;
  };
  if (!opt.local.empty()) import_repo(opt.local, Origin::local(), ServiceConfig::kLocalFile);
  if (!opt.target.empty()) import_repo(opt.target, Origin::target(), ServiceConfig::kTargetFile);

  if (!opt.provenance.empty()) {
    auto records = with_file(opt.provenance, [&] {
      auto in = open_input(opt.provenance);
      return read_provenance(in);
    });
    fs::copy_file(opt.provenance, dir / ServiceConfig::kProvenanceFile, fs::copy_options::overwrite_existing);
    std::cout << ServiceConfig::kProvenanceFile << ": " << records.size() << " records\n";
  }

  if (!opt.anchors.empty() || !opt.link_dump.empty()) {
    AnchorTable table;
    if (!opt.anchors.empty()) {
      table = with_file(opt.anchors, [&] {
        auto in = open_input(opt.anchors);
        return AnchorTable::read(in);
      });
    } else {
      table = with_file(opt.link_dump, [&] {
        auto in = open_input(opt.link_dump);
        auto records = read_link_dump(in);
        return build_anchor_table(records);
      });
    }
    write_file(dir / ServiceConfig::kAnchorFile, [&](std::ostream& out) { table.write(out); });
    std::cout << ServiceConfig::kAnchorFile << ": " << table.rows().size() << " rows, " << table.total_links()
              << " links\n";
  }

  if (!opt.disjointness.empty()) {
    auto decl = with_file(opt.disjointness, [&] {
      auto in = open_input(opt.disjointness);
      return DisjointnessSet::load(in, prefixes);
    });
    fs::copy_file(opt.disjointness, dir / ServiceConfig::kDisjointnessFile, fs::copy_options::overwrite_existing);
    std::cout << ServiceConfig::kDisjointnessFile << ": " << decl.size() / 2 << " declarations\n";
  }
  return 0;
}

struct EvalOptions {
  std::string gold;
  std::vector<std::string> algorithms;
  std::size_t k = kDefaultCandidates;
  std::string out;
};

int run_eval(const CommonOptions& common, const EvalOptions& opt) {
  auto cfg = load_config(common);
  auto engine = Engine::open(cfg);
  auto gold = with_file(opt.gold, [&] {
    auto in = open_input(opt.gold);
    return read_gold_standard(in, engine->prefixes());
  });
  std::vector<Algorithm> algorithms;
  for (const auto& name : opt.algorithms) {
    if (name == "all") {
      for (auto a : {Algorithm::EndpointA, Algorithm::EndpointL, Algorithm::EndpointAL, Algorithm::WikiStat})
        algorithms.push_back(a);
    } else {
      algorithms.push_back(parse_algorithm(name));
    }
  }
  if (algorithms.empty()) algorithms.push_back(cfg.default_algorithm);

  auto local = engine->local();
  auto res = engine->resources();
  std::vector<EvalReport> reports;
  for (auto algorithm : algorithms) {
    Ranker ranker = [&](const Entity& e, std::size_t k) { return rank_candidates(e, algorithm, k, res); };
    reports.push_back(run_benchmark(gold, *local, ranker, algorithm, opt.k));
  }

  render::Json doc = render::Json::array();
  for (const auto& r : reports) doc.push_back(render::report(r, engine->prefixes()));
  if (!opt.out.empty()) {
    write_file(opt.out, [&](std::ostream& out) { out << (reports.size() == 1 ? doc[0] : doc).dump(2) << '\n'; });
    std::cout << "report: " << opt.out << '\n';
  }
  std::cout << format_summary(reports);
  return 0;
}

struct RankOptions {
  std::string iri;
  std::string algorithm;
  std::size_t k = 0;
};

int run_rank(const CommonOptions& common, const RankOptions& opt) {
  auto cfg = load_config(common);
  auto engine = Engine::open(cfg);
  Algorithm algorithm = opt.algorithm.empty() ? cfg.default_algorithm : parse_algorithm(opt.algorithm);
  auto ranked = engine->candidates(engine->expand(opt.iri), algorithm, opt.k ? opt.k : cfg.k);
  render::Json out = render::Json::array();
  for (const auto& c : ranked) out.push_back(render::candidate(c, engine->prefixes()));
  std::cout << out.dump(2) << '\n';
  return 0;
}

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const CommonOptions& common, const std::string& listen) {
  auto cfg = load_config(common);
  if (!listen.empty()) cfg.listen_address = listen;
  auto engine = Engine::open(cfg);
  Api api(*engine);
  httplib::Server server;
  install_routes(server, api);
  auto [host, port] = cfg.listen();
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "lode: " << engine->local()->size() << " local triples, "
            << (engine->target() ? engine->target()->size() : 0) << " target triples, "
            << (engine->anchors() ? engine->anchors()->rows().size() : 0) << " anchor rows\n";
  std::cerr << "lode: listening on " << host << ':' << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "lode: cannot listen on " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lode: linked-data linking and enhancement engine"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--config", common.config_file, "key=value configuration file")->check(CLI::ExistingFile);
  app.add_option("--data-dir", common.data_dir, "directory holding imported artifacts");
  app.add_option("--prefixes", common.prefixes, "prefix<TAB>namespace file")->check(CLI::ExistingFile);

  ImportOptions import_opt;
  auto* import_cmd = app.add_subcommand("import", "validate and index input files into the data directory");
  import_cmd->add_option("--local", import_opt.local, "local repository (N-Triples)");
  import_cmd->add_option("--target", import_opt.target, "target repository (N-Triples)");
  import_cmd->add_option("--anchors", import_opt.anchors, "anchor table file");
  import_cmd->add_option("--link-dump", import_opt.link_dump, "source<TAB>target<TAB>anchor link records");
  import_cmd->add_option("--provenance", import_opt.provenance, "provenance sidecar of the local repository");
  import_cmd->add_option("--disjointness", import_opt.disjointness, "typeA<TAB>typeB declarations");

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "run a gold-standard benchmark");
  eval_cmd->add_option("--gold", eval_opt.gold, "localIRI<TAB>targetIRI file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--algorithm", eval_opt.algorithms,
                       "endpoint-a, endpoint-l, endpoint-al, wikistat or all (repeatable)");
  eval_cmd->add_option("--k", eval_opt.k, "candidates per entity")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--out", eval_opt.out, "JSON report file");

  RankOptions rank_opt;
  auto* rank_cmd = app.add_subcommand("rank", "print link candidates for one local entity");
  rank_cmd->add_option("iri", rank_opt.iri, "local entity IRI (full or compact)")->required();
  rank_cmd->add_option("--algorithm", rank_opt.algorithm, "ranking algorithm");
  rank_cmd->add_option("--k", rank_opt.k, "candidates")->check(CLI::PositiveNumber);

  std::string listen;
  auto* serve_cmd = app.add_subcommand("serve", "serve the HTTP JSON API");
  serve_cmd->add_option("--listen", listen, "host:port");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*import_cmd) return run_import(common, import_opt);
    if (*eval_cmd) return run_eval(common, eval_opt);
    if (*rank_cmd) return run_rank(common, rank_opt);
    if (*serve_cmd) return run_serve(common, listen);
  } catch (const std::exception& e) {
    std::cerr << "lode: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
