#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

#include "gemcat/catalog_io.hpp"
#include "gemcat/census.hpp"
#include "gemcat/classifier.hpp"
#include "gemcat/generator.hpp"
#include "gemcat/homology.hpp"

namespace fs = std::filesystem;
using namespace gem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kInternal = 3 };

int log_level = 1;  // 0 error, 1 warn, 2 info, 3 debug

void log(int level, const std::string& message) {
  if (level <= log_level) std::cerr << "gemcat: " << message << "\n";
}

struct Globals {
  int jobs = 1;
  std::string seed_order = "canonical";
};

std::vector<Code> read_catalogue_dir(const std::string& dir, const std::string& seed_order) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".cat") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Code> codes;
  for (const auto& f : files) {
    auto c = decode_catalogue(read_file(f.string()));
    log(2, "read " + std::to_string(c.codes.size()) + " codes from " + f.string());
    codes.insert(codes.end(), c.codes.begin(), c.codes.end());
  }
  if (seed_order == "canonical")
    std::sort(codes.begin(), codes.end(), [](const Code& a, const Code& b) {
      return a.order() != b.order() ? a.order() < b.order() : a < b;
    });
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

int run_gen(int p, bool clusterless, const std::string& out_dir, const Globals& g) {
  BuildOptions options;
  options.clusterless = clusterless;
  options.jobs = g.jobs;
  auto set = build_catalogue(p, options);
  std::cout << "2p=" << 2 * p << " surfaces=" << set.surfaces.size() << " bipartite=" << set.bipartite.codes.size()
            << " nonbipartite=" << set.nonbipartite.codes.size() << "\n";
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto* c : {&set.bipartite, &set.nonbipartite}) {
      auto path = (fs::path(out_dir) / catalogue_file_name(*c)).string();
      write_file(path, encode_catalogue(*c));
      log(2, "wrote " + path);
    }
  }
  return kOk;
}

int run_stats(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".cat") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto c = decode_catalogue(read_file(f.string()));
    int clustered = 0;
    std::map<std::string, int> h1;
    for (const auto& code : c.codes) {
      auto graph = decode(code);
      if (!find_cluster_vertices(graph).empty()) ++clustered;
      ++h1[first_homology(graph).to_string()];
    }
    std::cout << f.filename().string() << ": 2p=" << 2 * c.p << " count=" << c.codes.size()
              << " clusterless=" << c.codes.size() - clustered << "\n";
    for (const auto& [group, n] : h1) std::cout << "  H1 = " << group << ": " << n << "\n";
  }
  return kOk;
}

ColouredGraph load_graph(const std::string& path, const std::string& code) {
  if (!code.empty()) return decode(Code(code));
  return decode_graph(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalogues of rigid crystallizations of closed 3-manifolds"};
  app.require_subcommand(1);
  Globals globals;
  std::string level = "warn";
  app.add_option("--jobs", globals.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed-order", globals.seed_order, "Order of codes fed to the classifier")
      ->check(CLI::IsMember({"canonical", "input"}));
  app.add_option("--log", level, "Log level")->check(CLI::IsMember({"error", "warn", "info", "debug"}));

  int p = 0;
  bool clusterless = false;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "Generate the catalogues of order 2p");
  gen->add_option("--p", p, "Half the vertex count")->required()->check(CLI::Range(1, 15));
  gen->add_flag("--clusterless", clusterless, "Drop members with cluster-type vertices");
  gen->add_option("--out", out_dir, "Directory for the catalogue files");

  int max_p = 0;
  bool verify_clusterless = false;
  auto* verify = app.add_subcommand("verify-tables", "Regenerate and compare counts with the embedded tables");
  verify->add_option("--max-p", max_p, "Largest p")->required()->check(CLI::Range(1, 15));
  verify->add_flag("--clusterless", verify_clusterless, "Also compare cluster-less counts");

  std::string in_dir, known_file, classes_out, witness_out;
  int depth = 1;
  auto* classify_cmd = app.add_subcommand("classify", "Partition catalogues into classes");
  classify_cmd->add_option("--in", in_dir, "Directory of catalogue files")->required()->check(CLI::ExistingDirectory);
  classify_cmd->add_option("--depth", depth, "Chain depth")->check(CLI::Range(1, 3));
  classify_cmd->add_option("--known", known_file, "Known names, lines '<code> <name>'")->check(CLI::ExistingFile);
  classify_cmd->add_option("--out", classes_out, "Class file (default stdout)");
  classify_cmd->add_option("--witness", witness_out, "Witness log");

  std::string class_file;
  auto* split = app.add_subcommand("split", "Name classes through known codes and connected sums");
  split->add_option("--class", class_file, "Class file")->required()->check(CLI::ExistingFile);
  split->add_option("--known", known_file, "Known names")->check(CLI::ExistingFile);
  split->add_option("--depth", depth, "Chain depth")->check(CLI::Range(1, 3));
  split->add_option("--out", classes_out, "Class file (default stdout)");

  std::string graph_file, code_text;
  auto* identify_cmd = app.add_subcommand(
      "identify",
      "Recognise a gem against a class file. The input must be a gem of a closed 3-manifold: every residue a "
      "sphere and chi(K) = 0, equivalently sum g_ij - sum g_i equal to the vertex count N. The same condition "
      "is sometimes quoted with p on the right-hand side; that reading fails already on the order-2 gem "
      "(6 - 4 = 2 = N), so N is used here.");
  identify_cmd->add_option("--graph", graph_file, "Graph file")->check(CLI::ExistingFile);
  identify_cmd->add_option("--code", code_text, "Graph given as a code");
  identify_cmd->add_option("--classes", class_file, "Class file")->required()->check(CLI::ExistingFile);
  identify_cmd->add_option("--depth", depth, "Chain depth")->check(CLI::Range(1, 3));

  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a gem");
  homology_cmd->add_option("--graph", graph_file, "Graph file")->check(CLI::ExistingFile);
  homology_cmd->add_option("--code", code_text, "Graph given as a code");

  auto* stats = app.add_subcommand("stats", "Summaries of catalogue files");
  stats->add_option("--in", in_dir, "Directory of catalogue files")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  log_level = level == "error" ? 0 : level == "warn" ? 1 : level == "info" ? 2 : 3;

  try {
    if (*gen) return run_gen(p, clusterless, out_dir, globals);
    if (*verify) {
      auto report = verify_tables(max_p, verify_clusterless, globals.jobs);
      std::cout << report.to_string();
      return report.ok() ? kOk : kMismatch;
    }
    if (*classify_cmd) {
      auto codes = read_catalogue_dir(in_dir, globals.seed_order);
      ClassifyOptions options;
      options.depth = depth;
      options.jobs = globals.jobs;
      auto part = classify(codes, options);
      KnownNames known = base_names();
      if (!known_file.empty())
        for (auto& [code, name] : decode_known(read_file(known_file))) known[code] = name;
      part = split_and_name(part, known, {depth, options.theta});
      log(2, std::to_string(codes.size()) + " codes in " + std::to_string(part.classes.size()) + " classes");
      emit(classes_out, encode_classes(part));
      if (!witness_out.empty()) write_file(witness_out, encode_witnesses(part.witnesses));
      for (const auto& w : part.witnesses)
        if (w.conflict) {
          log(0, "inconsistent handle numbers between " + w.first.text() + " and " + w.second.text());
          return kInternal;
        }
      return kOk;
    }
    if (*split) {
      auto part = decode_classes(read_file(class_file));
      KnownNames known = base_names();
      if (!known_file.empty())
        for (auto& [code, name] : decode_known(read_file(known_file))) known[code] = name;
      emit(classes_out, encode_classes(split_and_name(part, known, {depth, {}})));
      return kOk;
    }
    if (*identify_cmd || *homology_cmd) {
      if (graph_file.empty() == code_text.empty()) {
        std::cerr << "give exactly one of --graph and --code\n";
        return kUsage;
      }
      auto g = load_graph(graph_file, code_text);
      if (*homology_cmd) {
        auto h = homology(g);
        for (int k = 0; k < 4; ++k) std::cout << "H" << k << " = " << h[k].to_string() << "\n";
        return kOk;
      }
      auto part = decode_classes(read_file(class_file));
      ClassifyOptions options;
      options.depth = depth;
      options.jobs = globals.jobs;
      auto result = identify(g, part, options);
      if (log_level >= 3) std::cerr << format_trace(result.trace);
      if (!result.found) {
        std::cout << "unknown (rigid code " << result.rigid_code.text() << ")\n";
        return kOk;
      }
      std::cout << "class " << result.class_id << " handles=" << result.handles << " name "
                << (result.name.empty() ? "?" : result.name) << "\n";
      return kOk;
    }
    if (*stats) return run_stats(in_dir);
  } catch (const GemError& e) {
    std::cerr << "gemcat: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case GemError::Kind::ParseError:
      case GemError::Kind::NotAManifold:
      case GemError::Kind::IncompleteColouring:
      case GemError::Kind::Loop:
      case GemError::Kind::SlotClash:
      case GemError::Kind::OddOrder:
        return kUsage;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "gemcat: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
