// Command-line driver: analyze parametrized varieties, run single theorem
// checks, list the built-in catalog.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "osculant/catalog.hpp"
#include "osculant/errors.hpp"
#include "osculant/report.hpp"
#include "osculant/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEngine = 2;
constexpr int kExitTheoremFail = 3;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoull(v);
  } catch (...) {
    return fallback;
  }
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stol(v);
  } catch (...) {
    return fallback;
  }
}

struct CommonInputs {
  std::string file;
  std::string catalog;
  std::uint64_t seed = env_u64("OSCULANT_SEED", 0);
  int samples = static_cast<int>(env_long("OSCULANT_SAMPLES", 5));
  long bound = env_long("OSCULANT_COORD_BOUND", 100);
  std::string mode = "sampled";
  std::string format = "json";
};

osculant::Parametrization load_target(const CommonInputs& in) {
  if (!in.catalog.empty()) return osculant::catalog_get(in.catalog).parametrization;
  std::ifstream f(in.file);
  if (!f) throw osculant::ParseError("cannot open input file: " + in.file, 0);
  std::stringstream buf;
  buf << f.rdbuf();
  return osculant::parse_parametrization(osculant::load_input_document(buf.str()));
}

void add_common(CLI::App* cmd, CommonInputs& in, bool with_format) {
  cmd->add_option("file", in.file, "input document (JSON with name/k/N/coordinates)");
  cmd->add_option("--catalog", in.catalog, "built-in variety name instead of a file");
  cmd->add_option("--seed", in.seed, "sampling seed");
  cmd->add_option("--samples", in.samples, "points per sampled rank");
  cmd->add_option("--coord-bound", in.bound, "coordinate bound for sample points");
  cmd->add_option("--mode", in.mode, "rank mode: sampled | symbolic")
      ->check(CLI::IsMember({"sampled", "symbolic"}));
  if (with_format) {
    cmd->add_option("--format", in.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
  }
}

void require_one_target(const CLI::App* cmd, const CommonInputs& in) {
  if (in.file.empty() == in.catalog.empty()) {
    throw CLI::ValidationError(cmd->get_name(), "give exactly one of <file> or --catalog");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact osculating-geometry engine"};
  app.set_version_flag("--version", osculant::kVersion);
  app.require_subcommand(1);

  CommonInputs analyze_in;
  int max_order = 3;
  CLI::App* analyze = app.add_subcommand("analyze", "full per-order report");
  add_common(analyze, analyze_in, true);
  analyze->add_option("--max-order", max_order, "highest derivative order")
      ->check(CLI::Range(1, 6));

  CommonInputs check_in;
  std::string theorem;
  int check_order = 2;
  CLI::App* check = app.add_subcommand("check", "run one structure check");
  add_common(check, check_in, true);
  check->add_option("--theorem", theorem, "A | B | chain | lemma")
      ->required()
      ->check(CLI::IsMember({"A", "B", "chain", "lemma"}));
  check->add_option("--order", check_order, "derivative order t")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "built-in varieties");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "print the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      require_one_target(analyze, analyze_in);
      osculant::Parametrization p = load_target(analyze_in);
      osculant::ReportOptions opt;
      opt.max_order = max_order;
      opt.mode = analyze_in.mode == "symbolic" ? osculant::RankMode::symbolic
                                               : osculant::RankMode::sampled;
      opt.proto.seed = analyze_in.seed;
      opt.proto.samples = analyze_in.samples;
      opt.proto.bound = analyze_in.bound;
      osculant::Report rep = osculant::run_report(p, opt);
      if (rep.immersion_warning) {
        std::cerr << "warning: differential rank below k at the sampled points\n";
      }
      if (analyze_in.format == "text") {
        std::cout << osculant::report_to_text(rep);
      } else {
        std::cout << osculant::report_to_json(rep);
      }
      return kExitOk;
    }

    if (check->parsed()) {
      require_one_target(check, check_in);
      osculant::Parametrization p = load_target(check_in);
      osculant::SampleProtocol proto{check_in.seed, check_in.samples, check_in.bound};
      osculant::RankMode mode = check_in.mode == "symbolic" ? osculant::RankMode::symbolic
                                                            : osculant::RankMode::sampled;
      osculant::TheoremVerdict v;
      if (theorem == "A") {
        v = osculant::check_theorem_A(p, check_order, mode, proto);
      } else if (theorem == "B") {
        v = osculant::check_theorem_B(p, check_order, mode, proto);
      } else if (theorem == "chain") {
        v = osculant::check_jacobian_chain(p, check_order, mode, proto);
      } else {
        v = osculant::tangent_lemma_check(p, check_order, mode, proto);
      }
      if (check_in.format == "text") {
        std::cout << "theorem " << v.theorem << " t=" << v.order << ": "
                  << (!v.applicable ? "not applicable" : (v.pass ? "pass" : "FAIL")) << "\n";
        for (const auto& [key, value] : v.inputs) {
          std::cout << "  " << key << " = " << value << "\n";
        }
        for (const std::string& n : v.notes) std::cout << "  note: " << n << "\n";
      } else {
        nlohmann::ordered_json j;
        j["schema"] = "osculant-verdict/1";
        j["theorem"] = v.theorem;
        j["order"] = v.order;
        j["applicable"] = v.applicable;
        j["pass"] = v.pass;
        nlohmann::ordered_json inputs;
        for (const auto& [key, value] : v.inputs) inputs[key] = value;
        j["inputs"] = inputs;
        j["notes"] = v.notes;
        std::cout << j.dump(2) << "\n";
      }
      return (v.applicable && !v.pass) ? kExitTheoremFail : kExitOk;
    }

    if (catalog->parsed()) {
      std::cout << osculant::catalog_listing();
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const osculant::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const osculant::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngine;
  }
  return kExitUsage;
}
