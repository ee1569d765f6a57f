// Command-line front end: run the verification pipeline per case (or all
// four), and check plane-point configuration files against the CF systems.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "threefold/cf.hpp"
#include "threefold/errors.hpp"
#include "threefold/pipeline.hpp"

using namespace threefold;

namespace {

constexpr int kExitCertificate = 2;
constexpr int kExitResource = 3;
constexpr int kExitBadArgs = 4;

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

int do_run(const std::string& case_arg, uint32_t prime, uint64_t seed, bool heavy,
           int retries, const std::string& json_path, const std::string& bundle_dir,
           bool quiet) {
  for (const auto& w : prime_warnings(prime)) std::cerr << "warning: " << w << "\n";

  std::vector<PipelineReport> reports;
  if (case_arg.empty()) {
    reports = run_all(prime, seed, heavy, retries);
  } else {
    reports.push_back(run_case(case_from_name(case_arg), prime, seed, heavy, retries));
  }

  if (!bundle_dir.empty()) {
    for (const auto& rep : reports) {
      BaseLocusBundle b = build_case(rep.case_id, prime, seed, retries);
      save_bundle(b, (std::filesystem::path(bundle_dir) / case_name(rep.case_id)).string());
    }
  }

  if (!json_path.empty()) {
    if (reports.size() == 1) {
      write_file(json_path, report_to_json(reports[0]));
    } else {
      std::filesystem::create_directories(json_path);
      for (const auto& rep : reports)
        write_file((std::filesystem::path(json_path) / (case_name(rep.case_id) + ".json"))
                       .string(),
                   report_to_json(rep));
    }
  }

  if (!quiet) {
    if (reports.size() == 1) {
      const auto& rep = reports[0];
      std::cout << variety_name(rep.case_id) << ": "
                << (rep.overall_pass ? "pass" : "FAIL") << "\n";
      for (const auto& c : rep.certificates)
        std::cout << "  [" << (c.pass ? "ok" : "XX") << "] " << c.name << ": expected "
                  << c.expected << ", got " << c.actual << "\n";
      for (const auto& e : rep.map.errors) std::cout << "  error: " << e << "\n";
    } else {
      std::cout << report_table(reports);
    }
  }

  for (const auto& rep : reports)
    if (!rep.overall_pass) return kExitCertificate;
  return 0;
}

int do_check_config(const std::string& path, bool quiet) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kExitBadArgs;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  PlaneConfig config = parse_plane_config(buf.str());
  CFReport rep = check_cf(config);
  if (!quiet) {
    std::cout << cf_system_name(config.system) << ": "
              << (rep.passed ? "pass" : "FAIL") << "\n";
    for (const auto& v : rep.violations) {
      std::cout << "  violation " << v.condition << " witness {";
      for (size_t i = 0; i < v.witness.size(); ++i)
        std::cout << (i ? "," : "") << config.pts[v.witness[i]].label;
      std::cout << "}";
      if (!v.section.empty()) {
        std::cout << " section [";
        for (size_t i = 0; i < v.section.size(); ++i)
          std::cout << (i ? "," : "") << v.section[i];
        std::cout << "]";
      }
      std::cout << "\n";
    }
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  }
  if (rep.passed &&
      (config.system == CFSystem::CF3 || config.system == CFSystem::CF4)) {
    try {
      CensusResult census = census_lines_conics(config);
      if (!quiet) {
        if (config.system == CFSystem::CF3)
          std::cout << "  census: " << census.pair_lines << " lines\n";
        else
          std::cout << "  census: " << census.total() << " conics ("
                    << census.exceptional << " exceptional + " << census.line_transforms
                    << " lines + " << census.five_point_conics
                    << " five-point conics)\n";
      }
    } catch (const hypotheses_error& e) {
      if (!quiet) std::cout << "  census skipped: " << e.what() << "\n";
    }
  }
  return rep.passed ? 0 : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of base loci of birational projections"};
  app.require_subcommand(1);

  std::string case_arg, json_path, bundle_dir, config_path;
  uint32_t prime = kDefaultPrime;
  uint64_t seed = 1;
  bool heavy = false, quiet = false;
  int retries = 5;

  auto* run = app.add_subcommand("run", "build and verify one case or all four");
  run->add_option("--case", case_arg,
                  "segre | delpezzo | castelnuovo | bordiga (default: all)");
  run->add_option("--prime", prime, "field characteristic (default 32003)");
  run->add_option("--seed", seed, "master seed (default 1)");
  run->add_flag("--heavy", heavy, "include the sectional-curve checks");
  run->add_option("--retries", retries, "per-stage retry budget (default 5)");
  run->add_option("--json", json_path, "write JSON report(s) to this file/directory");
  run->add_option("--bundle-dir", bundle_dir, "serialize base-locus bundles here");
  run->add_flag("--quiet", quiet, "suppress the summary output");

  auto* check = app.add_subcommand("check-config", "run the CF checks on a point file");
  check->add_option("file", config_path, "plane configuration file")->required();
  check->add_flag("--quiet", quiet, "suppress the report output");

  try {
    app.parse(argc, argv);
    if (run->parsed())
      return do_run(case_arg, prime, seed, heavy, retries, json_path, bundle_dir, quiet);
    return do_check_config(config_path, quiet);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadArgs;
  } catch (const bad_arguments_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const certificate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
