// galcoh command-line front end.
//
// Exit codes: 0 success, 1 engine error, 2 parse error (command line or scenario text).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "galcoh/errors.hpp"
#include "galcoh/report.hpp"
#include "galcoh/scenario.hpp"

namespace {

struct Common {
  std::size_t max_degree = 3;
  std::size_t size_cap = std::size_t{1} << 20;
  std::string format = "text";
  bool verbose = false;
  std::string report_path;
};

struct OneShot {
  std::string group = "klein_four";
  std::string lattice = "trivial 1";
  std::vector<std::string> gens;
  std::string torus = "norm_one";
  int degree = 1;
  std::vector<std::string> places;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw galcoh::Error("cannot read scenario file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string group_section(const OneShot& o) { return "[group]\nkind = " + o.group + "\n"; }

std::string lattice_section(const OneShot& o) {
  std::string s = "[lattice M]\nkind = " + o.lattice + "\n";
  for (const auto& g : o.gens) s += "gen = " + g + "\n";
  return s;
}

std::string places_section(const OneShot& o) {
  std::string s = "[places omega]\n";
  for (const auto& p : o.places) s += "place = " + p + "\n";
  return s;
}

int emit(const galcoh::Scenario& sc, const Common& c) {
  galcoh::ReportOptions opt;
  opt.verbose_witnesses = c.verbose;
  const auto text =
      galcoh::run(sc, opt).render(c.format == "machine" ? galcoh::ReportFormat::Machine : galcoh::ReportFormat::Text);
  if (c.report_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(c.report_path, std::ios::binary);
  if (!out) throw galcoh::Error("cannot write report '" + c.report_path + "'");
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Galois-module cohomology workbench"};
  app.set_version_flag("--version", galcoh::engine_version());
  app.require_subcommand(1);

  Common common;
  app.add_option("--max-degree", common.max_degree, "Largest cohomological degree")->capture_default_str();
  app.add_option("--size-cap", common.size_cap, "Largest coboundary matrix (rows)")->capture_default_str();
  app.add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_flag("--verbose-witnesses", common.verbose, "Print witness cocycles");
  app.add_option("--report", common.report_path, "Write the report here instead of standard output");

  OneShot one;
  std::string scenario_path;
  auto* scenario = app.add_subcommand("scenario", "Run a scenario file or the built-in scenario");
  scenario->require_subcommand(1);
  auto* scenario_run = scenario->add_subcommand("run", "Run a scenario file");
  scenario_run->add_option("path", scenario_path, "Scenario file")->required();
  auto* paper = scenario->add_subcommand("paper-biquadratic", "Run the built-in Klein four scenario");

  auto add_group = [&](CLI::App* s) {
    s->add_option("--group", one.group, "cyclic <n> | klein_four | product cyclic <n> cyclic <m>")
        ->capture_default_str();
  };
  auto add_lattice = [&](CLI::App* s) {
    s->add_option("--lattice", one.lattice, "trivial <r> | regular | permutation <elements> | norm_quotient | "
                                            "from_matrices")
        ->capture_default_str();
    s->add_option("--gen", one.gens, "Row-major matrix per group generator (from_matrices)");
  };
  auto add_places = [&](CLI::App* s) { s->add_option("--place", one.places, "<label> : <element indices>"); };

  auto* cohomology = app.add_subcommand("cohomology", "H^i(G, M); degrees -1 and 0 give Tate groups");
  add_group(cohomology);
  add_lattice(cohomology);
  cohomology->add_option("--degree", one.degree, "Degree")->capture_default_str();
  bool tate0 = false;
  cohomology->add_flag("--tate", tate0, "Use Tate cohomology in degree 0");

  auto* flasque = app.add_subcommand("flasque", "Flasque test over every subgroup");
  add_group(flasque);
  add_lattice(flasque);

  auto* resolution = app.add_subcommand("resolution", "Flasque resolution and Brauer invariant of a torus");
  add_group(resolution);
  resolution->add_option("--torus", one.torus, "norm_one | multinorm <H1;H2;...> | quasi_trivial <H1;...>")
      ->capture_default_str();

  auto* sha = app.add_subcommand("sha", "Sha kernel for a place family");
  add_group(sha);
  add_lattice(sha);
  sha->add_option("--degree", one.degree, "Degree")->capture_default_str();
  add_places(sha);

  auto* coverage = app.add_subcommand("coverage", "Cyclic subgroups missed by a place family");
  add_group(coverage);
  add_places(coverage);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  galcoh::CochainLimits limits;
  limits.max_degree = common.max_degree;
  limits.size_cap = common.size_cap;

  try {
    std::string text, name;
    if (paper->parsed()) {
      return emit(galcoh::builtin_paper_biquadratic(limits), common);
    } else if (scenario_run->parsed()) {
      text = read_file(scenario_path);
      name = scenario_path;
    } else if (cohomology->parsed()) {
      name = "cohomology";
      const bool tate = one.degree < 0 || tate0;
      text = group_section(one) + lattice_section(one) + "[compute]\n" + (tate ? "tate " : "h ") +
             std::to_string(one.degree) + " M\n";
    } else if (flasque->parsed()) {
      name = "flasque";
      text = group_section(one) + lattice_section(one) + "[compute]\nflasque M\n";
    } else if (resolution->parsed()) {
      name = "resolution";
      text = group_section(one) + "[torus T]\nkind = " + one.torus + "\n[compute]\nresolution T\nbr T\n";
    } else if (sha->parsed()) {
      name = "sha";
      text = group_section(one) + lattice_section(one) + places_section(one) + "[compute]\nsha " +
             std::to_string(one.degree) + " M omega\n";
    } else if (coverage->parsed()) {
      name = "coverage";
      text = group_section(one) + places_section(one) + "[compute]\ncoverage omega\n";
    }
    return emit(galcoh::parse_scenario(text, name, limits), common);
  } catch (const galcoh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const galcoh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
