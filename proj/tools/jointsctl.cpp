// jointsctl: command line front end for the joints library.
//
// Exit codes: 0 success, 1 usage/parse/engine error, 2 verification failure.

#include <iostream>

#include "CLI11.hpp"
#include "joints/error.hpp"
#include "joints/io.hpp"
#include "joints/run.hpp"

namespace {

using joints::kExitOk;
using joints::kExitUsage;

void add_common(CLI::App* sub, joints::RunOptions& opt, std::string& output) {
  sub->add_option("--gen", opt.gen, "Generator string, e.g. grid:5, bush:20:seed1");
  sub->add_option("--input", opt.input, "Input configuration (JSON)");
  sub->add_option("--output", output, "Write the report here instead of stdout");
  sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", opt.seed, "Seed for generators without one and for seeded engines");
  sub->add_option("--degree", opt.degree, "Partition degree budget d");
  sub->add_option("--max-iter", opt.max_iter, "Ham-sandwich iteration cap per step");
  sub->add_option("--k", opt.k, "Line-count threshold (rich points, dyadic class)");
  sub->add_option("--n", opt.n, "Multiplicity threshold for the dyadic class report");
  sub->add_flag("--verify", opt.verify, "Cross-check results against brute-force references");
  sub->add_flag("--timings", opt.timings, "Include wall-clock timings in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joints, incidences and polynomial partitioning experiments"};
  app.set_version_flag("--version", joints::tool_version());
  app.require_subcommand(1);

  joints::RunOptions opt;
  std::string output;
  for (const char* name : {"joints", "partition", "curves", "incidences", "generate"}) {
    add_common(app.add_subcommand(name), opt, output);
  }
  app.get_subcommand("joints")->description("Joint detection, multiplicities and bound reports");
  app.get_subcommand("partition")->description("Iterated ham-sandwich partition of a point set");
  app.get_subcommand("curves")->description("Joints of parametrised polynomial curves");
  app.get_subcommand("incidences")->description("Incidence counts and rich-point reports");
  app.get_subcommand("generate")->description("Emit a generated configuration as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    const auto result = joints::run(opt);
    if (output.empty()) {
      std::cout << result.text;
    } else {
      joints::write_text_file(output, result.text);
    }
    if (result.verification_failed) {
      std::cerr << "verification failed; see the report's verification section\n";
    }
    return joints::exit_code(result);
  } catch (const joints::Error& e) {
    std::cerr << "jointsctl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "jointsctl: " << e.what() << "\n";
    return kExitUsage;
  }
}
