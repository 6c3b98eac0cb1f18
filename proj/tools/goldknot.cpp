#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "goldknot/commands.hpp"
#include "goldknot/error.hpp"
#include "goldknot/io.hpp"

using namespace goldknot;

int main(int argc, char** argv) {
  CLI::App app{"Goldman-type Lie algebras of fibered knots"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  std::vector<std::string> model_files;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", config.seed, "Seed for randomized suites");
  app.add_option("--orbit-bound", config.orbit_bound, "Growth certificate length for t-orbit search")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs, "Worker threads, 0 = runtime default")->check(CLI::NonNegativeNumber);
  app.add_option("--model", model_files, "Register a fibered model from a JSON file")->check(CLI::ExistingFile);

  std::string knot_text;
  std::optional<int> strands;
  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("knot", knot_text, "Catalog name, custom model name or braid word")->required();
    sub->add_option("--strands", strands, "Strand count for a braid word")->check(CLI::PositiveNumber);
  };

  auto* knot_cmd = app.add_subcommand("knot", "Components, genus and Alexander polynomial");
  add_knot(knot_cmd);
  auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial by Fox calculus");
  add_knot(alexander_cmd);
  auto* presentation_cmd = app.add_subcommand("presentation", "Knot group presentation");
  add_knot(presentation_cmd);
  bool cover = false;
  presentation_cmd->add_flag("--cover", cover, "Leveled presentation of the infinite cyclic cover");

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two classes");
  add_knot(bracket_cmd);
  std::string w1;
  std::string w2;
  std::string quotient = "none";
  bracket_cmd->add_option("x", w1, "First word, e.g. a1.B1")->required();
  bracket_cmd->add_option("y", w2, "Second word")->required();
  bracket_cmd->add_option("--quotient", quotient, "none, pi or homology")
      ->check(CLI::IsMember({"none", "pi", "homology"}));

  auto* table_cmd = app.add_subcommand("table", "All brackets among classes up to a length");
  add_knot(table_cmd);
  int max_length = 2;
  table_cmd->add_option("--max-length", max_length, "Longest class length")->check(CLI::PositiveNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "Seeded invariant suites");
  bool mutate = false;
  selftest_cmd->add_flag("--mutate-sign", mutate, "Test hook: break antisymmetry on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::kUsage);
  }
  config.format = format == "text" ? OutputFormat::kText : OutputFormat::kJson;

  try {
    std::vector<std::shared_ptr<const FiberedKnotModel>> custom;
    for (const auto& path : model_files) custom.push_back(std::make_shared<FiberedKnotModel>(load_model(path)));
    if (selftest_cmd->parsed()) return cmd_selftest(config, mutate, std::cout);
    const KnotHandle knot = resolve_knot(knot_text, strands, custom);
    if (knot_cmd->parsed()) return cmd_knot_info(config, knot, std::cout);
    if (alexander_cmd->parsed()) return cmd_alexander(config, knot, std::cout);
    if (presentation_cmd->parsed()) return cmd_presentation(config, knot, cover, std::cout);
    if (table_cmd->parsed()) return cmd_table(config, knot, max_length, std::cout);
    const std::map<std::string, Quotient> quotients{
        {"none", Quotient::kNone}, {"pi", Quotient::kPi}, {"homology", Quotient::kHomology}};
    return cmd_bracket(config, knot, w1, w2, quotients.at(quotient), std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kUsage);
  }
}
