// Command-line front end: analyze extension-spec files, sweep the group
// catalog, verify the coring construction, list builtins.
//
// Exit codes: 0 clean run, 2 input error, 3 internal self-check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringext/report.hpp"

namespace {

using namespace ringext;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParsedInput load(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) {
    Fixture f = make_fixture(builtin);
    ParsedInput in;
    in.kind = ParsedInput::Kind::kBuiltin;
    in.name = f.name;
    in.ext = std::move(f.ext);
    in.hints = std::move(f.hints);
    return in;
  }
  if (path.empty()) throw input_error("need an input file or --builtin");
  return parse_extension_spec(slurp(path));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(const std::string& body, const Timer& t) {
  std::cout << body;
  std::cout << "---timing\nelapsed-ms " << t.ms() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for finite-dimensional ring extensions"};
  app.require_subcommand(1);

  std::string path, builtin, format = "human";
  bool check_witness = false;
  int max_order = 12;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "classify an extension");
  analyze_cmd->add_option("input", path, "spec file (or - for stdin)");
  analyze_cmd->add_option("--builtin", builtin, "builtin fixture id (E1..E6)");
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));
  analyze_cmd->add_flag("--check-witness", check_witness,
                        "re-verify witnesses from the serialized report");

  CLI::App* sweep_cmd = app.add_subcommand("sweep-groups",
                                           "subgroup-pair sweep over the catalog");
  sweep_cmd->add_option("--max-order", max_order);
  sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  CLI::App* coring_cmd = app.add_subcommand("verify-coring",
                                            "itemized coring axiom verification");
  coring_cmd->add_option("input", path, "spec file (or - for stdin)");
  coring_cmd->add_option("--builtin", builtin, "builtin fixture id (E1..E6)");
  coring_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  app.add_subcommand("catalog", "list builtin fixtures");

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  try {
    if (analyze_cmd->parsed()) {
      ParsedInput in = load(path, builtin);
      AnalyzeReport rep = analyze(in);
      if (check_witness) {
        std::string body = serialize_machine(rep);
        rep.witness_recheck = recheck_witnesses(body, in.ext);
      }
      emit(format == "machine" ? serialize_machine(rep) : render_human(rep), timer);
    } else if (sweep_cmd->parsed()) {
      SweepResult res = sweep_groups(max_order);
      emit(format == "machine" ? serialize_sweep_machine(res, max_order)
                               : render_sweep_human(res, max_order),
           timer);
    } else if (coring_cmd->parsed()) {
      ParsedInput in = load(path, builtin);
      CoringVerifyReport rep = verify_coring(in);
      emit(format == "machine" ? serialize_coring_machine(rep)
                               : render_coring_human(rep),
           timer);
    } else {
      std::cout << catalog_text();
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const selfcheck_error& e) {
    std::cerr << "internal self-check failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
