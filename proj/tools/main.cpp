#include "commands.hpp"
#include "spec_file.hpp"

#include "qgcat/error.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParse = 2;
constexpr int kCutoff = 3;
constexpr int kNotApplicable = 4;

struct Common {
  std::string spec_path;
  std::string json_out;
  qgcat::cli::SpecOverrides overrides;
  int N = 0;
  int cutoff = -1;
  int work = -1;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--spec", c.spec_path, "Spec file (JSON object syntax)");
  sub->add_option("--preset", c.overrides.preset, "Named generator set: O+, U+, S+, B+");
  sub->add_option("--N", c.N, "Matrix size, overriding the spec file");
  sub->add_option("--cutoff", c.cutoff, "Report cutoff L");
  sub->add_option("--work", c.work, "Work cutoff (default L + 2)");
  sub->add_option("--json", c.json_out, "Write the report to this file instead of stdout");
  sub->add_flag("--timing", c.timing, "Print the elapsed time to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qgcat::cli;
  CLI::App app{"qgcat: representation categories of compact matrix quantum groups"};
  app.require_subcommand(1);

  Common common;
  CommandArgs args;
  std::map<CLI::App*, std::function<CommandResult(const QGSpec&)>> run;

  auto* dims = app.add_subcommand("dims", "Fixed-point dimensions of every word up to the cutoff");
  add_common(dims, common);
  run[dims] = [](const QGSpec& s) { return cmd_dims(s); };

  auto* mor = app.add_subcommand("mor", "Dimension and basis of C(w1, w2)");
  add_common(mor, common);
  mor->add_option("w1", args.w1, "Domain word ('-' for empty)")->required();
  mor->add_option("w2", args.w2, "Codomain word ('-' for empty)")->required();
  run[mor] = [&](const QGSpec& s) { return cmd_mor(s, args); };

  auto* degree = app.add_subcommand("degree", "Degree-of-reflection certificate");
  add_common(degree, common);
  run[degree] = [](const QGSpec& s) { return cmd_degree(s); };

  auto* check = app.add_subcommand("check", "Check a predicate up to the cutoff");
  add_common(check, common);
  check->add_option("--predicate", args.predicate, "global, inversion or alternating")->required();
  run[check] = [&](const QGSpec& s) { return cmd_check(s, args); };

  auto* complexify = app.add_subcommand("complexify", "Tensor or free complexification");
  add_common(complexify, common);
  complexify->add_option("--mode", args.mode, "tensor or free")->required();
  complexify->add_option("--modulus", args.moduli, "k for tensor, l for free (default 0)");
  complexify->add_option("--with-odd-witness", args.odd_witness, "Extra generator words for degree-1 inputs");
  run[complexify] = [&](const QGSpec& s) { return cmd_complexify(s, args); };

  auto* glue = app.add_subcommand("glue", "Glue an extended spec, or unglue maximally and glue back");
  add_common(glue, common);
  glue->add_option("--modulus", args.moduli, "Gluing modulus for plain specs (default 2)");
  glue->add_option("--squares", args.squares, "Square cutoff (default L)");
  run[glue] = [&](const QGSpec& s) { return cmd_glue(s, args); };

  auto* unglue = app.add_subcommand("unglue", "Maximal or canonical ungluing");
  add_common(unglue, common);
  unglue->add_option("--mode", args.mode, "maximal or canonical")->required();
  unglue->add_option("--modulus", args.moduli, "Modulus for maximal ungluing (default 2)");
  unglue->add_option("--squares", args.squares, "Square cutoff (default L)");
  unglue->add_option("--tensor", args.tensor, "Tensor-complexify the input with this modulus first");
  run[unglue] = [&](const QGSpec& s) { return cmd_unglue(s, args); };

  auto* verify = app.add_subcommand("verify", "Verify a structure theorem instance: A, B, C, D or E");
  add_common(verify, common);
  verify->add_option("theorem", args.theorem, "A, B, C, D or E")->required();
  verify->add_option("--modulus", args.moduli, "Moduli to test (theorem defaults otherwise)");
  verify->add_option("--squares", args.squares, "Square cutoff for theorem E (default L)");
  run[verify] = [&](const QGSpec& s) { return cmd_verify(s, args); };

  auto* relations = app.add_subcommand("relations", "Polynomial relations of a basis of C(w1, w2)");
  add_common(relations, common);
  relations->add_option("w1", args.w1, "Domain word ('-' for empty)")->required();
  relations->add_option("w2", args.w2, "Codomain word ('-' for empty)")->required();
  run[relations] = [&](const QGSpec& s) { return cmd_relations(s, args); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (common.N > 0) common.overrides.N = common.N;
    if (common.cutoff >= 0) common.overrides.report_cutoff = common.cutoff;
    if (common.work >= 0) common.overrides.work_cutoff = common.work;
    const QGSpec spec = load_spec(common.spec_path, common.overrides);
    const CommandResult result = run.at(chosen)(spec);
    const std::string text = make_report(chosen->get_name(), spec, result).dump(2) + "\n";
    if (common.json_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(common.json_out, std::ios::binary);
      if (!out) throw qgcat::ParseError("cannot write " + common.json_out);
      out << text;
    }
    if (common.timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      std::cerr << "elapsed " << dt.count() << " s\n";
    }
    return result.failed ? kFailure : kOk;
  } catch (const qgcat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const qgcat::ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kParse;
  } catch (const qgcat::CutoffError& e) {
    std::cerr << "cutoff error: " << e.what() << "\n";
    return kCutoff;
  } catch (const qgcat::NotApplicable& e) {
    std::cerr << "not_applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
