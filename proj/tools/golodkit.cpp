// golodkit command line: golodkit <command> <session> [flags]

#include <CLI11.hpp>
#include <iostream>

#include "golodkit/cli/commands.hpp"
#include "golodkit/error.hpp"

using namespace golodkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"golodkit: exact homological invariants of graded Artinian rings"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandArgs args;
  std::string session_path;
  std::string format = "json";
  std::string pqr, denominator, numerator;
  int kustin_n = -1, kustin_c = -1;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("session", session_path, "Session file")->required();
    sub->callback([&args, name] { args.command = name; });
    return sub;
  };
  auto class_flags = [&](CLI::App* sub) {
    sub->add_option("--class", args.class_kind, "Denominator class")
        ->check(CLI::IsMember({"golod", "compressed", "stretched", "kustin", "pade", "user"}));
    sub->add_option("--pqr", pqr, "P^Q_R polynomial for the compressed class");
    sub->add_option("--n", kustin_n, "Kustin parameter n");
    sub->add_option("--c", kustin_c, "Characteristic for the Kustin class");
    sub->add_option("--denominator", denominator, "Denominator for the user class");
    sub->add_option("--numerator", numerator, "Numerator for the user class");
  };

  add("invariants", "Ring invariants");
  add("hilbert", "Hilbert function");
  CLI::App* res = add("resolve", "Minimal free resolution");
  res->add_option("--module", args.module, "Module name (default k)");
  res->add_option("--steps", args.steps, "Number of steps");
  CLI::App* poi = add("poincare", "Poincare series coefficients");
  poi->add_option("--module", args.module, "Module name (default k)");
  poi->add_option("--order", args.order, "Truncation order");
  class_flags(poi);
  add("koszul", "Koszul homology ranks");
  CLI::App* tor = add("tor", "dim Tor_i(M, N)");
  tor->add_option("--left", args.left, "M")->required();
  tor->add_option("--right", args.right, "N")->required();
  tor->add_option("--max", args.max_i, "Largest i");
  CLI::App* den = add("denominator", "Denominator from a class formula");
  den->add_option("--order", args.order, "Expansion / reconstruction order");
  class_flags(den);
  CLI::App* cur = add("curvature", "Curvature estimate");
  cur->add_option("--module", args.module, "Module name (default k)");
  cur->add_option("--order", args.order, "Number of Betti numbers used");
  CLI::App* cer = add("certify", "Tor-vanishing certificate");
  cer->add_flag("--assert-generalized-golod", args.assert_generalized_golod, "Assert R is generalized Golod");
  cer->add_option("--order", args.order, "Expansion / reconstruction order");
  class_flags(cer);
  CLI::App* con = app.add_subcommand("construct", "Build a ring from named session rings");
  con->add_option("op", args.construct_op, "tensor | fiber | connsum | teter")
      ->required()
      ->check(CLI::IsMember({"tensor", "fiber", "connsum", "teter"}));
  con->add_option("session", session_path, "Session file")->required();
  con->add_option("--left", args.left, "Left ring name (teter: ring name, default the session ring)");
  con->add_option("--right", args.right, "Right ring name");
  con->callback([&args] { args.command = "construct"; });
  CLI::App* chk = add("check", "Property checks");
  chk->add_option("--lemma", args.lemma, "m4 | m5 | 240601 | sandwich | montano-lyle")
      ->required()
      ->check(CLI::IsMember({"m4", "m5", "240601", "sign", "sandwich", "montano-lyle"}));
  chk->add_option("--order", args.order, "Truncation order");
  class_flags(chk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  if (!pqr.empty()) args.params["pqr"] = pqr;
  if (!denominator.empty()) args.params["denominator"] = denominator;
  if (!numerator.empty()) args.params["numerator"] = numerator;
  if (kustin_n >= 0) args.params["n"] = std::to_string(kustin_n);
  if (kustin_c >= 0) args.params["c"] = std::to_string(kustin_c);

  Outcome out;
  try {
    const Session s = load_session(session_path);
    out = run(args, s);
  } catch (const std::exception& e) {
    out = error_outcome(args, session_path, e);
  }
  if (format == "text") {
    std::cout << render_text(out.report);
  } else {
    std::cout << out.report.dump(2) << "\n";
  }
  if (out.exit_code != kOk && out.report.contains("error")) {
    std::cerr << "golodkit: " << out.report["error"]["message"].get<std::string>() << "\n";
  }
  return out.exit_code;
}
