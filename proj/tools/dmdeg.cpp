// Command-line front end: one subcommand per computation on a problem file.

#include "dmdeg/dmdeg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

enum Exit { kOk = 0, kError = 1, kParse = 2, kVerify = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidegrees of bifiltered D-modules and A-hypergeometric systems"};
  app.require_subcommand(1);
  bool json = false, show_resolution = false;
  std::string order_spec;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--order", order_spec, "tie-break order, e.g. 'grevlex' or 'weight(...);lex'");
  app.add_flag("--show-resolution", show_resolution, "build and print the bifiltered resolution");

  using Runner = std::function<dmdeg::Report(const dmdeg::Job&, const dmdeg::RunOptions&)>;
  const std::vector<std::tuple<std::string, std::string, Runner>> commands{
      {"multidegree", "K-polynomial, codimension and multidegree of a problem",
       [](const dmdeg::Job& j, const dmdeg::RunOptions& o) { return dmdeg::run_multidegree(j, o); }},
      {"gkz", "multidegree of M_A(beta) with volume, generic prediction and Cohen-Macaulay test", dmdeg::run_gkz},
      {"toric", "toric ideal I_A and the Cohen-Macaulay test", dmdeg::run_toric},
      {"volume", "normalized volume of conv(0, columns of A)", dmdeg::run_volume},
      {"resolve", "bifiltered free resolution, verified, with its K-polynomial", dmdeg::run_resolve},
      {"sweep", "multidegrees over a beta_list, with exceptional points flagged", dmdeg::run_sweep},
  };
  std::map<std::string, std::string> files;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help, run] : commands) {
    subs[name] = app.add_subcommand(name, help);
    subs[name]->add_option("file", files[name], "problem file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  for (const auto& [name, help, run] : commands) {
    if (!subs[name]->parsed()) continue;
    try {
      dmdeg::Job job = dmdeg::parse_problem(read_file(files[name]));
      dmdeg::RunOptions opt;
      opt.show_resolution = show_resolution;
      if (!order_spec.empty()) {
        try {
          opt.order = dmdeg::parse_order_spec(order_spec, job.vars);
        } catch (const dmdeg::ParseError& e) {
          std::cerr << "--order: column " << e.column() << ": " << e.message() << '\n';
          return kParse;
        }
      }
      dmdeg::Report r = run(job, opt);
      if (json)
        std::cout << r.data.dump(2) << '\n';
      else
        std::cout << r.text;
      return r.ok ? kOk : kVerify;
    } catch (const InputError& e) {
      std::cerr << e.what() << '\n';
      return kParse;
    } catch (const dmdeg::ParseError& e) {
      std::cerr << files[name] << ": " << e.what() << '\n';
      return kParse;
    } catch (const dmdeg::InvalidInstance& e) {
      std::cerr << files[name] << ": invalid instance: " << e.what() << '\n';
      return kParse;
    } catch (const dmdeg::VerificationFailure& e) {
      std::cerr << "verification failure: " << e.what() << '\n';
      return kVerify;
    } catch (const dmdeg::GroebnerError& e) {
      std::cerr << "verification failure: " << e.what() << '\n';
      return kVerify;
    } catch (const dmdeg::ResolutionError& e) {
      std::cerr << "verification failure: " << e.what() << '\n';
      return kVerify;
    } catch (const std::invalid_argument& e) {
      std::cerr << files[name] << ": " << e.what() << '\n';
      return kParse;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kError;
    }
  }
  return kError;
}
