#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phm/driver.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCertificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

int run_outcome(const phm::Outcome& outcome) {
  std::cout << phm::render_outcome_jsonl(outcome);
  std::cerr << phm::human_summary(outcome);
  return outcome.pass() ? kExitPass : kExitCertificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phm: exact certification of Hopf group-coalgebras, comodule Poisson algebras "
               "and the fundamental isomorphism of Poisson Hopf modules"};
  app.require_subcommand(1);

  std::string bundle_path;
  auto* validate = app.add_subcommand("validate", "run all applicable axiom checkers");
  validate->add_option("bundle", bundle_path, "bundle file")->required();

  auto* coinv = app.add_subcommand("coinvariants",
                                   "print dimensions and bases of M^{coH}, M^A, M^{AcoH} and B");
  coinv->add_option("bundle", bundle_path, "bundle file")->required();

  auto* fundamental = app.add_subcommand("fundamental", "emit the isomorphism certificate");
  fundamental->add_option("bundle", bundle_path, "bundle file")->required();

  auto* lemmas = app.add_subcommand("lemmas", "run the lemma-level certification suite");
  lemmas->add_option("bundle", bundle_path, "bundle file")->required();

  auto* fixtures = app.add_subcommand("fixtures", "fixture catalog");
  std::string fixture_name;
  std::string out_path;
  auto* fx_export = fixtures->add_subcommand("export", "write a fixture bundle file");
  fx_export->add_option("name", fixture_name, "fixture name (F1..F4)")->required();
  fx_export->add_option("-o,--output", out_path, "output path (default <name>.bundle.json)");
  fixtures->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fx_export) {
      const phm::Bundle b = phm::fixture(fixture_name);
      const std::string path = out_path.empty() ? fixture_name + ".bundle.json" : out_path;
      phm::write_bundle(b, path);
      std::cerr << "wrote " << path << "\n";
      return kExitPass;
    }
    phm::Bundle bundle;
    try {
      bundle = phm::parse_bundle(bundle_path);
    } catch (const phm::Error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitParse;
    }
    if (*validate) return run_outcome(phm::validate_bundle(bundle));
    if (*coinv) {
      std::cout << phm::coinvariants_listing(bundle);
      return kExitPass;
    }
    if (*fundamental) return run_outcome(phm::fundamental_outcome(bundle));
    if (*lemmas) return run_outcome(phm::lemma_suite(bundle));
  } catch (const phm::UnknownFixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const phm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificationFailure;
  }
  return kExitUsage;
}
