// Command-line front end: verify, orbit, invariants, refactor, entropy.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration or usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ybmaps/cli.hpp"

namespace {

constexpr const char* state_help =
    "Initial state literal. Sites are separated by ';' and fields by ','.\n"
    "  dressing: \"(f1,beta1;f2,beta2;...)\"        e.g. \"(1,3;2,1)\"\n"
    "  kdv:      \"([xi],[eta],lambda;...)\"       e.g. \"([1,0],[1,1],2;[0,1],[1,1],1)\"\n"
    "  scalar:   \"(x1;x2;...)\"\n"
    "Rationals are written p or p/q. Without --state a state is sampled from --seed.";

void add_common(CLI::App* sub, ybmaps::cli::RunConfig& cfg, std::string& format) {
  sub->add_option("--map", cfg.map, "adler, kdv, lyubashenko, identity, permutation, sumleft")
      ->capture_default_str();
  sub->add_option("--family", cfg.family, "Lax family: dressing or kdv (default: from the map)");
  sub->add_option("--n", cfg.n, "number of sites (default depends on the subcommand)");
  sub->add_option("--d", cfg.d, "matrix dimension of kdv sites")->capture_default_str();
  sub->add_option("--generator", cfg.generator, "index i of the monodromy map T_i")->capture_default_str();
  sub->add_option("--steps", cfg.steps, "orbit length in T_i applications");
  sub->add_option("--samples", cfg.samples, "number of random samples")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for all random sampling")->capture_default_str();
  sub->add_option("--state", cfg.state, state_help);
  sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", cfg.output, "write the result document here instead of stdout");
  sub->add_flag("--no-timestamp", "omit the timestamp so repeated runs are byte-identical");
  sub->add_option("--threads", cfg.threads, "worker threads for sample batches")->capture_default_str();
  sub->add_option("--p", cfg.p, "lyubashenko p(z), coefficients lowest degree first")->capture_default_str();
  sub->add_option("--q", cfg.q, "lyubashenko q(z), coefficients lowest degree first")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace yc = ybmaps::cli;
  CLI::App app{"Yang-Baxter maps, monodromy maps and their spectral invariants, in exact rational arithmetic"};
  app.set_version_flag("--version", std::string(yc::tool_version));
  app.require_subcommand(1);

  yc::RunConfig cfg;
  std::string format = "json";
  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"verify", "check a relation on seeded random samples"},
      {"orbit", "iterate a monodromy map T_i"},
      {"invariants", "characteristic polynomial of the monodromy matrix along an orbit"},
      {"refactor", "check the refactorization identity on random pairs"},
      {"entropy", "height growth along an orbit"},
  };
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, cfg, format);
    if (std::string(e.name) == "verify")
      sub->add_option("--relation", cfg.relation,
                      "yang-baxter, reversibility, commutativity, product-identity, braid, involution, "
                      "monodromy-converse, yb-iff-commute")
          ->capture_default_str();
    if (std::string(e.name) == "refactor")
      sub->add_option("--orientation", cfg.orientation, "swapped: A(x~)A(y~)=A(y)A(x); mirrored: A(y~)A(x~)=A(x)A(y)")
          ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    cfg.timestamp = sub->count("--no-timestamp") == 0;
  }
  cfg.format = format == "csv" ? yc::Format::csv : yc::Format::json;

  yc::ResultDocument doc;
  try {
    doc = yc::run(cfg);
  } catch (const yc::ConfigError& e) {
    std::cerr << "ybmaps: " << e.what() << "\n";
    return 2;
  } catch (const ybmaps::Error& e) {
    std::cerr << "ybmaps: " << e.what() << "\n";
    return 2;
  }

  const std::string text = yc::render(doc, cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "ybmaps: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << text;
  }
  return doc.exit_code();
}
