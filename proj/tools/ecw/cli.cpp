#include "cli.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"

#include "commands.hpp"
#include "config_io.hpp"
#include "ecw/watkins.hpp"

namespace ecw::cli {
namespace {

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank bounds, Watkins checks and counting experiments for elliptic curve families", "ecw"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::map<std::string, std::string> overrides;
  app.add_option("--config", config_path, "key=value configuration file");
  for (const char* key : {"policy", "nu2-manin", "real-place", "depth-cap-extra", "workers", "seed", "cond2-single-prime"}) {
    app.add_option_function<std::string>(
        std::string("--") + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
        std::string("Override config key ") + key);
  }

  EnumerateOptions en;
  auto* enumerate = app.add_subcommand("enumerate", "List family members up to a height as CSV");
  enumerate->add_option("--family", en.family, "e2, e3, e5, e7, type1 or twist-e0")->required()
      ->check(CLI::IsMember(kFamilies));
  enumerate->add_option("--height", en.height, "Height bound X")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", en.out_path, "Write to this file instead of standard output");
  add_format(enumerate, en.format);

  DescentOptions de;
  auto* descent = app.add_subcommand("descent", "2-isogeny descent on y^2 = x^3 + a x^2 + b x");
  descent->add_option("--a", de.a)->required();
  descent->add_option("--b", de.b)->required();

  DescentOptions d3;
  auto* descent3 = app.add_subcommand("descent3", "3-isogeny descent on y^2 = x^3 + a");
  descent3->add_option("--a", d3.a)->required();

  WatkinsOptions wa;
  auto* watkins = app.add_subcommand("watkins", "M-Watkins verdicts across a family");
  watkins->add_option("--family", wa.family)->required()->check(CLI::IsMember(kFamilies));
  watkins->add_option("--height,--range", wa.height, "Height bound (|D| bound for twist-e0)")->required()
      ->check(CLI::PositiveNumber);
  watkins->add_option("--M", wa.M, "Watkins excess M");
  watkins->add_option("--summary", wa.summary_path, "Also write the JSON summary to this file");
  add_format(watkins, wa.format);

  StatsOptions st;
  auto* stats = app.add_subcommand("stats", "Counting and averaging experiments");
  stats->add_option("experiment", st.experiment, "Experiment name")->required()->check(CLI::IsMember(kExperiments));
  stats->add_option("--heights,--height", st.heights, "Comma-separated heights")->delimiter(',');
  stats->add_option("--ell", st.ell, "Torsion order for count-family");
  stats->add_option("--safety", st.safety, "Parameter window scale for count-family");
  stats->add_option("--precision", st.precision, "Decimal digits for volume");
  stats->add_option("--poly", st.poly, "Coefficients c0,c1,... for normal-order and roots-mod");
  stats->add_option("--pmax", st.pmax, "Largest prime for roots-mod and avg-frobenius");
  stats->add_flag("--square", st.square, "Count roots modulo p^2");
  stats->add_option("--exclude", st.exclude, "Excluded primes for normal-order")->delimiter(',');
  stats->add_option("--family", st.family, "e5, e7 or e3poly for avg-frobenius");
  stats->add_flag("--cross-check", st.cross_check, "Run full descent on certified density pairs");
  add_format(stats, st.format);

  VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "Check a label,A,B,rank,modular_degree dataset");
  verify->add_option("--dataset", ve.dataset)->required();
  verify->add_option("--M", ve.M);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  const Streams io{out, err};
  try {
    Config cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config '" + config_path + "'");
      load_config(cfg, in);
    }
    for (const auto& [key, value] : overrides) apply_setting(cfg, key, value);

    if (enumerate->parsed()) return cmd_enumerate(en, cfg, io);
    if (descent->parsed()) return cmd_descent(de, cfg, io);
    if (descent3->parsed()) return cmd_descent3(d3, cfg, io);
    if (watkins->parsed()) return cmd_watkins(wa, cfg, io);
    if (stats->parsed()) return cmd_stats(st, cfg, io);
    if (verify->parsed()) return cmd_verify(ve, cfg, io);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DatasetError& e) {
    err << "error: dataset " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ecw::cli
