#include "cauchy/cli.hpp"
#include "cauchy/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace cauchy;
using namespace cauchy::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cauchy polynomials, symmetric-function conversions and exact matrix invariants"};
  app.require_subcommand(1);

  Format format = Format::plain;
  const std::map<std::string, Format> formats{{"plain", Format::plain},
                                              {"structured", Format::structured}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized verification");

  JpolyOptions jpoly;
  auto* jpoly_cmd = app.add_subcommand("jpoly", "Cauchy polynomial j_k (or k_k with --plus)");
  jpoly_cmd->add_option("k", jpoly.k, "Index k >= 1")->required();
  jpoly_cmd->add_flag("--plus", jpoly.plus, "Use the complementary raising operator x1 + delta");
  jpoly_cmd->add_flag("--minus", [&](std::int64_t) { jpoly.plus = false; }, "Use x1 - delta (default)");
  jpoly_cmd->add_flag("--closed", jpoly.closed, "Build from the class-size formula");
  jpoly_cmd->add_flag("--check", jpoly.check, "Build both forms and compare");

  std::size_t classes_n = 1;
  bool classes_verify = false;
  auto* classes_cmd = app.add_subcommand("classes", "Conjugacy class sizes of S_n by cycle type");
  classes_cmd->add_option("n", classes_n, "Group degree n >= 1")->required();
  classes_cmd->add_flag("--verify", classes_verify, "Cross-check by enumerating S_n (n <= 8)");

  std::string matrix_path;
  std::vector<std::string> method_names;
  auto* inv_cmd = app.add_subcommand("invariants", "Power traces and prodeterminants of a matrix file");
  inv_cmd->add_option("matrix", matrix_path, "JSON matrix file")->required();
  inv_cmd->add_option("--method", method_names, "minors, leverrier, cauchy, antisym (repeatable)")
      ->check(CLI::IsMember({"minors", "leverrier", "cauchy", "antisym"}))
      ->delimiter(',');

  std::string convert_to = "elementary";
  std::size_t convert_k = 1;
  std::vector<std::string> convert_values;
  auto* convert_cmd = app.add_subcommand("convert", "Elementary or Wronski value from power sums s_1..s_k");
  convert_cmd->add_option("--to", convert_to, "elementary or wronski")
      ->check(CLI::IsMember({"elementary", "wronski"}));
  convert_cmd->add_option("k", convert_k, "Degree k")->required();
  convert_cmd->add_option("values", convert_values, "Power sums s_1 .. s_k")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the four prodeterminant algorithms");
  bench_cmd->add_option("--nmax", bench.nmax, "Largest matrix size");
  bench_cmd->add_option("--kmax", bench.kmax, "Largest order k");
  bench_cmd->add_option("--repeats", bench.repeats, "Repetitions per timing");

  VerifyOptions verify;
  bool verify_all = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-oracle verification suite");
  verify_cmd->add_flag("--all", verify_all, "Run every section (default when no --section is given)");
  verify_cmd->add_option("--max-k", verify.max_k, "Largest polynomial degree");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest matrix size");
  verify_cmd->add_option("--samples", verify.samples, "Random samples per section");
  verify_cmd->add_option("--section", verify.sections,
                         "polynomials, symfun, classes, matrices, operators (repeatable)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    OutputDocument doc;
    if (*jpoly_cmd) {
      doc = cmd_jpoly(jpoly);
    } else if (*classes_cmd) {
      doc = cmd_classes(classes_n, classes_verify);
    } else if (*inv_cmd) {
      InvariantsOptions options;
      for (const auto& name : method_names)
        options.methods.push_back(name == "minors"      ? Method::minors
                                  : name == "leverrier" ? Method::leverrier
                                  : name == "cauchy"    ? Method::cauchy
                                                        : Method::antisym);
      doc = cmd_invariants(load_matrix_file(matrix_path), options);
    } else if (*convert_cmd) {
      doc = cmd_convert(convert_k, convert_to == "wronski" ? Target::wronski : Target::elementary,
                        convert_values);
    } else if (*bench_cmd) {
      bench.seed = seed;
      doc = cmd_bench(bench);
    } else if (*verify_cmd) {
      if (verify_all)
        verify.sections.clear();
      verify.seed = seed;
      doc = cmd_verify(verify);
    }
    std::cout << doc.render(format);
    return doc.exit_code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
