// pascal2: values, verification suites, series and OEIS b-files for rows of
// Pascal's triangle mod 2 and their polynomial analogues.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad arguments or
// a cap violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pascal2/commands.hpp"

namespace {

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << body) || !out.flush()) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

template <class T>
std::optional<T> flag_value(const CLI::Option* opt, const T& v) {
  return opt->count() > 0 ? std::optional<T>(v) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pascal's triangle mod 2, Fermat factorizations and their polynomial analogues"};
  app.require_subcommand(1);

  unsigned cap = pascal2::kDefaultFermatCap;
  bool json = false;
  std::string out_path;
  app.add_option("--cap", cap, "Largest Fermat index allowed")->check(CLI::Range(0U, 40U));

  // value
  auto* value = app.add_subcommand("value", "Print one term: c, l, d, fermat, p or q");
  std::string seq;
  std::uint64_t index = 0;
  std::string method;
  value->add_option("seq", seq)->required()->check(CLI::IsMember({"c", "l", "d", "fermat", "p", "q"}));
  value->add_option("n", index)->required();
  value->add_option("--method", method, "For c: fermat, ca, hewgill or recursion")
      ->check(CLI::IsMember({"fermat", "ca", "hewgill", "recursion"}));
  value->add_flag("--json", json);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::uint64_t nmax = 0, t = 0, n = 0, terms = 0, degree = 0;
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"rows", "theorem1", "glaisher", "addition", "stephan", "poly", "genfunc", "semigroup"}));
  auto* nmax_opt = verify->add_option("--nmax", nmax);
  auto* t_opt = verify->add_option("--t", t);
  auto* n_opt = verify->add_option("--n", n);
  auto* terms_opt = verify->add_option("--terms", terms);
  auto* degree_opt = verify->add_option("--degree", degree);
  verify->add_flag("--json", json);
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  // series
  auto* series = app.add_subcommand("series", "Evaluate a series or product exactly");
  std::string series_id;
  std::uint64_t series_terms = 0;
  unsigned digits = 12;
  series->add_option("id", series_id)->required()->check(CLI::IsMember({"6.12", "6.16", "6.19", "6.22"}));
  auto* series_terms_opt = series->add_option("--terms", series_terms);
  series->add_option("--digits", digits)->check(CLI::Range(1U, 100000U));

  // bfile
  auto* bfile = app.add_subcommand("bfile", "Write an OEIS b-file for c or l");
  std::string bfile_seq;
  std::uint64_t bfile_nmax = 0;
  bfile->add_option("seq", bfile_seq)->required()->check(CLI::IsMember({"c", "l"}));
  bfile->add_option("nmax", bfile_nmax)->required();
  bfile->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (value->parsed()) {
      const std::string v = pascal2::cmd_value(seq, index, method, cap);
      if (json)
        std::cout << nlohmann::ordered_json{{"seq", seq}, {"n", std::to_string(index)}, {"value", v}}.dump()
                  << "\n";
      else
        std::cout << v << "\n";
      return 0;
    }
    if (verify->parsed()) {
      pascal2::SuiteOptions opts;
      opts.nmax = flag_value(nmax_opt, nmax);
      opts.t = flag_value(t_opt, t);
      opts.n = flag_value(n_opt, n);
      opts.terms = flag_value(terms_opt, terms);
      opts.degree = flag_value(degree_opt, degree);
      opts.cap = cap;
      const pascal2::Report report = pascal2::cmd_verify(suite, opts);
      if (const int rc = emit(json ? pascal2::to_json(report) : pascal2::to_text(report), out_path); rc != 0)
        return rc;
      return pascal2::verify_exit_code(report);
    }
    if (series->parsed()) {
      std::cout << pascal2::cmd_series(series_id, flag_value(series_terms_opt, series_terms), digits);
      return 0;
    }
    if (bfile->parsed()) return emit(pascal2::cmd_bfile(bfile_seq, bfile_nmax, cap), out_path);
  } catch (const std::invalid_argument& e) {  // UsageError, PreconditionError
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {  // CapExceeded
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
