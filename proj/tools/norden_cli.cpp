#include "CLI11.hpp"

#include "norden/parser.hpp"
#include "norden/verification.hpp"

#include <iostream>
#include <string>

namespace {

using namespace norden;

Rational parse_constant(const std::string& text, const std::string& what) {
  const Polynomial p = parse_scalar(text);
  if (!p.is_constant())
    throw std::invalid_argument(what + " must be a rational constant, got '" + text + "'");
  return p.constant_value();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

NordenManifold family_manifold(const std::array<Polynomial, 4>& lambda) {
  Tensor g(2, 4);
  g(1, 1) = 1;
  g(2, 2) = 1;
  g(3, 3) = -1;
  g(4, 4) = -1;
  Tensor j(2, 4);
  j(3, 1) = 1;
  j(4, 2) = 1;
  j(1, 3) = -1;
  j(2, 4) = -1;
  return NordenManifold(build_w3_killing(lambda), Metric(std::move(g)), std::move(j));
}

int run_paper_verify(const std::string& format) {
  const VerificationReport report = run_paper_suite();
  std::cout << (format == "json" ? report.to_json() : report.to_text());
  return report.has_failures() ? 1 : 0;
}

int run_analyze_manifold(const NordenManifold& m, const NordenCheckReport& check,
                         const std::string& format) {
  const Analysis a = analyze(m, check);
  std::cout << (format == "json" ? analysis_to_json(a) : analysis_to_text(a));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for a family of 4-dimensional quasi-Kaehler Lie groups with "
               "Norden metric"};
  app.require_subcommand(1);

  auto* verify_cmd =
      app.add_subcommand("paper-verify", "run the full verification suite and report per check");
  std::string verify_format = "text";
  verify_cmd->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a manifold from a JSON document");
  std::string input_path;
  std::string analyze_format = "text";
  analyze_cmd->add_option("--input", input_path, "manifold JSON file")->required();
  analyze_cmd->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* family_cmd = app.add_subcommand(
      "family", "analyze the 4-parameter family at given parameter values");
  std::string l_text[4];
  bool symbolic = false;
  family_cmd->add_option("--l1", l_text[0], "value of l1 (scalar text)");
  family_cmd->add_option("--l2", l_text[1], "value of l2 (scalar text)");
  family_cmd->add_option("--l3", l_text[2], "value of l3 (scalar text)");
  family_cmd->add_option("--l4", l_text[3], "value of l4 (scalar text)");
  family_cmd->add_flag("--symbolic", symbolic, "keep l1..l4 as symbols");
  std::string family_format = "text";
  family_cmd->add_option("--format", family_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sample_cmd = app.add_subcommand(
      "sample", "evaluate the family at deterministic pseudo-random parameter points");
  long count = 0;
  std::uint64_t seed = 0;
  std::string range_text = "-10,10";
  std::string include_text;
  std::string sample_format = "text";
  sample_cmd->add_option("--count", count, "number of points")->required();
  sample_cmd->add_option("--seed", seed, "generator seed");
  sample_cmd->add_option("--range", range_text, "rational interval LO,HI for every parameter");
  sample_cmd->add_option("--include-point", include_text,
                         "force l1,l2,l3,l4 as the first evaluated point");
  sample_cmd->add_option("--format", sample_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return run_paper_verify(verify_format);

    if (analyze_cmd->parsed()) {
      const LoadedManifold loaded = load_manifold(input_path);
      if (!loaded.norden_check.ok)
        std::cerr << "warning: the input violates the Norden conditions; "
                     "see the analysis for the defects\n";
      return run_analyze_manifold(loaded.manifold, loaded.norden_check, analyze_format);
    }

    if (family_cmd->parsed()) {
      std::array<Polynomial, 4> lambda;
      for (int p = 0; p < 4; ++p) {
        if (symbolic)
          lambda[p] = Polynomial::parameter(p + 1);
        else if (l_text[p].empty())
          throw std::invalid_argument("family needs --l1..--l4, or --symbolic");
        else
          lambda[p] = parse_scalar(l_text[p]);
      }
      const NordenManifold m = family_manifold(lambda);
      return run_analyze_manifold(m, check_norden(m), family_format);
    }

    if (sample_cmd->parsed()) {
      SampleOptions options;
      options.count = count;
      options.seed = seed;
      const auto bounds = split(range_text, ',');
      if (bounds.size() != 2) throw std::invalid_argument("range must be LO,HI");
      options.lo = parse_constant(bounds[0], "range lower bound");
      options.hi = parse_constant(bounds[1], "range upper bound");
      if (!include_text.empty()) {
        const auto coords = split(include_text, ',');
        if (coords.size() != 4)
          throw std::invalid_argument("include-point needs four comma-separated values");
        std::array<Rational, 4> point;
        for (int p = 0; p < 4; ++p) point[p] = parse_constant(coords[p], "include-point value");
        options.include_point = point;
      }
      const SampleSummary summary = run_sample(options);
      std::cout << (sample_format == "json" ? sample_to_json(options, summary)
                                            : sample_to_text(options, summary));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
