// Command-line front end: rank alternatives, verify the convolution/relation
// agreement and order axioms, encode word lists.
//
// Exit codes: 0 ok, 1 property falsified, 2 parse/usage error,
// 3 validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lexchoice/convolution.hpp"
#include "lexchoice/core_types.hpp"
#include "lexchoice/generate.hpp"
#include "lexchoice/io.hpp"
#include "lexchoice/lex_relation.hpp"
#include "lexchoice/lexicon.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw lexchoice::ParseError("cannot open '" + path + "'");
  }
  return in;
}

// Writes through a file or falls back to stdout when no path was given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw lexchoice::ParseError("cannot open '" + path + "' for writing");
      }
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::optional<lexchoice::RationConfig> parse_ration_flag(const std::string& spec) {
  const std::size_t comma = spec.find(',');
  if (comma == std::string::npos) {
    throw lexchoice::ParseError("--ration expects 'a,q'");
  }
  lexchoice::RationConfig config{
      lexchoice::parse_decimal_rational(spec.substr(0, comma)),
      0};
  const std::string rank_text = spec.substr(comma + 1);
  try {
    config.rank_count = std::stoll(rank_text);
  } catch (const std::exception&) {
    throw lexchoice::ParseError("--ration rank count '" + rank_text + "' is not an integer");
  }
  if (config.target_max <= 0 || config.rank_count < 1) {
    throw lexchoice::ParseError("--ration needs a > 0 and q >= 1");
  }
  return config;
}

// Returns the exit code for a validation report, printing one line per
// violation with the CSV row where one is known.
int report_violations(const std::vector<lexchoice::Violation>& violations,
                      const std::vector<std::size_t>& source_rows) {
  for (const lexchoice::Violation& violation : violations) {
    std::cerr << "validation: ";
    if (violation.alternative_index && *violation.alternative_index < source_rows.size()) {
      std::cerr << "row " << source_rows[*violation.alternative_index] << ": ";
    }
    std::cerr << violation.message << '\n';
  }
  return kExitValidation;
}

int run_rank(const std::string& input_path, const std::string& scales_path,
             const std::string& output_path, const std::string& ration_spec) {
  auto scales_in = open_input(scales_path);
  lexchoice::ScalesConfig config = lexchoice::parse_scales_json(scales_in);
  if (!ration_spec.empty()) {
    config.ration = parse_ration_flag(ration_spec);
    for (lexchoice::ScaleSpec& scale : config.scales) {
      scale.min_rank = 0;
      scale.max_rank = config.ration->rank_count - 1;
    }
  }

  auto csv_in = open_input(input_path);
  const lexchoice::LoadedProblem loaded = lexchoice::load_problem_csv(csv_in, config);

  const auto violations = lexchoice::validate_problem(loaded.problem);
  if (!violations.empty()) {
    return report_violations(violations, loaded.source_rows);
  }

  OutputTarget out(output_path);
  lexchoice::write_ranking_csv(out.stream(), lexchoice::build_ranking_report(loaded.problem));
  return kExitOk;
}

lexchoice::LexCoefficients parse_weight_override(const std::string& spec, std::size_t m) {
  lexchoice::LexCoefficients coeffs;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      coeffs.weights.emplace_back(token);
    } catch (const std::exception&) {
      throw lexchoice::ParseError("--override-weights entry '" + token +
                                  "' is not an integer");
    }
  }
  if (coeffs.weights.size() != m) {
    throw lexchoice::ParseError("--override-weights has " +
                                std::to_string(coeffs.weights.size()) +
                                " entries for " + std::to_string(m) + " criteria");
  }
  return coeffs;
}

// One problem's verification round; prints what failed and returns false on
// the first falsified property.
bool verify_one(const lexchoice::DecisionProblem& problem,
                const std::optional<lexchoice::LexCoefficients>& override_weights,
                const std::string& label) {
  const lexchoice::AgreementReport agreement =
      override_weights ? lexchoice::verify_agreement(problem, *override_weights)
                       : lexchoice::verify_agreement(problem);
  if (!agreement.agrees) {
    std::cout << label << ": agreement FAILED at pair (" << agreement.counterexample->first
              << ", " << agreement.counterexample->second << ")\n";
    return false;
  }
  const lexchoice::AxiomReport axioms = lexchoice::check_order_axioms(problem);
  if (!axioms.all()) {
    std::cout << label << ": order axioms FAILED (linked=" << axioms.linked
              << " strict_asymmetric=" << axioms.strict_asymmetric
              << " transitive=" << axioms.transitive << ")\n";
    return false;
  }
  return true;
}

int run_verify(const std::string& input_path, const std::string& scales_path,
               unsigned random_trials, std::uint64_t seed,
               const std::string& weights_spec) {
  if (random_trials > 0) {
    if (!weights_spec.empty()) {
      throw lexchoice::ParseError("--override-weights requires --input, not --random");
    }
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < random_trials; ++t) {
      const lexchoice::DecisionProblem problem = lexchoice::random_problem(rng);
      if (!verify_one(problem, std::nullopt, "trial " + std::to_string(t + 1))) {
        return kExitFalsified;
      }
    }
    std::cout << "verified " << random_trials << " random problems (seed " << seed
              << "): agreement ok, order axioms ok\n";
    return kExitOk;
  }

  if (input_path.empty() || scales_path.empty()) {
    throw lexchoice::ParseError("verify needs --input and --scales, or --random N");
  }
  auto scales_in = open_input(scales_path);
  const lexchoice::ScalesConfig config = lexchoice::parse_scales_json(scales_in);
  auto csv_in = open_input(input_path);
  const lexchoice::LoadedProblem loaded = lexchoice::load_problem_csv(csv_in, config);
  const auto violations = lexchoice::validate_problem(loaded.problem);
  if (!violations.empty()) {
    return report_violations(violations, loaded.source_rows);
  }

  std::optional<lexchoice::LexCoefficients> override_weights;
  if (!weights_spec.empty()) {
    override_weights = parse_weight_override(weights_spec, loaded.problem.criterion_count());
  }
  if (!verify_one(loaded.problem, override_weights, input_path)) {
    return kExitFalsified;
  }
  const std::size_t n = loaded.problem.alternative_count();
  std::cout << input_path << ": agreement ok, order axioms ok (" << n << " alternatives, "
            << n * n << " ordered pairs)\n";
  return kExitOk;
}

int run_encode(const std::string& input_path, const std::string& alphabet_path,
               const std::string& output_path) {
  auto alphabet_in = open_input(alphabet_path);
  const lexchoice::AlphabetSpec alphabet = lexchoice::parse_alphabet_json(alphabet_in);

  auto words_in = open_input(input_path);
  const std::vector<std::string> words = lexchoice::read_word_list(words_in);

  OutputTarget out(output_path);
  lexchoice::write_lexicon_csv(out.stream(), lexchoice::build_lexicon(words, alphabet));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic multicriteria choice: ranking, verification, word keys"};
  app.require_subcommand(1);

  std::string input_path;
  std::string scales_path;
  std::string output_path;
  std::string alphabet_path;
  std::string ration_spec;
  std::string weights_spec;
  unsigned random_trials = 0;
  std::uint64_t seed = 42;

  CLI::App* rank = app.add_subcommand("rank", "Rank alternatives from a CSV file");
  rank->add_option("--input", input_path, "alternatives CSV")->required();
  rank->add_option("--scales", scales_path, "criterion scales JSON")->required();
  rank->add_option("--output", output_path, "ranking CSV (stdout when omitted)");
  rank->add_option("--ration", ration_spec,
                   "a,q: rescale raw values to [0,a], quantize to q ranks");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check convolution/relation agreement and the order axioms");
  verify->add_option("--input", input_path, "alternatives CSV");
  verify->add_option("--scales", scales_path, "criterion scales JSON");
  verify->add_option("--random", random_trials, "verify N random problems instead");
  verify->add_option("--seed", seed, "seed for --random (default 42)");
  verify->add_option("--override-weights", weights_spec)->group("");

  CLI::App* encode = app.add_subcommand("encode", "Encode a word list into positional keys");
  encode->add_option("--input", input_path, "word list, one word per line")->required();
  encode->add_option("--alphabet", alphabet_path, "alphabet JSON")->required();
  encode->add_option("--output", output_path, "lexicon CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (rank->parsed()) {
      return run_rank(input_path, scales_path, output_path, ration_spec);
    }
    if (verify->parsed()) {
      return run_verify(input_path, scales_path, random_trials, seed, weights_spec);
    }
    return run_encode(input_path, alphabet_path, output_path);
  } catch (const lexchoice::ValidationError& e) {
    std::cerr << "validation: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lexchoice::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
