// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lexchoice/convolution.hpp"
#include "lexchoice/core_types.hpp"
#include "lexchoice/generate.hpp"
#include "lexchoice/lex_relation.hpp"
#include "lexchoice/lexicon.hpp"
#include "support.hpp"

using namespace lexchoice;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

// 1. Convolution order and pairwise-relation order coincide on 1000 seeded
//    random problems (m 1..6, rank counts 1..12, n 2..64), in under 30 s.
bool convolution_agreement(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(42);
  std::size_t counterexamples = 0;
  for (int t = 0; t < 1000; ++t) {
    if (!verify_agreement(random_problem(rng)).agrees) {
      ++counterexamples;
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  detail = "1000 problems, " + std::to_string(counterexamples) + " counterexamples, " +
           std::to_string(elapsed.count()) + " ms";
  return counterexamples == 0 && elapsed.count() < 30000;
}

// 2. The order-axiom witness (linked, strictly asymmetric, transitive) passes
//    on every one of the same 1000 problems, exhaustively for n <= 30.
bool order_axioms(std::string& detail) {
  std::mt19937_64 rng(42);
  std::size_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    if (!check_order_axioms(random_problem(rng)).all()) {
      ++violations;
    }
  }
  detail = "1000 problems, " + std::to_string(violations) + " violations";
  return violations == 0;
}

// 3. best_by_convolution and pareto_kernel select identical id sets on every
//    generated problem.
bool kernel_consistency(std::string& detail) {
  std::mt19937_64 rng(42);
  std::size_t mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const DecisionProblem problem = random_problem(rng);
    const auto best = best_by_convolution(problem);
    const auto kernel = pareto_kernel(problem);
    bool same = best.size() == kernel.size();
    for (std::size_t i = 0; same && i < best.size(); ++i) {
      same = best[i].id == kernel[i].id;
    }
    if (!same) {
      ++mismatches;
    }
  }
  detail = "1000 problems, " + std::to_string(mismatches) + " id-set mismatches";
  return mismatches == 0;
}

// 4. Over five decimal scales the convolution equals the base-10 reading of
//    the digit string, for 10000 random 5-digit strings, exactly.
bool decimal_reproduction(std::string& detail) {
  std::vector<ScaleSpec> scales;
  for (int j = 0; j < 5; ++j) {
    scales.push_back({0, 9, "d" + std::to_string(j + 1)});
  }
  const LexCoefficients coeffs = lex_coefficients(scales);

  std::mt19937_64 rng(4242);
  std::size_t mismatches = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string digits;
    Alternative alt{"digits", {}};
    for (int p = 0; p < 5; ++p) {
      const auto d = static_cast<std::int64_t>(uniform_below(rng, 10));
      digits += static_cast<char>('0' + d);
      alt.values.push_back(d);
    }
    const long long reading = std::stoll(digits);  // independent base-10 oracle
    if (convolve(alt, coeffs, scales) != reading) {
      ++mismatches;
    }
  }
  detail = "10000 digit strings, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// 5. Verdicts and degrees are identical before and after random strictly
//    increasing per-criterion maps, on 200 problems.
bool monotone_stability(std::string& detail) {
  std::mt19937_64 rng(1337);
  RandomProblemParams params;
  params.max_alternatives = 32;
  std::size_t mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const DecisionProblem problem = random_problem(rng, params);
    std::vector<std::vector<std::int64_t>> maps;
    for (const auto& scale : problem.scales) {
      maps.push_back(testsupport::random_increasing_map(
          rng, static_cast<std::size_t>(scale.rank_count()), -50, 50, 9));
    }
    const DecisionProblem transformed = testsupport::apply_monotone_maps(problem, maps);
    for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
      for (std::size_t k = 0; k < problem.alternatives.size(); ++k) {
        const auto before =
            compare_lex(problem.alternatives[i], problem.alternatives[k], problem);
        const auto after = compare_lex(transformed.alternatives[i],
                                       transformed.alternatives[k], transformed);
        if (!(before == after)) {
          ++mismatches;
        }
      }
    }
  }
  detail = "200 problems, " + std::to_string(mismatches) + " verdict/degree changes";
  return mismatches == 0;
}

// 6. On a 1000+ word corpus over 26 letters (gap first, 20 positions), key
//    order equals pad-low string order and keys are injective on distinct
//    words.
bool lexicon_isomorphism(std::string& detail) {
  AlphabetSpec alphabet;
  for (char c = 'a'; c <= 'z'; ++c) {
    alphabet.symbols.push_back(static_cast<char32_t>(c));
  }

  std::mt19937_64 rng(2024);
  std::vector<std::string> words =
      testsupport::random_words(rng, 1100, 20, "abcdefghijklmnopqrstuvwxyz");
  words.insert(words.end(), {"", "a", "aa", "ab", "b", "ba", std::string(20, 'z')});

  std::vector<WordKey> keys;
  std::vector<std::string> padded;
  keys.reserve(words.size());
  for (const auto& word : words) {
    keys.push_back(encode_word(word, alphabet));
    padded.push_back(testsupport::pad_right(word, ' ', 20));  // blank pads low
  }

  std::size_t order_mismatches = 0;
  std::size_t injectivity_failures = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t k = i + 1; k < words.size(); ++k) {
      if ((keys[i] < keys[k]) != (padded[i] < padded[k])) {
        ++order_mismatches;
      }
      if (keys[i] == keys[k] && words[i] != words[k]) {
        ++injectivity_failures;
      }
    }
  }

  // full-list check: library sort equals the string-comparison sort
  std::vector<std::string> by_string = words;
  std::stable_sort(by_string.begin(), by_string.end(),
                   [](const std::string& a, const std::string& b) {
                     return testsupport::pad_right(a, ' ', 20) <
                            testsupport::pad_right(b, ' ', 20);
                   });
  const bool sort_matches = sort_lexicon(words, alphabet) == by_string;

  detail = std::to_string(words.size()) + " words, " + std::to_string(order_mismatches) +
           " order mismatches, " + std::to_string(injectivity_failures) +
           " key collisions, sorted list " + (sort_matches ? "matches" : "differs");
  return order_mismatches == 0 && injectivity_failures == 0 && sort_matches;
}

// 7. The scale-separation check accepts constructed separated families and
//    rejects families with a known overlapping adjacent pair, 100 of each mix.
bool scale_separation(std::string& detail) {
  std::mt19937_64 rng(777);
  std::size_t misclassifications = 0;

  for (int t = 0; t < 100; ++t) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    std::vector<ScaleSpec> scales;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int64_t base = 10 * static_cast<std::int64_t>(m - j);
      scales.push_back({base + 1, base + 9, "c" + std::to_string(j)});
    }

    const bool corrupt = uniform_below(rng, 2) == 1;
    std::size_t corrupted_index = 0;
    if (corrupt) {
      // overlap one adjacent pair: drop the more important scale's minimum
      // to (at or below) the next scale's maximum
      corrupted_index = static_cast<std::size_t>(uniform_below(rng, m - 1));
      scales[corrupted_index].min_rank =
          scales[corrupted_index + 1].max_rank - uniform_int(rng, 0, 3);
    }

    const ScaleSeparationReport report = check_scale_separation(scales);
    if (corrupt) {
      const bool flagged =
          !report.holds && report.violations == std::vector<std::size_t>{corrupted_index + 1};
      if (!flagged) {
        ++misclassifications;
      }
    } else if (!report.holds || !report.violations.empty()) {
      ++misclassifications;
    }
  }

  // zero-minimum rule: 0 counts as 1, so [0,9] over [-5,0] separates while
  // [0,9] over [0,9] does not
  if (!check_scale_separation(std::vector<ScaleSpec>{{0, 9, "hi"}, {-5, 0, "lo"}}).holds) {
    ++misclassifications;
  }
  if (check_scale_separation(std::vector<ScaleSpec>{{0, 9, "hi"}, {0, 9, "lo"}}).holds) {
    ++misclassifications;
  }

  detail = "100 random families + zero-rule cases, " + std::to_string(misclassifications) +
           " misclassifications";
  return misclassifications == 0;
}

// 8. Radix-6, 20-position configuration: the leading weight is 6^19 and the
//    top key is 6^20 - 1, rendered exactly, against school-book decimal
//    arithmetic on digit strings.
bool exact_arithmetic(std::string& detail) {
  AlphabetSpec alphabet;
  for (const char c : {'a', 'b', 'c', 'd', 'e'}) {
    alphabet.symbols.push_back(static_cast<char32_t>(c));
  }

  bool ok = true;
  if (alphabet.radix() != 6) {
    ok = false;
  }

  const auto weights = position_weights(alphabet);
  const std::string six_pow_19 = testsupport::decimal_pow(6, 19);
  ok = ok && weights.size() == 20 && weights[0].str() == six_pow_19;

  std::vector<ScaleSpec> scales;
  for (int j = 0; j < 20; ++j) {
    scales.push_back({0, 5, "p" + std::to_string(j + 1)});
  }
  ok = ok && lex_coefficients(scales).weights[0].str() == six_pow_19;

  const std::string top_word(20, 'e');  // highest letter in every position
  const std::string top_key = encode_word(top_word, alphabet).str();
  const std::string six_pow_20_minus_1 =
      testsupport::decimal_minus_one(testsupport::decimal_pow(6, 20));
  ok = ok && top_key == six_pow_20_minus_1;

  // same construction at a radix that clearly exceeds 64-bit range
  AlphabetSpec wide;
  for (char32_t c = 0x10D0; c < 0x10D0 + 32; ++c) {
    wide.symbols.push_back(c);
  }
  ok = ok && position_weights(wide)[0].str() == testsupport::decimal_pow(33, 19);

  detail = "6^19 = " + six_pow_19 + ", top key = " + top_key;
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"convolution order matches the pairwise relation on random problems",
       convolution_agreement},
      {"order axioms hold on every generated problem", order_axioms},
      {"best-by-convolution equals the kernel on every generated problem",
       kernel_consistency},
      {"five decimal scales reproduce the base-10 integer reading", decimal_reproduction},
      {"verdicts and degrees survive strictly increasing transforms", monotone_stability},
      {"word-key order equals dictionary order and keys are injective",
       lexicon_isomorphism},
      {"scale separation check classifies known families exactly", scale_separation},
      {"radix-6 / 20-position arithmetic is exact at full width", exact_arithmetic},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool passed = false;
    try {
      passed = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name;
    if (!detail.empty()) {
      std::cout << " (" << detail << ")";
    }
    std::cout << '\n';
    if (!passed) {
      ++failures;
    }
  }

  std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " ("
            << criteria.size() - failures << "/" << criteria.size() << ")\n";
  return failures == 0 ? 0 : 1;
}
