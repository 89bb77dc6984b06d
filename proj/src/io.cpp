#include "lexchoice/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "lexchoice/convolution.hpp"
#include "lexchoice/lex_relation.hpp"
#include "lexchoice/unicode.hpp"

namespace lexchoice {

namespace {

using nlohmann::json;

std::string locate(std::size_t row, std::size_t column) {
  std::string where;
  if (row != 0) {
    where += "row " + std::to_string(row);
    if (column != 0) {
      where += ", column " + std::to_string(column);
    }
    where += ": ";
  }
  return where;
}

// Lines as the CSV readers see them: trailing '\r' stripped, fully empty
// lines dropped, original 1-based row numbers kept.
struct NumberedLine {
  std::size_t row;
  std::string text;
};

std::vector<NumberedLine> read_lines(std::istream& in) {
  std::vector<NumberedLine> lines;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    lines.push_back({row, std::move(line)});
  }
  return lines;
}

std::int64_t parse_int64(const std::string& text, std::size_t row, std::size_t column) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("'" + text + "' is not an integer", row, column);
  }
  return value;
}

BigRational rational_from_json(const json& value, const std::string& context) {
  if (value.is_number_integer()) {
    return BigRational(value.get<std::int64_t>());
  }
  if (value.is_number_unsigned()) {
    return BigRational(BigInt(value.get<std::uint64_t>()));
  }
  if (value.is_number_float()) {
    return parse_decimal_rational(value.dump());
  }
  if (value.is_string()) {
    return parse_decimal_rational(value.get<std::string>());
  }
  throw ParseError(context + " must be a number or a decimal string");
}

std::int64_t int_from_json(const json& value, const std::string& context) {
  if (value.is_number_integer()) {
    return value.get<std::int64_t>();
  }
  if (value.is_number_unsigned()) {
    const auto raw = value.get<std::uint64_t>();
    if (raw > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(context + " is too large");
    }
    return static_cast<std::int64_t>(raw);
  }
  throw ParseError(context + " must be an integer");
}

ScaleSpec scale_from_json(const json& entry, std::size_t index, bool bounds_required) {
  const std::string context = "scales[" + std::to_string(index) + "]";
  if (!entry.is_object()) {
    throw ParseError(context + " must be an object");
  }
  if (!entry.contains("name") || !entry["name"].is_string()) {
    throw ParseError(context + " needs a string 'name'");
  }
  ScaleSpec scale;
  scale.name = entry["name"].get<std::string>();
  if (scale.name.empty()) {
    throw ParseError(context + " has an empty name");
  }
  const bool has_min = entry.contains("min_rank");
  const bool has_max = entry.contains("max_rank");
  if (bounds_required && (!has_min || !has_max)) {
    throw ParseError(context + " needs integer 'min_rank' and 'max_rank'");
  }
  if (has_min) {
    scale.min_rank = int_from_json(entry["min_rank"], context + ".min_rank");
  }
  if (has_max) {
    scale.max_rank = int_from_json(entry["max_rank"], context + ".max_rank");
  }
  if (has_min && has_max && scale.max_rank < scale.min_rank) {
    throw ParseError(context + " has max_rank below min_rank");
  }
  return scale;
}

// Column-wise rescale + quantize for the rationing path. Raw values arrive
// row-major; rows carry their source CSV rows for error reporting.
std::vector<std::vector<std::int64_t>> apply_ration(
    const std::vector<std::vector<BigRational>>& raw_rows,
    const std::vector<std::size_t>& source_rows, const ScalesConfig& config) {
  const RationConfig& ration_config = *config.ration;
  const std::size_t m = config.scales.size();
  const std::size_t n = raw_rows.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (raw_rows[i][j] < 0) {
        throw ValidationError(locate(source_rows[i], j + 2) +
                                  "negative value for criterion '" +
                                  config.scales[j].name + "' cannot be rescaled",
                              source_rows[i]);
      }
    }
  }

  std::vector<std::vector<std::int64_t>> ranked(n, std::vector<std::int64_t>(m));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<BigRational> column;
    column.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      column.push_back(raw_rows[i][j]);
    }
    std::vector<BigRational> rescaled;
    try {
      rescaled = ration(column, ration_config.target_max);
    } catch (const std::domain_error&) {
      throw ValidationError("criterion '" + config.scales[j].name +
                            "' has no nonzero value, cannot rescale");
    }
    const std::vector<std::int64_t> ranks =
        quantize(rescaled, ration_config.target_max, ration_config.rank_count);
    for (std::size_t i = 0; i < n; ++i) {
      ranked[i][j] = ranks[i];
    }
  }
  return ranked;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t row, std::size_t column)
    : std::runtime_error(locate(row, column) + message), row_(row), column_(column) {}

ValidationError::ValidationError(const std::string& message, std::size_t row)
    : std::runtime_error(message), row_(row) {}

BigRational parse_decimal_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.');
       ++i) {
    if (text[i] == '.') {
      if (seen_dot) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a decimal number");
      }
      seen_dot = true;
      continue;
    }
    seen_digit = true;
    digits += text[i];
    if (seen_dot) {
      ++fraction_digits;
    }
  }

  std::int64_t exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    bool seen_exp_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      seen_exp_digit = true;
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 1000000) {
        throw std::invalid_argument("'" + std::string(text) + "' has an unreasonable exponent");
      }
    }
    if (!seen_exp_digit) {
      throw std::invalid_argument("'" + std::string(text) + "' is not a decimal number");
    }
    if (exp_negative) {
      exponent = -exponent;
    }
  }

  if (!seen_digit || i != text.size()) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a decimal number");
  }

  BigInt numerator_part(digits.empty() ? "0" : digits);
  BigInt denominator_part = pow(BigInt(10), static_cast<unsigned>(fraction_digits));
  if (exponent > 0) {
    numerator_part *= pow(BigInt(10), static_cast<unsigned>(exponent));
  } else if (exponent < 0) {
    denominator_part *= pow(BigInt(10), static_cast<unsigned>(-exponent));
  }
  BigRational result(numerator_part, denominator_part);
  return negative ? -result : result;
}

ScalesConfig parse_scales_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scales JSON: ") + e.what());
  }

  ScalesConfig config;
  const json* scales_node = nullptr;
  if (doc.is_array()) {
    scales_node = &doc;
  } else if (doc.is_object()) {
    if (!doc.contains("scales") || !doc["scales"].is_array()) {
      throw ParseError("scales JSON object needs a 'scales' array");
    }
    scales_node = &doc["scales"];
    if (doc.contains("ration")) {
      const json& ration_node = doc["ration"];
      if (!ration_node.is_object() || !ration_node.contains("a") ||
          !ration_node.contains("q")) {
        throw ParseError("'ration' needs fields 'a' and 'q'");
      }
      RationConfig ration_config{rational_from_json(ration_node["a"], "ration.a"),
                                 int_from_json(ration_node["q"], "ration.q")};
      if (ration_config.target_max <= 0) {
        throw ParseError("ration.a must be positive");
      }
      if (ration_config.rank_count < 1) {
        throw ParseError("ration.q must be at least 1");
      }
      config.ration = std::move(ration_config);
    }
  } else {
    throw ParseError("scales JSON must be an array or an object");
  }

  const bool bounds_required = !config.ration.has_value();
  for (std::size_t j = 0; j < scales_node->size(); ++j) {
    config.scales.push_back(scale_from_json((*scales_node)[j], j, bounds_required));
  }
  if (config.ration) {
    // Quantized ranks land in [0, q-1]; that range is the effective scale.
    for (ScaleSpec& scale : config.scales) {
      scale.min_rank = 0;
      scale.max_rank = config.ration->rank_count - 1;
    }
  }
  return config;
}

LoadedProblem load_problem_csv(std::istream& in, const ScalesConfig& config) {
  const std::vector<NumberedLine> lines = read_lines(in);
  const std::size_t m = config.scales.size();

  LoadedProblem loaded;
  loaded.problem.scales = config.scales;
  if (lines.empty()) {
    return loaded;  // no alternatives; validation reports it
  }

  const std::vector<std::string> header = split_csv_line(lines[0].text, lines[0].row);
  if (header.empty() || header[0] != "id") {
    throw ParseError("header must start with 'id'", lines[0].row, 1);
  }
  if (header.size() != m + 1) {
    throw ParseError("header has " + std::to_string(header.size() - 1) +
                         " criterion columns, scales define " + std::to_string(m),
                     lines[0].row);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (header[j + 1] != config.scales[j].name) {
      throw ParseError("header column '" + header[j + 1] + "' does not match scale '" +
                           config.scales[j].name + "'",
                       lines[0].row, j + 2);
    }
  }

  std::vector<std::vector<BigRational>> raw_rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [row, text] = lines[li];
    const std::vector<std::string> fields = split_csv_line(text, row);
    if (fields.size() != m + 1) {
      throw ParseError("expected " + std::to_string(m + 1) + " fields, got " +
                           std::to_string(fields.size()),
                       row);
    }
    if (fields[0].empty()) {
      throw ParseError("empty id", row, 1);
    }

    Alternative alt{fields[0], {}};
    alt.values.reserve(m);
    if (config.ration) {
      std::vector<BigRational> raw;
      raw.reserve(m);
      for (std::size_t j = 0; j < m; ++j) {
        try {
          raw.push_back(parse_decimal_rational(fields[j + 1]));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), row, j + 2);
        }
      }
      raw_rows.push_back(std::move(raw));
    } else {
      for (std::size_t j = 0; j < m; ++j) {
        alt.values.push_back(parse_int64(fields[j + 1], row, j + 2));
      }
    }
    loaded.problem.alternatives.push_back(std::move(alt));
    loaded.source_rows.push_back(row);
  }

  if (config.ration && !loaded.problem.alternatives.empty()) {
    const auto ranked = apply_ration(raw_rows, loaded.source_rows, config);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      loaded.problem.alternatives[i].values = ranked[i];
    }
  }
  return loaded;
}

AlphabetSpec parse_alphabet_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("alphabet JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("symbols") || !doc["symbols"].is_string()) {
    throw ParseError("alphabet JSON needs a string 'symbols'");
  }

  AlphabetSpec alphabet;
  try {
    alphabet.symbols = utf8_decode(doc["symbols"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("alphabet symbols: ") + e.what());
  }

  if (doc.contains("gap_position")) {
    const json& gap = doc["gap_position"];
    if (gap == "first") {
      alphabet.gap_position = GapPosition::First;
    } else if (gap == "last") {
      alphabet.gap_position = GapPosition::Last;
    } else {
      throw ParseError("gap_position must be \"first\" or \"last\"");
    }
  }
  if (doc.contains("max_length")) {
    const std::int64_t max_length = int_from_json(doc["max_length"], "max_length");
    if (max_length < 1) {
      throw ParseError("max_length must be at least 1");
    }
    alphabet.max_length = static_cast<std::size_t>(max_length);
  }

  try {
    validate_alphabet(alphabet);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return alphabet;
}

std::vector<std::string> read_word_list(std::istream& in) {
  std::vector<std::string> words;
  for (const auto& [row, text] : read_lines(in)) {
    try {
      utf8_decode(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), row);
    }
    words.push_back(text);
  }
  return words;
}

RankingReport build_ranking_report(const DecisionProblem& problem) {
  const auto& alts = problem.alternatives;

  std::vector<std::size_t> order(alts.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t k) {
    return compare_lex(alts[i], alts[k], problem).verdict == Verdict::FirstPreferred;
  });

  const LexCoefficients coeffs = lex_coefficients(problem.scales);

  std::vector<bool> in_kernel(alts.size(), false);
  std::unordered_map<std::string_view, std::size_t> index_of;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    index_of.emplace(alts[i].id, i);
  }
  for (const Alternative& member : pareto_kernel(problem)) {
    in_kernel[index_of.at(member.id)] = true;
  }

  RankingReport report;
  report.rows.reserve(alts.size());
  std::size_t rank = 0;
  BigInt previous_value;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    BigInt value = convolve(alts[i], coeffs, problem.scales);
    if (pos == 0 || value != previous_value) {
      ++rank;
    }
    previous_value = value;

    RankingRow row{rank, alts[i].id, std::move(value), in_kernel[i], std::nullopt};
    if (pos + 1 < order.size()) {
      row.degree_vs_next = superiority_degree(alts[i], alts[order[pos + 1]], problem);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_ranking_csv(std::ostream& out, const RankingReport& report) {
  out << "rank,id,convolution,in_kernel,degree_vs_next\n";
  for (const RankingRow& row : report.rows) {
    out << row.rank << ',' << csv_field(row.id) << ',' << row.value.str() << ','
        << (row.in_kernel ? "true" : "false") << ',';
    if (row.degree_vs_next) {
      out << *row.degree_vs_next;
    }
    out << '\n';
  }
}

std::vector<LexiconRow> build_lexicon(std::span<const std::string> words,
                                      const AlphabetSpec& alphabet) {
  validate_alphabet(alphabet);
  std::vector<LexiconRow> rows;
  rows.reserve(words.size());
  for (const std::string& word : words) {
    rows.push_back({word, encode_word(word, alphabet)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LexiconRow& a, const LexiconRow& b) { return a.key < b.key; });
  return rows;
}

void write_lexicon_csv(std::ostream& out, const std::vector<LexiconRow>& rows) {
  out << "word,key\n";
  for (const LexiconRow& row : rows) {
    out << csv_field(row.word) << ',' << row.key.str() << '\n';
  }
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t row_for_errors) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (i <= line.size()) {
    const bool at_end = i == line.size();
    if (quoted) {
      if (at_end) {
        throw ParseError("unterminated quoted field", row_for_errors);
      }
      if (line[i] == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        current += line[i];
        ++i;
      }
    } else if (at_end || line[i] == ',') {
      fields.push_back(std::move(current));
      current.clear();
      ++i;
    } else if (line[i] == '"' && current.empty()) {
      quoted = true;
      ++i;
    } else {
      current += line[i];
      ++i;
    }
  }
  return fields;
}

std::string csv_field(std::string_view value) {
  const bool needs_quotes =
      value.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace lexchoice
