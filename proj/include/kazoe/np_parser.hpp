// Copyright 2026 The Kazoe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Parses one line of romanized, whitespace-segmented input into a SourceNP.
// Exactly two phrase shapes are accepted:
//
//   num cls "no" noun     e.g. "2 hiki no inu"       (X-C-no-N)
//   noun "no" cls         e.g. "pen no hako"         (N-no-C)
//
// where num is a decimal digit string, "suu" (some) or "nan" (how many).

#ifndef KAZOE_NP_PARSER_HPP_
#define KAZOE_NP_PARSER_HPP_

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kazoe/error.hpp"
#include "kazoe/lexicon.hpp"

namespace kazoe {

struct NumeralSpec {
  enum class Kind { Count, Some, Interrogative };

  Kind kind = Kind::Count;
  std::uint64_t value = 0;  // Count only; always >= 1

  static NumeralSpec count(std::uint64_t v) { return {Kind::Count, v}; }
  static NumeralSpec some() { return {Kind::Some, 0}; }
  static NumeralSpec interrogative() { return {Kind::Interrogative, 0}; }

  bool operator==(const NumeralSpec&) const = default;
};

enum class Pattern { XCnoN, NnoC };

// A parsed source phrase.  The entry pointers reference the lexicon the
// phrase was parsed against and share its lifetime.
struct SourceNP {
  Pattern pattern = Pattern::XCnoN;
  std::optional<NumeralSpec> numeral;  // present only for XCnoN
  const ClassifierEntry* classifier = nullptr;
  const NounEntry* noun = nullptr;
};

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline bool all_digits(std::string_view token) {
  if (token.empty()) return false;
  for (char ch : token)
    if (ch < '0' || ch > '9') return false;
  return true;
}

// Grammar: num := [1-9][0-9]* | "suu" | "nan".
inline std::optional<NumeralSpec> numeral_token(std::string_view token) {
  if (token == "suu") return NumeralSpec::some();
  if (token == "nan") return NumeralSpec::interrogative();
  if (token.size() > 1 && token.front() == '-' && all_digits(token.substr(1)))
    throw Error(ErrorCode::BadNumeral,
                "numeral '" + std::string(token) + "' must be a positive integer");
  if (!all_digits(token)) return std::nullopt;
  if (token.front() == '0')
    throw Error(ErrorCode::BadNumeral,
                "numeral '" + std::string(token) + "' must be a positive integer");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::BadNumeral,
                "numeral '" + std::string(token) + "' is out of range");
  return NumeralSpec::count(value);
}

inline const ClassifierEntry& classifier_or_throw(std::string_view token,
                                                  const Lexicon& lex) {
  const ClassifierEntry* cls = lex.find_classifier(token);
  if (!cls)
    throw Error(ErrorCode::UnknownLemma,
                "unknown classifier '" + std::string(token) + "'");
  return *cls;
}

inline const NounEntry& noun_or_throw(std::string_view token, const Lexicon& lex) {
  const NounEntry* noun = lex.find_noun(token);
  if (!noun)
    throw Error(ErrorCode::UnknownLemma, "unknown noun '" + std::string(token) + "'");
  return *noun;
}

}  // namespace detail

inline SourceNP parse_np(std::string_view line, const Lexicon& lex) {
  std::vector<std::string_view> tokens = detail::split_spaces(line);

  if (tokens.size() == 4) {
    if (tokens[2] != "no")
      throw Error(ErrorCode::PatternMismatch,
                  "expected 'no' between classifier and noun, got '" +
                      std::string(tokens[2]) + "'");
    std::optional<NumeralSpec> numeral = detail::numeral_token(tokens[0]);
    if (!numeral)
      throw Error(ErrorCode::PatternMismatch,
                  "expected a numeral, 'suu' or 'nan', got '" + std::string(tokens[0]) + "'");
    SourceNP np;
    np.pattern = Pattern::XCnoN;
    np.numeral = *numeral;
    np.classifier = &detail::classifier_or_throw(tokens[1], lex);
    np.noun = &detail::noun_or_throw(tokens[3], lex);
    return np;
  }

  if (tokens.size() == 3) {
    if (tokens[1] != "no")
      throw Error(ErrorCode::PatternMismatch,
                  "expected 'no' between noun and classifier, got '" +
                      std::string(tokens[1]) + "'");
    // Quantified N-no-C ("suu no hako") is not a phrase shape we accept.
    if (tokens[0] == "suu" || tokens[0] == "nan" || detail::all_digits(tokens[0]))
      throw Error(ErrorCode::PatternMismatch,
                  "numerals and quantifiers cannot head 'N no C'");
    SourceNP np;
    np.pattern = Pattern::NnoC;
    np.noun = &detail::noun_or_throw(tokens[0], lex);
    np.classifier = &detail::classifier_or_throw(tokens[2], lex);
    if (np.classifier->pos == PartOfSpeech::JosushiOnly)
      throw Error(ErrorCode::JosushiNounPhrase,
                  "classifier '" + np.classifier->ja +
                      "' is a josushi and cannot head a noun phrase");
    return np;
  }

  throw Error(ErrorCode::PatternMismatch,
              "expected 'X C no N' or 'N no C' (got " + std::to_string(tokens.size()) +
                  " token(s))");
}

// Inverse of parse_np for valid phrases; reproduces a canonical single-space
// line.
inline std::string render_source(const SourceNP& np) {
  auto numeral_text = [](const NumeralSpec& n) -> std::string {
    switch (n.kind) {
      case NumeralSpec::Kind::Count: return std::to_string(n.value);
      case NumeralSpec::Kind::Some: return "suu";
      case NumeralSpec::Kind::Interrogative: return "nan";
    }
    return "";
  };
  if (np.pattern == Pattern::XCnoN)
    return numeral_text(*np.numeral) + " " + np.classifier->ja + " no " + np.noun->ja;
  return np.noun->ja + " no " + np.classifier->ja;
}

}  // namespace kazoe

#endif  // KAZOE_NP_PARSER_HPP_
