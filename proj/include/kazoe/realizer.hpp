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
// English surface realization: numbers, articles, plural morphology, and
// assembly of a TransferPlan into the final noun phrase with a default
// verb-agreement feature.

#ifndef KAZOE_REALIZER_HPP_
#define KAZOE_REALIZER_HPP_

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "kazoe/error.hpp"
#include "kazoe/lexicon.hpp"
#include "kazoe/np_parser.hpp"
#include "kazoe/transfer.hpp"

namespace kazoe {

enum class NumberFeature { Singular, Plural };

// Syntactic role an attribute phrase is converted for.
enum class NpRole { Referential, Ascriptive, Premodifier };

// Pieces of a measured-attribute phrase ("a height of 10m"), kept so the
// phrase can be re-cast for other roles ("10m high").
struct AttributeSurface {
  std::string measure_phrase;  // "10m", "10 yen"
  std::string noun_en;         // "height", "price"
  std::optional<std::string> adjective;
};

struct EnglishNP {
  std::string surface;
  NumberFeature head_number = NumberFeature::Singular;
  NumberFeature agreement = NumberFeature::Singular;  // default verb agreement
  std::optional<AttributeSurface> attribute;
};

// Regular English pluralization; an explicit form from the lexicon wins.
inline std::string pluralize(std::string_view word,
                             std::optional<std::string_view> explicit_plural = {}) {
  if (explicit_plural) return std::string(*explicit_plural);
  std::string out(word);
  auto ends_with = [&](std::string_view suffix) {
    return word.size() >= suffix.size() &&
           word.substr(word.size() - suffix.size()) == suffix;
  };
  auto is_vowel = [](char ch) {
    return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") ||
      ends_with("sh")) {
    out += "es";
  } else if (word.size() >= 2 && word.back() == 'y' && !is_vowel(word[word.size() - 2])) {
    out.replace(out.size() - 1, 1, "ies");
  } else {
    out += "s";
  }
  return out;
}

namespace detail {

inline bool starts_with_any(std::string_view word,
                            std::initializer_list<std::string_view> prefixes) {
  for (std::string_view p : prefixes)
    if (word.substr(0, p.size()) == p) return true;
  return false;
}

}  // namespace detail

// "a" vs "an" by spelling, with a fixed exception list for vowel letters
// pronounced with a consonant ("a unit") and silent h ("an hour").
inline std::string_view indefinite_article(std::string_view word) {
  std::string lower;
  lower.reserve(word.size());
  for (char ch : word) lower.push_back(static_cast<char>(std::tolower(ch)));

  // Silent h.
  if (detail::starts_with_any(lower, {"heir", "honest", "honor", "honour", "hour"}))
    return "an";
  char first = lower.empty() ? '\0' : lower[0];
  if (first == 'a' || first == 'e' || first == 'i' || first == 'o' || first == 'u') {
    // Vowel letter, consonant sound ("ju...", "w...").
    if (detail::starts_with_any(lower, {"eu", "ewe", "once", "one", "ubiq", "uku",
                                        "uni", "use", "usu", "ute", "util"}))
      return "a";
    return "an";
  }
  return "a";
}

// Numerals surface as digits ("2 dogs"); the quantifier and interrogative
// depend on whether the surface head can be counted.
inline std::string render_numeral(const NumeralSpec& numeral, bool head_countable) {
  switch (numeral.kind) {
    case NumeralSpec::Kind::Count: return std::to_string(numeral.value);
    case NumeralSpec::Kind::Some: return "some";
    case NumeralSpec::Kind::Interrogative: return head_countable ? "how many" : "how much";
  }
  return "";
}

namespace detail {

inline bool plural_context(const NumeralSpec& numeral) {
  switch (numeral.kind) {
    case NumeralSpec::Kind::Count: return numeral.value > 1;
    case NumeralSpec::Kind::Some:
    case NumeralSpec::Kind::Interrogative: return true;
  }
  return false;
}

inline std::string noun_form(const NounSurface& noun, bool plural_wanted) {
  // Plural-only nouns keep their surface everywhere.
  if (noun.countability == Countability::PluraliaTantum) return noun.base;
  if (!plural_wanted) return noun.base;
  if (noun.plural) return *noun.plural;
  return pluralize(noun.base);
}

// The classifier's explicit plural override only applies to its own default
// translation; category-conditioned words pluralize regularly.
inline std::string classifier_form(const ClassifierEntry& cls, const std::string& word,
                                   bool plural_wanted) {
  if (cls.joined || !plural_wanted) return word;
  if (word == cls.en && cls.plural) return *cls.plural;
  return pluralize(word);
}

// "10m" when joined, "2 kg" otherwise.  Joined units merge with digits only
// ("some m", not "somem") and never pluralize.
inline std::string measure_phrase(const NumeralSpec& numeral, const ClassifierEntry& cls,
                                  const std::string& unit_word, bool plural_wanted) {
  std::string num = render_numeral(numeral, true);
  if (cls.joined) {
    if (numeral.kind == NumeralSpec::Kind::Count) return num + unit_word;
    return num + " " + unit_word;
  }
  return num + " " + classifier_form(cls, unit_word, plural_wanted);
}

}  // namespace detail

inline EnglishNP realize(const SourceNP& np, const TransferPlan& plan, const Lexicon& lex) {
  (void)lex;
  const ClassifierEntry& cls = *np.classifier;
  const bool xc = np.pattern == Pattern::XCnoN;
  const bool plural_head = xc && detail::plural_context(*np.numeral);

  auto embedded = [&]() {
    switch (plan.embedded_number) {
      case EmbeddedNumber::SingularBare: return detail::noun_form(plan.noun, false);
      case EmbeddedNumber::Plural: return detail::noun_form(plan.noun, true);
      case EmbeddedNumber::AgreeWithHead: return detail::noun_form(plan.noun, plural_head);
    }
    return plan.noun.base;
  };

  EnglishNP out;

  if (plan.attribute_path) {
    if (plan.attribute_path->kind == AttributePlan::Kind::SameDimensionMeasure) {
      // "a height of 10m"
      std::string measure =
          detail::measure_phrase(*np.numeral, cls, *plan.classifier_en, plural_head);
      out.surface = std::string(indefinite_article(plan.noun.base)) + " " +
                    plan.noun.base + " of " + measure;
      out.attribute = AttributeSurface{std::move(measure), plan.noun.base,
                                       np.noun->attribute ? np.noun->attribute->adjective
                                                          : std::nullopt};
    } else {
      // "the price of 1 cup"; a dropped general classifier leaves the bare
      // numeral: "the price of 1".
      std::string counted;
      if (xc) {
        counted = plan.classifier_en
                      ? detail::measure_phrase(*np.numeral, cls, *plan.classifier_en,
                                               plural_head)
                      : render_numeral(*np.numeral, true);
      } else {
        const std::string& word = *plan.classifier_en;
        counted = std::string(indefinite_article(word)) + " " +
                  detail::classifier_form(cls, word, false);
      }
      out.surface = "the " + plan.noun.base + " of " + counted;
    }
    out.head_number = NumberFeature::Singular;
  } else if (plan.strategy == Strategy::Individuate) {
    if (xc) {
      std::string form = detail::noun_form(plan.noun, plural_head);
      out.surface = render_numeral(*np.numeral, true) + " " + form;
      out.head_number = plural_head ? NumberFeature::Plural : NumberFeature::Singular;
    } else {
      std::string form = detail::noun_form(plan.noun, false);
      out.surface = std::string(indefinite_article(form)) + " " + form;
      out.head_number = NumberFeature::Singular;
    }
  } else {
    // Partitive shape: HEAD of EMBEDDED.
    std::string head;
    if (xc) {
      head = detail::measure_phrase(*np.numeral, cls, *plan.classifier_en, plural_head);
      out.head_number = plural_head ? NumberFeature::Plural : NumberFeature::Singular;
    } else {
      const std::string& word = *plan.classifier_en;
      head = std::string(indefinite_article(word)) + " " +
             detail::classifier_form(cls, word, false);
      out.head_number = NumberFeature::Singular;
    }
    out.surface = head + " of " + embedded();
  }

  switch (plan.agreement) {
    case Agreement::Singular:
      out.agreement = NumberFeature::Singular;
      break;
    case Agreement::Plural:        // plural-capable: normal agreement with the head
    case Agreement::FollowNumber:
      out.agreement = out.head_number;
      break;
  }
  return out;
}

// Re-casts a measured-attribute phrase for its syntactic role.  Referential
// keeps the realized NP; ascriptive and prenominal use both render the bare
// measure plus adjective ("10m high") or an "in"-phrase ("10 yen in price").
inline std::string convert_attribute_np(const EnglishNP& np, NpRole role) {
  if (!np.attribute)
    throw Error(ErrorCode::NotAttributeNp,
                "role conversion requires a measured-attribute noun phrase");
  if (role == NpRole::Referential) return np.surface;
  const AttributeSurface& a = *np.attribute;
  if (a.adjective) return a.measure_phrase + " " + *a.adjective;
  return a.measure_phrase + " in " + a.noun_en;
}

}  // namespace kazoe

#endif  // KAZOE_REALIZER_HPP_
