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
// The bilingual lexicon that drives every rule in the engine: nouns with
// countability preferences and classifiers with their type taxonomy.
//
// The on-disk format is a UTF-8 JSON object with two arrays:
//
//   {
//     "nouns": [
//       {"ja": "inu", "en": "dog", "countability": "fully_countable",
//        "semcats": ["animal"]},
//       ...
//     ],
//     "classifiers": [
//       {"ja": "tsu", "type": "unit_general", "pos": "josushi",
//        "en": "piece"},
//       ...
//     ]
//   }
//
// The schema is closed: unknown fields are a load error.  A lexicon is
// immutable once loaded and safe for any number of concurrent readers.

#ifndef KAZOE_LEXICON_HPP_
#define KAZOE_LEXICON_HPP_

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kazoe/error.hpp"

namespace kazoe {

// Five-way countability preference of an English noun.  "Strongly" and
// "weakly" countable nouns have both count and mass uses; the label records
// which use is the more natural one.
enum class Countability {
  FullyCountable,
  StronglyCountable,
  WeaklyCountable,
  Uncountable,
  PluraliaTantum,
};

// Seven leaves of the classifier taxonomy: four major types, with unit
// classifiers split three ways and metric classifiers split two ways.
enum class ClassifierType {
  UnitGeneral,
  UnitTypical,
  UnitSpecial,
  MetricMeasure,
  MetricContainer,
  Group,
  Species,
};

// Whether a classifier lemma can also stand alone as a common noun.  Only
// NounOnly/Both classifiers may head the "N no C" pattern.
enum class PartOfSpeech {
  JosushiOnly,
  NounOnly,
  Both,
};

inline std::string_view to_string(Countability c) {
  switch (c) {
    case Countability::FullyCountable: return "fully_countable";
    case Countability::StronglyCountable: return "strongly_countable";
    case Countability::WeaklyCountable: return "weakly_countable";
    case Countability::Uncountable: return "uncountable";
    case Countability::PluraliaTantum: return "pluralia_tantum";
  }
  return "?";
}

inline std::string_view to_string(ClassifierType t) {
  switch (t) {
    case ClassifierType::UnitGeneral: return "unit_general";
    case ClassifierType::UnitTypical: return "unit_typical";
    case ClassifierType::UnitSpecial: return "unit_special";
    case ClassifierType::MetricMeasure: return "metric_measure";
    case ClassifierType::MetricContainer: return "metric_container";
    case ClassifierType::Group: return "group";
    case ClassifierType::Species: return "species";
  }
  return "?";
}

inline std::string_view to_string(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::JosushiOnly: return "josushi";
    case PartOfSpeech::NounOnly: return "noun";
    case PartOfSpeech::Both: return "both";
  }
  return "?";
}

inline std::optional<Countability> countability_from_string(std::string_view s) {
  if (s == "fully_countable") return Countability::FullyCountable;
  if (s == "strongly_countable") return Countability::StronglyCountable;
  if (s == "weakly_countable") return Countability::WeaklyCountable;
  if (s == "uncountable") return Countability::Uncountable;
  if (s == "pluralia_tantum") return Countability::PluraliaTantum;
  return std::nullopt;
}

inline std::optional<ClassifierType> classifier_type_from_string(std::string_view s) {
  if (s == "unit_general") return ClassifierType::UnitGeneral;
  if (s == "unit_typical") return ClassifierType::UnitTypical;
  if (s == "unit_special") return ClassifierType::UnitSpecial;
  if (s == "metric_measure") return ClassifierType::MetricMeasure;
  if (s == "metric_container") return ClassifierType::MetricContainer;
  if (s == "group") return ClassifierType::Group;
  if (s == "species") return ClassifierType::Species;
  return std::nullopt;
}

inline std::optional<PartOfSpeech> pos_from_string(std::string_view s) {
  if (s == "josushi") return PartOfSpeech::JosushiOnly;
  if (s == "noun") return PartOfSpeech::NounOnly;
  if (s == "both") return PartOfSpeech::Both;
  return std::nullopt;
}

inline bool is_unit_type(ClassifierType t) {
  return t == ClassifierType::UnitGeneral || t == ClassifierType::UnitTypical ||
         t == ClassifierType::UnitSpecial;
}

// A measurable dimension a noun denotes (price, height, ...).  The optional
// adjective is the form used when the phrase turns ascriptive ("10m high").
struct AttributeSpec {
  std::string dimension;
  std::optional<std::string> adjective;

  bool operator==(const AttributeSpec&) const = default;
};

// Alternative English rendering of a noun, used when a plural-only
// translation blocks a unit-classifier realization.  Never plural-only
// itself.
struct AltTranslation {
  std::string en;
  Countability countability = Countability::FullyCountable;
  std::optional<std::string> plural;

  bool operator==(const AltTranslation&) const = default;
};

struct NounEntry {
  std::string ja;  // romanized lemma, lexicon key
  std::string en;  // singular citation form; for pluralia tantum, the plural surface
  Countability countability = Countability::FullyCountable;
  std::optional<std::string> plural;              // overrides regular pluralization
  std::optional<std::string> default_classifier;  // English word, e.g. "piece", "pair"
  std::vector<std::string> semcats;               // flat category tags
  std::optional<AttributeSpec> attribute;
  std::optional<AltTranslation> alt;

  bool has_semcat(std::string_view tag) const {
    return std::find(semcats.begin(), semcats.end(), tag) != semcats.end();
  }

  bool operator==(const NounEntry&) const = default;
};

// One category-conditioned translation of a classifier; rules are consulted
// in lexicon order, first match wins.
struct SemcatRule {
  std::string semcat;
  std::string en;

  bool operator==(const SemcatRule&) const = default;
};

struct ClassifierEntry {
  std::string ja;
  ClassifierType type = ClassifierType::UnitGeneral;
  PartOfSpeech pos = PartOfSpeech::JosushiOnly;
  std::string en;  // default English translation, singular
  std::optional<std::string> plural;
  std::vector<SemcatRule> by_semcat;
  std::optional<std::string> measures;  // dimension tag; metric_measure only
  bool joined = false;                  // "10m": no space, never pluralized; metric_measure only

  bool operator==(const ClassifierEntry&) const = default;
};

struct Lexicon {
  std::map<std::string, NounEntry, std::less<>> nouns;
  std::map<std::string, ClassifierEntry, std::less<>> classifiers;

  const NounEntry* find_noun(std::string_view ja) const {
    auto it = nouns.find(ja);
    return it == nouns.end() ? nullptr : &it->second;
  }

  const ClassifierEntry* find_classifier(std::string_view ja) const {
    auto it = classifiers.find(ja);
    return it == classifiers.end() ? nullptr : &it->second;
  }

  bool operator==(const Lexicon&) const = default;
};

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& msg) {
  throw Error(ErrorCode::SchemaViolation, msg);
}

[[noreturn]] inline void invariant_error(const std::string& msg) {
  throw Error(ErrorCode::InvariantViolation, msg);
}

inline std::string require_string(const json& obj, const char* field,
                                  const std::string& where) {
  if (!obj.contains(field))
    schema_error("missing field '" + std::string(field) + "' in " + where);
  const json& v = obj.at(field);
  if (!v.is_string())
    schema_error("field '" + std::string(field) + "' must be a string in " + where);
  std::string s = v.get<std::string>();
  if (s.empty())
    schema_error("field '" + std::string(field) + "' must be non-empty in " + where);
  return s;
}

inline std::optional<std::string> optional_string(const json& obj, const char* field,
                                                  const std::string& where) {
  if (!obj.contains(field)) return std::nullopt;
  const json& v = obj.at(field);
  if (!v.is_string())
    schema_error("field '" + std::string(field) + "' must be a string in " + where);
  return v.get<std::string>();
}

inline void check_fields(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      schema_error("unknown field '" + key + "' in " + where);
  }
}

inline NounEntry parse_noun(const json& obj) {
  if (!obj.is_object()) schema_error("noun entry must be an object");
  std::string where = obj.contains("ja") && obj.at("ja").is_string()
                          ? "noun '" + obj.at("ja").get<std::string>() + "'"
                          : "noun entry";
  check_fields(obj,
               {"ja", "en", "countability", "plural", "default_classifier",
                "semcats", "attribute", "alt"},
               where);

  NounEntry n;
  n.ja = require_string(obj, "ja", where);
  n.en = require_string(obj, "en", where);

  std::string c = require_string(obj, "countability", where);
  auto countability = countability_from_string(c);
  if (!countability) schema_error("invalid countability '" + c + "' in " + where);
  n.countability = *countability;

  n.plural = optional_string(obj, "plural", where);
  n.default_classifier = optional_string(obj, "default_classifier", where);

  if (obj.contains("semcats")) {
    const json& cats = obj.at("semcats");
    if (!cats.is_array()) schema_error("field 'semcats' must be an array in " + where);
    for (const json& tag : cats) {
      if (!tag.is_string())
        schema_error("semcats entries must be strings in " + where);
      n.semcats.push_back(tag.get<std::string>());
    }
  }

  if (obj.contains("attribute")) {
    const json& attr = obj.at("attribute");
    if (!attr.is_object()) schema_error("field 'attribute' must be an object in " + where);
    check_fields(attr, {"dimension", "adjective"}, where + " attribute");
    AttributeSpec spec;
    spec.dimension = require_string(attr, "dimension", where + " attribute");
    spec.adjective = optional_string(attr, "adjective", where + " attribute");
    n.attribute = std::move(spec);
  }

  if (obj.contains("alt")) {
    const json& alt = obj.at("alt");
    if (!alt.is_object()) schema_error("field 'alt' must be an object in " + where);
    check_fields(alt, {"en", "countability", "plural"}, where + " alt");
    AltTranslation a;
    a.en = require_string(alt, "en", where + " alt");
    std::string ac = require_string(alt, "countability", where + " alt");
    auto alt_countability = countability_from_string(ac);
    if (!alt_countability)
      schema_error("invalid countability '" + ac + "' in " + where + " alt");
    a.countability = *alt_countability;
    a.plural = optional_string(alt, "plural", where + " alt");
    n.alt = std::move(a);
  }

  // Entry-level invariants.
  if (n.countability == Countability::PluraliaTantum && n.plural)
    invariant_error(where + ": pluralia tantum carries the plural surface in 'en'; "
                            "an explicit 'plural' is not allowed");
  if (n.alt && n.alt->countability == Countability::PluraliaTantum)
    invariant_error(where + ": alternative translation must not be pluralia tantum");

  return n;
}

inline ClassifierEntry parse_classifier(const json& obj) {
  if (!obj.is_object()) schema_error("classifier entry must be an object");
  std::string where = obj.contains("ja") && obj.at("ja").is_string()
                          ? "classifier '" + obj.at("ja").get<std::string>() + "'"
                          : "classifier entry";
  check_fields(obj, {"ja", "type", "pos", "en", "plural", "by_semcat", "measures", "joined"},
               where);

  ClassifierEntry c;
  c.ja = require_string(obj, "ja", where);

  std::string t = require_string(obj, "type", where);
  auto type = classifier_type_from_string(t);
  if (!type) schema_error("invalid classifier type '" + t + "' in " + where);
  c.type = *type;

  if (obj.contains("pos")) {
    std::string p = require_string(obj, "pos", where);
    auto pos = pos_from_string(p);
    if (!pos) schema_error("invalid pos '" + p + "' in " + where);
    c.pos = *pos;
  }

  c.en = require_string(obj, "en", where);
  c.plural = optional_string(obj, "plural", where);

  if (obj.contains("by_semcat")) {
    const json& rules = obj.at("by_semcat");
    if (!rules.is_array()) schema_error("field 'by_semcat' must be an array in " + where);
    for (const json& rule : rules) {
      if (!rule.is_object()) schema_error("by_semcat entries must be objects in " + where);
      check_fields(rule, {"semcat", "en"}, where + " by_semcat");
      SemcatRule r;
      r.semcat = require_string(rule, "semcat", where + " by_semcat");
      r.en = require_string(rule, "en", where + " by_semcat");
      c.by_semcat.push_back(std::move(r));
    }
  }

  c.measures = optional_string(obj, "measures", where);

  if (obj.contains("joined")) {
    const json& j = obj.at("joined");
    if (!j.is_boolean()) schema_error("field 'joined' must be a boolean in " + where);
    c.joined = j.get<bool>();
  }

  // Entry-level invariants.
  if (c.measures && c.type != ClassifierType::MetricMeasure)
    invariant_error(where + ": 'measures' is only meaningful for metric_measure entries");
  if (c.joined && c.type != ClassifierType::MetricMeasure)
    invariant_error(where + ": 'joined' is only meaningful for metric_measure entries");
  for (std::size_t i = 0; i < c.by_semcat.size(); ++i) {
    for (std::size_t j = i + 1; j < c.by_semcat.size(); ++j) {
      if (c.by_semcat[i].semcat == c.by_semcat[j].semcat)
        invariant_error(where + ": duplicate by_semcat category '" +
                        c.by_semcat[i].semcat + "'");
      if (c.by_semcat[i].en == c.by_semcat[j].en && c.by_semcat[i].en != c.en)
        invariant_error(where + ": by_semcat translations must be distinct or equal "
                                "to the default ('" + c.by_semcat[i].en + "')");
    }
  }

  return c;
}

inline Lexicon lexicon_from_json(const json& doc) {
  if (!doc.is_object())
    schema_error("lexicon document must be a JSON object");
  check_fields(doc, {"nouns", "classifiers"}, "lexicon document");
  if (!doc.contains("nouns") || !doc.at("nouns").is_array())
    schema_error("lexicon document requires a 'nouns' array");
  if (!doc.contains("classifiers") || !doc.at("classifiers").is_array())
    schema_error("lexicon document requires a 'classifiers' array");

  Lexicon lex;
  for (const json& obj : doc.at("nouns")) {
    NounEntry n = parse_noun(obj);
    if (!lex.nouns.emplace(n.ja, n).second)
      invariant_error("duplicate noun entry '" + n.ja + "'");
  }
  for (const json& obj : doc.at("classifiers")) {
    ClassifierEntry c = parse_classifier(obj);
    if (!lex.classifiers.emplace(c.ja, c).second)
      invariant_error("duplicate classifier entry '" + c.ja + "'");
  }
  return lex;
}

}  // namespace detail

inline Lexicon load_lexicon(std::string_view text) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError,
                "lexicon syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return detail::lexicon_from_json(doc);
}

inline Lexicon load_lexicon(std::istream& in) {
  detail::json doc;
  try {
    doc = detail::json::parse(in);
  } catch (const detail::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError,
                "lexicon syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return detail::lexicon_from_json(doc);
}

// Emits a document that load_lexicon() reads back to an equal Lexicon.
inline std::string serialize_lexicon(const Lexicon& lex) {
  using ordered = nlohmann::ordered_json;
  ordered doc;
  doc["nouns"] = ordered::array();
  for (const auto& [ja, n] : lex.nouns) {
    ordered o;
    o["ja"] = n.ja;
    o["en"] = n.en;
    o["countability"] = to_string(n.countability);
    if (n.plural) o["plural"] = *n.plural;
    if (n.default_classifier) o["default_classifier"] = *n.default_classifier;
    if (!n.semcats.empty()) o["semcats"] = n.semcats;
    if (n.attribute) {
      ordered a;
      a["dimension"] = n.attribute->dimension;
      if (n.attribute->adjective) a["adjective"] = *n.attribute->adjective;
      o["attribute"] = std::move(a);
    }
    if (n.alt) {
      ordered a;
      a["en"] = n.alt->en;
      a["countability"] = to_string(n.alt->countability);
      if (n.alt->plural) a["plural"] = *n.alt->plural;
      o["alt"] = std::move(a);
    }
    doc["nouns"].push_back(std::move(o));
  }
  doc["classifiers"] = ordered::array();
  for (const auto& [ja, c] : lex.classifiers) {
    ordered o;
    o["ja"] = c.ja;
    o["type"] = to_string(c.type);
    o["pos"] = to_string(c.pos);
    o["en"] = c.en;
    if (c.plural) o["plural"] = *c.plural;
    if (!c.by_semcat.empty()) {
      ordered rules = ordered::array();
      for (const SemcatRule& r : c.by_semcat) {
        ordered rule;
        rule["semcat"] = r.semcat;
        rule["en"] = r.en;
        rules.push_back(std::move(rule));
      }
      o["by_semcat"] = std::move(rules);
    }
    if (c.measures) o["measures"] = *c.measures;
    if (c.joined) o["joined"] = true;
    doc["classifiers"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

// Non-fatal quality checks.  The shipped reference lexicon is curated until
// this returns an empty list.
inline std::vector<std::string> lint_lexicon(const Lexicon& lex) {
  std::vector<std::string> out;
  bool have_attribute_nouns = false;
  for (const auto& [ja, n] : lex.nouns) {
    if (n.attribute) have_attribute_nouns = true;
    if (n.countability == Countability::PluraliaTantum && !n.default_classifier && !n.alt)
      out.push_back("noun '" + ja + "': plural-only with neither a default classifier "
                    "nor an alternative translation; unit classifiers fall back to a "
                    "bare plural");
    if (n.countability == Countability::Uncountable && !n.default_classifier)
      out.push_back("noun '" + ja + "': uncountable without a default classifier; the "
                    "default strategy will fall back to 'piece'");
  }
  for (const auto& [ja, c] : lex.classifiers) {
    if (c.type == ClassifierType::MetricMeasure && !c.measures && have_attribute_nouns)
      out.push_back("classifier '" + ja + "': measure unit without a 'measures' "
                    "dimension; it can never pair with an attribute noun");
  }
  return out;
}

}  // namespace kazoe

#endif  // KAZOE_LEXICON_HPP_
