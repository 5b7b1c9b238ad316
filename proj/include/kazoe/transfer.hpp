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
// The transfer step: decide how a parsed phrase is rendered in English.
// For unit classifiers the decision is a strategy chosen from classifier
// type x noun countability; metric, group and species classifiers always
// keep the "X C of N" shape and differ in the number constraints they put
// on the embedded noun.  Nouns that denote attributes (price, height) leave
// the classifier construction entirely and take one of two attribute paths.

#ifndef KAZOE_TRANSFER_HPP_
#define KAZOE_TRANSFER_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kazoe/error.hpp"
#include "kazoe/lexicon.hpp"
#include "kazoe/np_parser.hpp"

namespace kazoe {

// The three possible unit-classifier translations.
//   Individuate: "X N"            classifier dropped, noun counted directly
//   Part:        "X C of N"      classifier translated by its equivalent
//   Default:     "X C of N"      classifier replaced by the noun's default
enum class Strategy { Individuate, Part, Default };

// Number constraint on the embedded noun of an "of" construction.
enum class EmbeddedNumber { SingularBare, Plural, AgreeWithHead };

// Default verb-agreement marker carried by a plan.  Singular pins the verb
// regardless of the head ("2 kg of paper is enough"); Plural marks normal,
// plural-capable agreement (containers); FollowNumber tracks the head.
enum class Agreement { Singular, Plural, FollowNumber };

struct AttributePlan {
  enum class Kind {
    AmountOfUnit,          // "the N of X C", classifier read as a counted thing
    SameDimensionMeasure,  // "a N of X C", the unit measures N's own dimension
  };

  Kind kind = Kind::AmountOfUnit;
  std::string dimension;

  bool operator==(const AttributePlan&) const = default;
};

// Resolved English surface material for the embedded noun.  base is the
// citation form (for pluralia tantum, the plural-only surface itself).
struct NounSurface {
  std::string base;
  std::optional<std::string> plural;  // explicit override of regular pluralization
  Countability countability = Countability::FullyCountable;

  bool operator==(const NounSurface&) const = default;
};

struct TransferPlan {
  std::optional<Strategy> strategy;          // unit classifiers only
  std::optional<std::string> classifier_en;  // absent when the classifier is dropped
  NounSurface noun;
  EmbeddedNumber embedded_number = EmbeddedNumber::SingularBare;
  Agreement agreement = Agreement::FollowNumber;
  std::optional<AttributePlan> attribute_path;
  std::vector<std::string> fallback_steps;   // plural-only fallback chain, for tracing
};

// Strategy grid over the three unit types and five countabilities.  Total;
// plural-only cells are refined afterwards by pluralia_fallback().
inline Strategy select_strategy(ClassifierType unit_type, Countability c) {
  switch (unit_type) {
    case ClassifierType::UnitGeneral:
      switch (c) {
        case Countability::FullyCountable:
        case Countability::StronglyCountable:
        case Countability::WeaklyCountable:
          return Strategy::Individuate;
        case Countability::Uncountable:
        case Countability::PluraliaTantum:
          return Strategy::Default;
      }
      break;
    case ClassifierType::UnitTypical:
      return c == Countability::FullyCountable ? Strategy::Individuate : Strategy::Part;
    case ClassifierType::UnitSpecial:
      return Strategy::Part;
    default:
      break;
  }
  throw std::invalid_argument("select_strategy requires a unit classifier type");
}

// The English word for a classifier in the context of a particular noun:
// first by_semcat rule whose category the noun carries wins, in lexicon
// order; otherwise the default translation.
inline std::string resolve_classifier_en(const ClassifierEntry& cls, const NounEntry& noun) {
  for (const SemcatRule& rule : cls.by_semcat)
    if (noun.has_semcat(rule.semcat)) return rule.en;
  return cls.en;
}

inline std::string default_classifier_for(const NounEntry& noun) {
  return noun.default_classifier.value_or("piece");
}

namespace detail {

inline NounSurface noun_surface(const NounEntry& noun) {
  return {noun.en, noun.plural, noun.countability};
}

inline NounSurface alt_surface(const AltTranslation& alt) {
  return {alt.en, alt.plural, alt.countability};
}

inline void apply_unit_strategy(TransferPlan& plan, Strategy s,
                                const ClassifierEntry& cls, const NounEntry& noun) {
  plan.strategy = s;
  switch (s) {
    case Strategy::Individuate:
      plan.classifier_en.reset();
      break;
    case Strategy::Part:
      plan.classifier_en = resolve_classifier_en(cls, noun);
      break;
    case Strategy::Default:
      plan.classifier_en = default_classifier_for(noun);
      break;
  }
}

}  // namespace detail

// Fallback chain for plural-only nouns under unit classifiers.  A plural-only
// noun is never individuated; instead:
//   1. the noun's own default classifier takes over ("1 pair of scissors") —
//      not available for special classifiers;
//   2. else, if an alternative translation exists, planning restarts against
//      it and its countability;
//   3. else the "X C of N" shape is kept with the bare plural surface —
//      except that special classifiers have no realization at all here.
inline TransferPlan pluralia_fallback(TransferPlan plan, const NounEntry& noun,
                                      const ClassifierEntry& cls) {
  if (noun.default_classifier && cls.type != ClassifierType::UnitSpecial) {
    plan.strategy = Strategy::Default;
    plan.classifier_en = *noun.default_classifier;
    plan.fallback_steps.push_back("default_classifier");
    return plan;
  }
  if (noun.alt) {
    plan.noun = detail::alt_surface(*noun.alt);
    detail::apply_unit_strategy(plan, select_strategy(cls.type, noun.alt->countability),
                                cls, noun);
    plan.fallback_steps.push_back("alt");
    return plan;
  }
  if (cls.type == ClassifierType::UnitSpecial)
    throw Error(ErrorCode::NoRealization,
                "no realization: special classifier '" + cls.ja +
                    "' with plural-only noun '" + noun.ja + "'");
  plan.fallback_steps.push_back("bare_plural");
  return plan;
}

inline TransferPlan plan(const SourceNP& np, const Lexicon& lex) {
  (void)lex;  // plans are a function of the resolved entries alone
  const ClassifierEntry& cls = *np.classifier;
  const NounEntry& noun = *np.noun;

  TransferPlan p;
  p.noun = detail::noun_surface(noun);

  // Attribute nouns bypass the classifier construction: the phrase denotes
  // the noun's dimension, measured or scoped by the classifier.
  if (noun.attribute) {
    bool same_dimension = np.pattern == Pattern::XCnoN &&
                          cls.type == ClassifierType::MetricMeasure &&
                          cls.measures && *cls.measures == noun.attribute->dimension;
    p.attribute_path = AttributePlan{same_dimension
                                         ? AttributePlan::Kind::SameDimensionMeasure
                                         : AttributePlan::Kind::AmountOfUnit,
                                     noun.attribute->dimension};
    // A general classifier contributes no counted word ("the price of 1"),
    // but under N-no-C an article needs a word to attach to.
    bool elide = cls.type == ClassifierType::UnitGeneral && np.pattern == Pattern::XCnoN;
    if (!elide) p.classifier_en = resolve_classifier_en(cls, noun);
    p.agreement = Agreement::FollowNumber;
    return p;
  }

  switch (cls.type) {
    case ClassifierType::UnitGeneral:
    case ClassifierType::UnitTypical:
    case ClassifierType::UnitSpecial:
      detail::apply_unit_strategy(p, select_strategy(cls.type, noun.countability), cls,
                                  noun);
      p.embedded_number = EmbeddedNumber::SingularBare;
      p.agreement = Agreement::FollowNumber;
      if (noun.countability == Countability::PluraliaTantum)
        p = pluralia_fallback(std::move(p), noun, cls);
      break;

    case ClassifierType::MetricMeasure:
    case ClassifierType::MetricContainer:
      p.classifier_en = resolve_classifier_en(cls, noun);
      p.embedded_number = (noun.countability == Countability::FullyCountable ||
                           noun.countability == Countability::PluraliaTantum)
                              ? EmbeddedNumber::Plural
                              : EmbeddedNumber::SingularBare;
      p.agreement = cls.type == ClassifierType::MetricMeasure ? Agreement::Singular
                                                              : Agreement::Plural;
      break;

    case ClassifierType::Group:
      p.classifier_en = resolve_classifier_en(cls, noun);
      p.embedded_number = (noun.countability == Countability::FullyCountable ||
                           noun.countability == Countability::StronglyCountable ||
                           noun.countability == Countability::PluraliaTantum)
                              ? EmbeddedNumber::Plural
                              : EmbeddedNumber::SingularBare;
      p.agreement = Agreement::FollowNumber;
      break;

    case ClassifierType::Species:
      p.classifier_en = resolve_classifier_en(cls, noun);
      p.embedded_number = (noun.countability == Countability::FullyCountable ||
                           noun.countability == Countability::StronglyCountable)
                              ? EmbeddedNumber::AgreeWithHead
                              : EmbeddedNumber::SingularBare;
      p.agreement = Agreement::FollowNumber;
      break;
  }
  return p;
}

}  // namespace kazoe

#endif  // KAZOE_TRANSFER_HPP_
