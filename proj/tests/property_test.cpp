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
// Invariant checks over generated inputs.  Generators are seeded, so runs
// are reproducible.

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include <kazoe/kazoe.hpp>

#include "test_util.hpp"

using kazoe::ClassifierEntry;
using kazoe::ClassifierType;
using kazoe::Countability;
using kazoe::EnglishNP;
using kazoe::Error;
using kazoe::ErrorCode;
using kazoe::Lexicon;
using kazoe::NounEntry;
using kazoe::PartOfSpeech;
using kazoe::SourceNP;
using kazoe::Strategy;
using kazoe::TransferPlan;
using kazoe_test::reference_lexicon;

namespace {

std::string random_word(std::mt19937& rng) {
  static const char* onsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r",
                                 "s", "t", "v", "w", "bl", "st", "tr", "ch", "sh"};
  static const char* vowels[] = {"a", "e", "i", "o", "u"};
  static const char* codas[] = {"", "b", "d", "g", "k", "l", "m", "n", "p", "r",
                                "t", "x", "s", "z", "ch", "sh", "y"};
  std::uniform_int_distribution<int> pick_onset(0, 18), pick_vowel(0, 4),
      pick_coda(0, 16), pick_len(1, 2);
  std::string w;
  int syllables = pick_len(rng);
  for (int i = 0; i < syllables; ++i) {
    w += onsets[pick_onset(rng)];
    w += vowels[pick_vowel(rng)];
  }
  w += codas[pick_coda(rng)];
  return w;
}

NounEntry random_noun(std::mt19937& rng, Countability c, int index) {
  NounEntry n;
  n.ja = "n" + std::to_string(index);
  n.en = random_word(rng);
  if (c == Countability::PluraliaTantum) n.en += "s";  // a plural-looking surface
  n.countability = c;
  std::uniform_int_distribution<int> coin(0, 3);
  if (c != Countability::PluraliaTantum && coin(rng) == 0)
    n.plural = n.en + "en";  // irregular override
  if (coin(rng) <= 1) n.default_classifier = random_word(rng);
  if (coin(rng) == 0) {
    kazoe::AltTranslation alt;
    alt.en = random_word(rng);
    alt.countability = coin(rng) <= 1 ? Countability::FullyCountable
                                      : Countability::Uncountable;
    n.alt = alt;
  }
  return n;
}

const kazoe::NumeralSpec kNumerals[] = {
    kazoe::NumeralSpec::count(1),
    kazoe::NumeralSpec::count(2),
    kazoe::NumeralSpec::some(),
    kazoe::NumeralSpec::interrogative(),
};

// All valid lines over the reference lexicon: every classifier x noun x
// numeral, plus every legal N-no-C pair.
std::vector<std::string> reference_corpus() {
  std::vector<std::string> lines;
  const Lexicon& lex = reference_lexicon();
  for (const char* num : {"1", "2", "suu", "nan"})
    for (const auto& [cja, cls] : lex.classifiers)
      for (const auto& [nja, noun] : lex.nouns)
        lines.push_back(std::string(num) + " " + cja + " no " + nja);
  for (const auto& [cja, cls] : lex.classifiers) {
    if (cls.pos == PartOfSpeech::JosushiOnly) continue;
    for (const auto& [nja, noun] : lex.nouns)
      lines.push_back(nja + " no " + cja);
  }
  return lines;
}

std::vector<std::string> translate_corpus(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const std::string& line : lines) {
    try {
      kazoe::Translation t = kazoe::translate_np(line, reference_lexicon());
      out.push_back(t.np.surface + "\t" + kazoe::explain_trace(t));
    } catch (const Error& e) {
      out.push_back(std::string("ERROR\t") + std::string(kazoe::to_string(e.code())));
    }
  }
  return out;
}

std::size_t count_of(const std::string& s) {
  std::size_t n = 0, pos = 0;
  while ((pos = s.find(" of ", pos)) != std::string::npos) {
    ++n;
    pos += 4;
  }
  return n;
}

TEST(Properties, PluralOnlyNounsAreNeverIndividuated) {
  std::mt19937 rng(20260810);
  Lexicon lex;
  lex.classifiers["gen"] = {"gen", ClassifierType::UnitGeneral,
                            PartOfSpeech::JosushiOnly, "piece", {}, {}, {}, false};
  lex.classifiers["typ"] = {"typ", ClassifierType::UnitTypical,
                            PartOfSpeech::JosushiOnly, "lump", {}, {}, {}, false};
  lex.classifiers["spc"] = {"spc", ClassifierType::UnitSpecial,
                            PartOfSpeech::JosushiOnly, "slice", {}, {}, {}, false};
  int index = 0;
  for (Countability c :
       {Countability::FullyCountable, Countability::StronglyCountable,
        Countability::WeaklyCountable, Countability::Uncountable,
        Countability::PluraliaTantum})
    for (int i = 0; i < 200; ++i) {
      NounEntry n = random_noun(rng, c, index++);
      lex.nouns[n.ja] = n;
    }

  for (const auto& [nja, noun] : lex.nouns) {
    for (const auto& [cja, cls] : lex.classifiers) {
      for (const kazoe::NumeralSpec& numeral : kNumerals) {
        SourceNP np;
        np.pattern = kazoe::Pattern::XCnoN;
        np.numeral = numeral;
        np.classifier = &cls;
        np.noun = &noun;
        TransferPlan p;
        try {
          p = kazoe::plan(np, lex);
        } catch (const Error& e) {
          // Only the special x plural-only dead end may refuse.
          EXPECT_EQ(e.code(), ErrorCode::NoRealization);
          EXPECT_EQ(cls.type, ClassifierType::UnitSpecial);
          EXPECT_EQ(noun.countability, Countability::PluraliaTantum);
          continue;
        }
        if (p.noun.countability == Countability::PluraliaTantum) {
          EXPECT_NE(p.strategy, Strategy::Individuate) << nja << " " << cja;
        }
        // A plural-only source noun keeps its plural surface unless an
        // alternative translation replaced it.
        if (noun.countability == Countability::PluraliaTantum &&
            (p.fallback_steps.empty() || p.fallback_steps[0] != "alt")) {
          EXPECT_EQ(p.noun.base, noun.en);
        }

        EnglishNP out = kazoe::realize(np, p, lex);
        if (p.strategy == Strategy::Part || p.strategy == Strategy::Default) {
          // Embedded noun surfaces bare: no article, no plural suffix.
          std::string tail = out.surface.substr(out.surface.rfind(" of ") + 4);
          EXPECT_EQ(tail, p.noun.base) << out.surface;
        }
      }
    }
  }
}

TEST(Properties, EmbeddedNumberGridIsExhaustive) {
  using EN = kazoe::EmbeddedNumber;
  Lexicon lex;
  lex.classifiers["gen"] = {"gen", ClassifierType::UnitGeneral,
                            PartOfSpeech::JosushiOnly, "piece", {}, {}, {}, false};
  lex.classifiers["typ"] = {"typ", ClassifierType::UnitTypical,
                            PartOfSpeech::JosushiOnly, "lump", {}, {}, {}, false};
  lex.classifiers["spc"] = {"spc", ClassifierType::UnitSpecial,
                            PartOfSpeech::JosushiOnly, "slice", {}, {}, {}, false};
  lex.classifiers["mea"] = {"mea", ClassifierType::MetricMeasure,
                            PartOfSpeech::JosushiOnly, "kg", {}, {}, {}, false};
  lex.classifiers["con"] = {"con", ClassifierType::MetricContainer,
                            PartOfSpeech::Both, "box", {}, {}, {}, false};
  lex.classifiers["grp"] = {"grp", ClassifierType::Group, PartOfSpeech::Both,
                            "set", {}, {}, {}, false};
  lex.classifiers["spe"] = {"spe", ClassifierType::Species, PartOfSpeech::Both,
                            "kind", {}, {}, {}, false};
  int index = 0;
  for (Countability c :
       {Countability::FullyCountable, Countability::StronglyCountable,
        Countability::WeaklyCountable, Countability::Uncountable,
        Countability::PluraliaTantum}) {
    NounEntry n;
    n.ja = "n" + std::to_string(index++);
    n.en = c == Countability::PluraliaTantum ? "things" : "thing";
    n.countability = c;
    n.default_classifier = "piece";  // keeps every unit cell realizable
    lex.nouns[n.ja] = n;
  }

  auto expected = [](ClassifierType t, Countability c) -> EN {
    bool fc = c == Countability::FullyCountable;
    bool sc = c == Countability::StronglyCountable;
    bool pt = c == Countability::PluraliaTantum;
    switch (t) {
      case ClassifierType::MetricMeasure:
      case ClassifierType::MetricContainer:
        return fc || pt ? EN::Plural : EN::SingularBare;
      case ClassifierType::Group:
        return fc || sc || pt ? EN::Plural : EN::SingularBare;
      case ClassifierType::Species:
        return fc || sc ? EN::AgreeWithHead : EN::SingularBare;
      default:
        return EN::SingularBare;
    }
  };

  for (const auto& [cja, cls] : lex.classifiers) {
    for (const auto& [nja, noun] : lex.nouns) {
      SourceNP np;
      np.pattern = kazoe::Pattern::XCnoN;
      np.numeral = kazoe::NumeralSpec::count(2);
      np.classifier = &cls;
      np.noun = &noun;
      TransferPlan p;
      try {
        p = kazoe::plan(np, lex);
      } catch (const Error& e) {
        // The one dead cell: special x plural-only with no way out.
        EXPECT_EQ(e.code(), ErrorCode::NoRealization);
        EXPECT_EQ(cls.type, ClassifierType::UnitSpecial);
        EXPECT_EQ(noun.countability, Countability::PluraliaTantum);
        continue;
      }
      EXPECT_EQ(p.embedded_number, expected(cls.type, noun.countability))
          << cja << " x " << kazoe::to_string(noun.countability);
    }
  }
}

TEST(Properties, OfCountMatchesShape) {
  for (const std::string& line : reference_corpus()) {
    kazoe::Translation t;
    try {
      t = kazoe::translate_np(line, reference_lexicon());
    } catch (const Error&) {
      continue;
    }
    if (t.plan.attribute_path) continue;  // "the price of 1 cup" has its own shape
    if (t.plan.strategy == Strategy::Individuate)
      EXPECT_EQ(count_of(t.np.surface), 0u) << line << " -> " << t.np.surface;
    else
      EXPECT_EQ(count_of(t.np.surface), 1u) << line << " -> " << t.np.surface;
  }
}

TEST(Properties, ClassifierWordPluralizesWithTheNumeral) {
  const Lexicon& lex = reference_lexicon();
  for (const auto& [cja, cls] : lex.classifiers) {
    if (kazoe::is_unit_type(cls.type)) continue;
    for (const auto& [nja, noun] : lex.nouns) {
      if (noun.attribute) continue;
      auto head_word = [&](const char* num) {
        std::string s =
            kazoe_test::surface(std::string(num) + " " + cja + " no " + nja);
        std::string head = s.substr(0, s.find(" of "));
        return head.substr(head.rfind(' ') + 1);
      };
      std::string word = kazoe::resolve_classifier_en(cls, noun);
      if (cls.joined) {
        // The unit merges into the numeral token and never pluralizes.
        std::string s = kazoe_test::surface("2 " + cja + " no " + nja);
        EXPECT_EQ(s.rfind("2" + word + " of", 0), 0u) << s;
      } else {
        std::string plural_word = word == cls.en && cls.plural
                                      ? *cls.plural
                                      : kazoe::pluralize(word);
        EXPECT_EQ(head_word("1"), word) << cja;
        EXPECT_EQ(head_word("2"), plural_word) << cja;
        EXPECT_EQ(head_word("suu"), plural_word) << cja;
        EXPECT_EQ(head_word("nan"), plural_word) << cja;
      }
    }
  }
}

TEST(Properties, NnoCMatchesArticleSubstitution) {
  const Lexicon& lex = reference_lexicon();
  for (const auto& [cja, cls] : lex.classifiers) {
    if (cls.pos == PartOfSpeech::JosushiOnly) continue;
    if (cls.type != ClassifierType::MetricContainer && cls.type != ClassifierType::Group)
      continue;
    for (const auto& [nja, noun] : lex.nouns) {
      std::string n_no_c = kazoe_test::surface(nja + " no " + cja);
      std::string xc = kazoe_test::surface("1 " + cja + " no " + nja);
      std::string word = kazoe::resolve_classifier_en(cls, noun);
      std::size_t pos = xc.find('1');
      ASSERT_NE(pos, std::string::npos) << xc;
      std::string substituted = xc.substr(0, pos) +
                                std::string(kazoe::indefinite_article(word)) +
                                xc.substr(pos + 1);
      EXPECT_EQ(n_no_c, substituted) << nja << " no " << cja;
    }
  }
}

TEST(Properties, ParseRenderRoundTrip) {
  for (const std::string& line : reference_corpus()) {
    SourceNP np = kazoe::parse_np(line, reference_lexicon());
    EXPECT_EQ(kazoe::render_source(np), line);
  }
}

TEST(Properties, TranslationIsDeterministic) {
  std::vector<std::string> corpus = reference_corpus();
  EXPECT_EQ(translate_corpus(corpus), translate_corpus(corpus));
}

}  // namespace
