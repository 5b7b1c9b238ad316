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

#ifndef KAZOE_PIPELINE_HPP_
#define KAZOE_PIPELINE_HPP_

#include <string>
#include <string_view>

#include "kazoe/lexicon.hpp"
#include "kazoe/np_parser.hpp"
#include "kazoe/realizer.hpp"
#include "kazoe/transfer.hpp"

namespace kazoe {

// One line through the whole pipeline, with the intermediate results kept
// for inspection.
struct Translation {
  SourceNP source;
  TransferPlan plan;
  EnglishNP np;
};

inline Translation translate_np(std::string_view line, const Lexicon& lex) {
  Translation t;
  t.source = parse_np(line, lex);
  t.plan = plan(t.source, lex);
  t.np = realize(t.source, t.plan, lex);
  return t;
}

namespace detail {

inline std::string_view trace_name(Strategy s) {
  switch (s) {
    case Strategy::Individuate: return "individuate";
    case Strategy::Part: return "part";
    case Strategy::Default: return "default";
  }
  return "?";
}

inline std::string_view trace_name(EmbeddedNumber e) {
  switch (e) {
    case EmbeddedNumber::SingularBare: return "singular_bare";
    case EmbeddedNumber::Plural: return "plural";
    case EmbeddedNumber::AgreeWithHead: return "agree_with_head";
  }
  return "?";
}

inline std::string_view trace_name(Agreement a) {
  switch (a) {
    case Agreement::Singular: return "singular";
    case Agreement::Plural: return "plural";
    case Agreement::FollowNumber: return "follow_number";
  }
  return "?";
}

}  // namespace detail

// Compact key=value trace of the decisions behind a translation, suitable
// for one-line diagnostic output.
inline std::string explain_trace(const Translation& t) {
  std::string out;
  auto add = [&](std::string_view key, std::string_view value) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  };

  add("pattern", t.source.pattern == Pattern::XCnoN ? "xc_no_n" : "n_no_c");
  add("ctype", to_string(t.source.classifier->type));
  add("countability", to_string(t.source.noun->countability));
  if (t.plan.strategy) add("strategy", detail::trace_name(*t.plan.strategy));
  if (!t.plan.fallback_steps.empty()) {
    std::string steps;
    for (const std::string& s : t.plan.fallback_steps) {
      if (!steps.empty()) steps += ',';
      steps += s;
    }
    add("fallback", steps);
    for (const std::string& s : t.plan.fallback_steps)
      if (s == "alt") add("alt", t.plan.noun.base);
  }
  if (t.plan.attribute_path) {
    add("attribute",
        t.plan.attribute_path->kind == AttributePlan::Kind::SameDimensionMeasure
            ? "same_dimension_measure"
            : "amount_of_unit");
    // "the price of 1": the counted referent is elided, not translated.
    if (!t.plan.classifier_en) add("elided", "thing");
  }
  add("embedded", detail::trace_name(t.plan.embedded_number));
  add("agreement", detail::trace_name(t.plan.agreement));
  return out;
}

}  // namespace kazoe

#endif  // KAZOE_PIPELINE_HPP_
