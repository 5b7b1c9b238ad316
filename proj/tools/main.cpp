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
// kazoe: translate Japanese quantified noun phrases into English.
//
//   kazoe translate --lexicon data/lexicon.json < phrases.txt
//   kazoe table --lexicon data/lexicon.json
//   kazoe lint --lexicon data/lexicon.json
//
// Exit codes: 0 success, 1 per-line or lint findings, 2 load failure.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kazoe/kazoe.hpp>

namespace {

kazoe::Lexicon load_or_exit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "kazoe: cannot open lexicon file '" << path << "'\n";
    std::exit(2);
  }
  try {
    return kazoe::load_lexicon(in);
  } catch (const kazoe::Error& e) {
    std::cerr << "kazoe: " << kazoe::to_string(e.code()) << ": " << e.what() << "\n";
    std::exit(2);
  }
}

int run_translate(const std::string& lexicon_path, bool with_agreement, bool with_explain,
                  kazoe::NpRole role) {
  kazoe::Lexicon lex = load_or_exit(lexicon_path);
  bool any_error = false;
  std::string line;
  int line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    try {
      kazoe::Translation t = kazoe::translate_np(line, lex);
      std::string out = t.np.surface;
      if (role != kazoe::NpRole::Referential && t.np.attribute)
        out = kazoe::convert_attribute_np(t.np, role);
      if (with_agreement)
        out += t.np.agreement == kazoe::NumberFeature::Plural ? "\tpl" : "\tsg";
      if (with_explain) out += "\t" + kazoe::explain_trace(t);
      std::cout << out << "\n";
    } catch (const kazoe::Error& e) {
      any_error = true;
      std::cerr << "line " << line_no << ": " << kazoe::to_string(e.code()) << ": "
                << e.what() << "\n";
      std::cout << "ERROR\n";
    }
  }
  return any_error ? 1 : 0;
}

// The demonstration grids: one row per countability, rendered live through
// the full pipeline.  Cells with no realization print "---".
struct TableSpec {
  std::string title;
  std::vector<std::string> columns;
  // row label -> one (numeral, classifier, noun) triple per column
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
};

std::string cell(const kazoe::Lexicon& lex, const std::string& line) {
  try {
    return kazoe::translate_np(line, lex).np.surface;
  } catch (const kazoe::Error& e) {
    if (e.code() == kazoe::ErrorCode::NoRealization) return "---";
    throw;
  }
}

int run_table(const std::string& lexicon_path) {
  kazoe::Lexicon lex = load_or_exit(lexicon_path);

  std::vector<TableSpec> tables;
  tables.push_back({"unit",
                    {"general", "typical", "special"},
                    {
                        {"fully_countable", {"1 tsu no inu", "1 teki no inu", "1 kire no inu"}},
                        {"strongly_countable",
                         {"1 tsu no keeki", "1 kakera no keeki", "1 kire no keeki"}},
                        {"weakly_countable", {"1 tsu no ke", "1 suji no ke", "1 kire no ke"}},
                        {"uncountable",
                         {"1 tsu no jouhou", "1 tsubu no jouhou", "1 kire no jouhou"}},
                        {"pluralia_tantum",
                         {"1 tsu no hasami", "1 teki no hasami", "1 kire no hasami"}},
                    }});
  tables.push_back({"metric",
                    {"container", "measure"},
                    {
                        {"fully_countable", {"1 hako no inu", "1 kg no ari"}},
                        {"strongly_countable", {"1 hako no keeki", "1 kg no keeki"}},
                        {"weakly_countable", {"1 hako no biiru", "1 kg no biiru"}},
                        {"uncountable", {"1 hako no kagu", "1 kg no kagu"}},
                        {"pluralia_tantum", {"1 hako no hasami", "1 kg no hasami"}},
                    }});
  tables.push_back({"group_species",
                    {"group", "species_sg", "species_pl"},
                    {
                        {"fully_countable",
                         {"1 setto no inu", "1 shurui no inu", "2 shurui no inu"}},
                        {"strongly_countable",
                         {"1 setto no keeki", "1 shurui no keeki", "2 shurui no keeki"}},
                        {"weakly_countable",
                         {"1 setto no biiru", "1 shurui no biiru", "2 shurui no biiru"}},
                        {"uncountable",
                         {"1 setto no jouhou", "1 shurui no jouhou", "2 shurui no jouhou"}},
                        {"pluralia_tantum",
                         {"1 setto no hasami", "1 shurui no hasami", "2 shurui no hasami"}},
                    }});

  try {
    bool first = true;
    for (const TableSpec& table : tables) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << "# " << table.title << "\n";
      std::cout << "noun_type";
      for (const std::string& c : table.columns) std::cout << "\t" << c;
      std::cout << "\n";
      for (const auto& [label, lines] : table.rows) {
        std::cout << label;
        for (const std::string& line : lines) std::cout << "\t" << cell(lex, line);
        std::cout << "\n";
      }
    }
  } catch (const kazoe::Error& e) {
    std::cerr << "kazoe: " << kazoe::to_string(e.code()) << ": " << e.what()
              << " (reference lexicon incomplete?)\n";
    return 2;
  }
  return 0;
}

int run_lint(const std::string& lexicon_path) {
  kazoe::Lexicon lex = load_or_exit(lexicon_path);
  std::vector<std::string> diagnostics = kazoe::lint_lexicon(lex);
  for (const std::string& d : diagnostics) std::cout << d << "\n";
  return diagnostics.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Japanese numeral-classifier noun phrases to English"};
  app.require_subcommand(1);

  std::string lexicon_path;
  bool with_agreement = false;
  bool with_explain = false;
  kazoe::NpRole role = kazoe::NpRole::Referential;
  const std::map<std::string, kazoe::NpRole> role_names{
      {"referential", kazoe::NpRole::Referential},
      {"ascriptive", kazoe::NpRole::Ascriptive},
      {"premodifier", kazoe::NpRole::Premodifier},
  };

  CLI::App* translate = app.add_subcommand(
      "translate", "Translate phrases from stdin, one per line");
  translate->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  translate->add_flag("--agreement", with_agreement,
                      "Append the default verb agreement (sg|pl)");
  translate->add_flag("--explain", with_explain, "Append a key=value decision trace");
  translate
      ->add_option("--role", role,
                   "Render measured-attribute phrases for this syntactic role")
      ->transform(CLI::CheckedTransformer(role_names, CLI::ignore_case));

  CLI::App* table = app.add_subcommand(
      "table", "Print the classifier-type x countability demonstration tables");
  table->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();

  CLI::App* lint = app.add_subcommand("lint", "Report lexicon quality warnings");
  lint->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (translate->parsed())
    return run_translate(lexicon_path, with_agreement, with_explain, role);
  if (table->parsed()) return run_table(lexicon_path);
  return run_lint(lexicon_path);
}
