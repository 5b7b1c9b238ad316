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

#ifndef KAZOE_TESTS_TEST_UTIL_HPP_
#define KAZOE_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <kazoe/kazoe.hpp>

namespace kazoe_test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline const kazoe::Lexicon& reference_lexicon() {
  static const kazoe::Lexicon lex = kazoe::load_lexicon(read_file(KAZOE_LEXICON_PATH));
  return lex;
}

inline std::string surface(const std::string& line) {
  return kazoe::translate_np(line, reference_lexicon()).np.surface;
}

}  // namespace kazoe_test

#endif  // KAZOE_TESTS_TEST_UTIL_HPP_
