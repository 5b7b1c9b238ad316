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

#ifndef KAZOE_KAZOE_HPP_
#define KAZOE_KAZOE_HPP_

#include "kazoe/error.hpp"
#include "kazoe/lexicon.hpp"
#include "kazoe/np_parser.hpp"
#include "kazoe/pipeline.hpp"
#include "kazoe/realizer.hpp"
#include "kazoe/transfer.hpp"

#endif  // KAZOE_KAZOE_HPP_
