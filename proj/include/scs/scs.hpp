// Copyright 2026 The scs-hierarchy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "scs/classic_greedy.hpp"
#include "scs/collapse.hpp"
#include "scs/dataset.hpp"
#include "scs/dot.hpp"
#include "scs/error.hpp"
#include "scs/eulerian.hpp"
#include "scs/fuzz.hpp"
#include "scs/greedy_hier.hpp"
#include "scs/hgraph.hpp"
#include "scs/oracles.hpp"
#include "scs/random.hpp"
#include "scs/strings.hpp"
