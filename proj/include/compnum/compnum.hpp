// Copyright 2026 The compnum Authors
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

#pragma once

#include "compnum/algorithms.hpp"
#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/constructions.hpp"
#include "compnum/errors.hpp"
#include "compnum/generators.hpp"
#include "compnum/graph.hpp"
#include "compnum/holes.hpp"
#include "compnum/hypotheses.hpp"
#include "compnum/io.hpp"
#include "compnum/lemmas.hpp"
#include "compnum/oracle.hpp"
#include "compnum/vertex.hpp"
