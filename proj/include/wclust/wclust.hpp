// Copyright 2026 The wclust Authors
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

// Umbrella header.

#include "wclust/analysis.hpp"
#include "wclust/closure.hpp"
#include "wclust/clustering.hpp"
#include "wclust/compare.hpp"
#include "wclust/directed.hpp"
#include "wclust/error.hpp"
#include "wclust/export.hpp"
#include "wclust/generators.hpp"
#include "wclust/graph.hpp"
#include "wclust/io.hpp"
#include "wclust/method.hpp"
#include "wclust/node_stats.hpp"
#include "wclust/normalized.hpp"
#include "wclust/report.hpp"
#include "wclust/rng.hpp"
#include "wclust/scenario.hpp"
#include "wclust/summation.hpp"
