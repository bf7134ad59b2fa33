// Copyright 2026 The BigClam Speedup Authors.
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

#ifndef BIGCLAM_BIGCLAM_H_
#define BIGCLAM_BIGCLAM_H_

#include "bigclam/community_assoc.h"
#include "bigclam/cover.h"
#include "bigclam/error.h"
#include "bigclam/gradient_ascent.h"
#include "bigclam/graph.h"
#include "bigclam/profiler.h"
#include "bigclam/seeding.h"
#include "bigclam/sparse_affiliation.h"
#include "bigclam/synth.h"

#endif  // BIGCLAM_BIGCLAM_H_
