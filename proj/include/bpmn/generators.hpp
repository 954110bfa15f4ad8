// Copyright 2026 The BPMN Analyzer Authors
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

#include "bpmn/model.hpp"

#include <cstddef>
#include <string>

namespace bpmn {

struct BranchParams {
    std::size_t branches = 1;
    std::size_t length = 1;
};

/// start -> parallel split -> `branches` chains of `length` tasks ->
/// parallel join -> end. Throws std::invalid_argument for zero parameters.
CollaborationModel gen_parallel_branches(const BranchParams& params);

/// Expected reachable state count of gen_parallel_branches: (L+1)^n + 3.
/// Every branch position combination between split and join, plus the
/// marking before the split, after the join and the empty marking.
std::size_t parallel_branches_state_count(const BranchParams& params);

/// Repeats "three tasks, then a two-branch block with one task per branch"
/// between a single start and end event. Blocks alternate exclusive and
/// parallel, starting with exclusive. Stops at the largest node count not
/// above `target_elements` (flow nodes only). Throws std::invalid_argument
/// when `target_elements` < 5.
CollaborationModel gen_growing_sequence(std::size_t target_elements);

/// Minimal layered diagram for models without one: shapes in columns by
/// longest path from the start events, straight two-point edges.
std::string auto_layout(const CollaborationModel& model);

}  // namespace bpmn
