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

#include "bpmn/explorer.hpp"
#include "bpmn/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bpmn {

enum class ViolationKind {
    Deadlock,
    Livelock,
    MessageStarvation,
    DeadActivity,
    LackOfSynchronization,
};

enum class Property { Safeness, OptionToComplete, NoDeadActivities };

enum class Verdict { Fulfilled, Violated, Unknown };

std::string_view to_string(ViolationKind kind);
std::string_view to_string(Property property);
/// "true", "false" or "unknown".
std::string_view to_string(Verdict verdict);

struct Violation {
    ViolationKind kind;
    std::vector<ElementId> elements;
    /// Shortest firing sequence from the initial marking to `state`.
    std::optional<Trace> trace;
    /// Livelocks only: firings that lead from `state` back to itself.
    std::optional<Trace> cycle;
    /// The witness state the trace ends in. Absent for dead activities.
    std::optional<StateIndex> state;
    std::string note;
};

struct PropertyResult {
    Property property;
    Verdict fulfilled = Verdict::Fulfilled;
    std::vector<Violation> violations;
};

/// One LackOfSynchronization violation per sequence flow that ever holds
/// two tokens, witnessed by the shallowest such state.
PropertyResult check_safeness(const StateSpace& space, bool exhaustive);

/// States that cannot reach a terminal marking. Stuck states become
/// Deadlock (or MessageStarvation when every token waits at a message
/// catch), cyclic regions become Livelock. Unknown unless exhaustive.
PropertyResult check_option_to_complete(const StateSpace& space, bool exhaustive);

/// Activities that never fire. Unknown unless exhaustive.
PropertyResult check_dead_activities(const StateSpace& space, bool exhaustive);

/// Message flows still holding messages in some terminal state.
std::optional<StaticWarning> leftover_messages(const StateSpace& space);

}  // namespace bpmn
