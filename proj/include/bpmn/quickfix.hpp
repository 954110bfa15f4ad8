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

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bpmn {

struct Diagnosis;

namespace edit {

struct ReplaceNodeKind {
    ElementId target;
    NodeKind from;
    NodeKind to;
    /// Original tag of the node before the replacement ("" if canonical).
    std::string from_tag;
};

struct AddNode {
    FlowNode node;
    /// Index in the owning process; appended when absent.
    std::optional<std::size_t> position;
};

struct RemoveNode {
    FlowNode node;
    std::size_t position = 0;
};

struct AddSequenceFlow {
    SequenceFlow flow;
    std::optional<std::size_t> position;
};

struct RemoveSequenceFlow {
    SequenceFlow flow;
    std::size_t position = 0;
};

struct AddMessageFlow {
    MessageFlow flow;
    std::optional<std::size_t> position;
};

struct RemoveMessageFlow {
    MessageFlow flow;
    std::size_t position = 0;
};

/// Moves the target end of a sequence flow.
struct RetargetFlow {
    ElementId flow;
    ElementId from;
    ElementId to;
};

}  // namespace edit

using EditOp = std::variant<edit::ReplaceNodeKind, edit::AddNode, edit::RemoveNode,
                            edit::AddSequenceFlow, edit::RemoveSequenceFlow, edit::AddMessageFlow,
                            edit::RemoveMessageFlow, edit::RetargetFlow>;

/// Raised when an edit's preconditions do not hold, typically because the
/// model changed after the fix was suggested.
class StaleFixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

EditOp inverse(const EditOp& op);
/// Applies one edit in place. Throws StaleFixError if it does not fit the model.
void apply_edit(CollaborationModel& model, const EditOp& op);

enum class FixKind {
    ConvertParallelJoinToExclusive,
    ConvertExclusiveJoinToParallel,
    SplitReusedEndEvent,
    AddMissingMessageFlow,
    ConvertReceiveToTask,
};

std::string_view to_string(FixKind kind);

struct QuickFix {
    std::string id;
    FixKind kind;
    std::vector<ElementId> targets;
    std::string description;
    std::vector<EditOp> script;
};

/// A catalog entry: inspects a diagnosed model and proposes fixes.
struct FixPattern {
    int number;
    std::string name;
    std::function<std::vector<QuickFix>(const CollaborationModel&, const Diagnosis&)> match;
};

/// The built-in patterns, in order.
const std::vector<FixPattern>& builtin_fix_patterns();

/// Runs every pattern of `catalog` and returns the fixes ordered by
/// (pattern number, first target id). Pure and deterministic.
std::vector<QuickFix> suggest_fixes(const CollaborationModel& model, const Diagnosis& diagnosis,
                                    const std::vector<FixPattern>& catalog = builtin_fix_patterns());

/// Returns the edited model; `model` is not modified. Throws StaleFixError.
CollaborationModel apply_fix(const CollaborationModel& model, const QuickFix& fix);

/// Reverts `apply_fix`: applies the inverse edits in reverse order.
CollaborationModel undo_fix(const CollaborationModel& model, const QuickFix& fix);

}  // namespace bpmn
