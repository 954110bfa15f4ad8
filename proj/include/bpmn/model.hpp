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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bpmn {

using ElementId = std::string;
using Attributes = std::vector<std::pair<std::string, std::string>>;

enum class NodeKind {
    NoneStartEvent,
    MessageStartEvent,
    Task,
    SendTask,
    ReceiveTask,
    ExclusiveGateway,
    ParallelGateway,
    EventBasedGateway,
    IntermediateMessageCatch,
    IntermediateMessageThrow,
    NoneEndEvent,
    MessageEndEvent,
    TerminateEndEvent,
};

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

bool is_start_event(NodeKind kind);
bool is_end_event(NodeKind kind);
bool is_gateway(NodeKind kind);
bool is_activity(NodeKind kind);
bool is_message_sender(NodeKind kind);
bool is_message_receiver(NodeKind kind);
/// Nodes that consume a message together with a sequence-flow token.
bool is_message_catch(NodeKind kind);

struct FlowNode {
    ElementId id;
    std::string name;
    NodeKind kind = NodeKind::Task;
    ElementId process;
    /// Original tag when it differs from the canonical tag of `kind`
    /// (e.g. "userTask" for a Task). Empty otherwise.
    std::string tag;
    /// Set for elements downgraded to Task by a lenient parse.
    bool lossy = false;
    Attributes attributes;

    friend bool operator==(const FlowNode&, const FlowNode&) = default;
};

struct SequenceFlow {
    ElementId id;
    ElementId source;
    ElementId target;
    std::string name;
    Attributes attributes;

    friend bool operator==(const SequenceFlow&, const SequenceFlow&) = default;
};

struct MessageFlow {
    ElementId id;
    ElementId source;
    ElementId target;
    std::string name;
    Attributes attributes;

    friend bool operator==(const MessageFlow&, const MessageFlow&) = default;
};

struct Process {
    ElementId id;
    std::string name;
    std::vector<FlowNode> nodes;
    Attributes attributes;

    friend bool operator==(const Process&, const Process&) = default;
};

struct Participant {
    ElementId id;
    std::string name;
    /// Empty for black-box pools.
    ElementId process;

    friend bool operator==(const Participant&, const Participant&) = default;
};

enum class WarningKind {
    ReceiveWithoutMessageFlow,
    ReusedEndEvent,
    DisconnectedNode,
    GatewayWithSingleInAndOut,
    NoStartEvent,
    UnsupportedElementMapped,
    LossyRoundTrip,
    DroppedMessageFlow,
    LeftoverMessages,
};

std::string_view to_string(WarningKind kind);

struct StaticWarning {
    WarningKind kind;
    std::vector<ElementId> elements;
    std::string message;

    friend bool operator==(const StaticWarning&, const StaticWarning&) = default;
};

struct CollaborationModel {
    std::optional<ElementId> collaboration;
    std::vector<Participant> participants;
    std::vector<Process> processes;
    std::vector<SequenceFlow> sequence_flows;
    std::vector<MessageFlow> message_flows;

    /// Attributes of the `definitions` root (namespaces, targetNamespace, ...).
    Attributes definitions_attributes;
    /// Diagram-interchange XML, carried verbatim and never interpreted.
    std::string diagram;
    /// The document this model was parsed from, if any.
    std::optional<std::string> source_document;
    /// Warnings recorded while parsing (lenient downgrades, dropped flows).
    std::vector<StaticWarning> parse_warnings;

    const FlowNode* find_node(std::string_view id) const;
    FlowNode* find_node(std::string_view id);
    const Process* find_process(std::string_view id) const;
    const SequenceFlow* find_sequence_flow(std::string_view id) const;
    const MessageFlow* find_message_flow(std::string_view id) const;

    /// True if any node or flow uses `id`.
    bool contains_id(std::string_view id) const;
    /// Returns `base` or `base_N` for the smallest N that is not yet taken.
    ElementId fresh_id(std::string_view base) const;

    std::size_t node_count() const;
    std::vector<const SequenceFlow*> incoming(std::string_view node) const;
    std::vector<const SequenceFlow*> outgoing(std::string_view node) const;
    std::vector<const MessageFlow*> incoming_messages(std::string_view node) const;
    std::vector<const MessageFlow*> outgoing_messages(std::string_view node) const;
};

/// Topological equality: ignores the retained source text, the diagram
/// and parse warnings.
bool ir_equal(const CollaborationModel& a, const CollaborationModel& b);

enum class ModelErrorKind {
    MalformedXml,
    UnsupportedElement,
    DanglingReference,
    InvalidStructure,
    InternalInvariant,
};

std::string_view to_string(ModelErrorKind kind);

class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorKind kind, const std::string& message);

    ModelErrorKind kind() const noexcept { return kind_; }

private:
    ModelErrorKind kind_;
};

/// Checks the structural invariants of the IR: unique ids, resolvable flow
/// endpoints, flow/process consistency and node-kind arity rules.
/// Throws ModelError with `error_kind` on the first violation.
void check_invariants(const CollaborationModel& model,
                      ModelErrorKind error_kind = ModelErrorKind::InvalidStructure);

}  // namespace bpmn
