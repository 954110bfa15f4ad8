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

#include "bpmn/model.hpp"

#include <array>
#include <unordered_map>
#include <unordered_set>

namespace bpmn {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 13> kNodeKindNames{{
    {NodeKind::NoneStartEvent, "NoneStartEvent"},
    {NodeKind::MessageStartEvent, "MessageStartEvent"},
    {NodeKind::Task, "Task"},
    {NodeKind::SendTask, "SendTask"},
    {NodeKind::ReceiveTask, "ReceiveTask"},
    {NodeKind::ExclusiveGateway, "ExclusiveGateway"},
    {NodeKind::ParallelGateway, "ParallelGateway"},
    {NodeKind::EventBasedGateway, "EventBasedGateway"},
    {NodeKind::IntermediateMessageCatch, "IntermediateMessageCatch"},
    {NodeKind::IntermediateMessageThrow, "IntermediateMessageThrow"},
    {NodeKind::NoneEndEvent, "NoneEndEvent"},
    {NodeKind::MessageEndEvent, "MessageEndEvent"},
    {NodeKind::TerminateEndEvent, "TerminateEndEvent"},
}};

template <typename Flow>
std::vector<const Flow*> select(const std::vector<Flow>& flows, std::string_view node,
                                ElementId Flow::*end)
{
    std::vector<const Flow*> out;
    for (const auto& f : flows) {
        if (f.*end == node) {
            out.push_back(&f);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(NodeKind kind)
{
    for (const auto& [k, name] : kNodeKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name)
{
    for (const auto& [k, n] : kNodeKindNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_start_event(NodeKind kind)
{
    return kind == NodeKind::NoneStartEvent || kind == NodeKind::MessageStartEvent;
}

bool is_end_event(NodeKind kind)
{
    return kind == NodeKind::NoneEndEvent || kind == NodeKind::MessageEndEvent ||
           kind == NodeKind::TerminateEndEvent;
}

bool is_gateway(NodeKind kind)
{
    return kind == NodeKind::ExclusiveGateway || kind == NodeKind::ParallelGateway ||
           kind == NodeKind::EventBasedGateway;
}

bool is_activity(NodeKind kind)
{
    return kind == NodeKind::Task || kind == NodeKind::SendTask || kind == NodeKind::ReceiveTask;
}

bool is_message_sender(NodeKind kind)
{
    return kind == NodeKind::SendTask || kind == NodeKind::IntermediateMessageThrow ||
           kind == NodeKind::MessageEndEvent;
}

bool is_message_receiver(NodeKind kind)
{
    return kind == NodeKind::ReceiveTask || kind == NodeKind::IntermediateMessageCatch ||
           kind == NodeKind::MessageStartEvent;
}

bool is_message_catch(NodeKind kind)
{
    return kind == NodeKind::ReceiveTask || kind == NodeKind::IntermediateMessageCatch;
}

std::string_view to_string(WarningKind kind)
{
    switch (kind) {
    case WarningKind::ReceiveWithoutMessageFlow: return "ReceiveWithoutMessageFlow";
    case WarningKind::ReusedEndEvent: return "ReusedEndEvent";
    case WarningKind::DisconnectedNode: return "DisconnectedNode";
    case WarningKind::GatewayWithSingleInAndOut: return "GatewayWithSingleInAndOut";
    case WarningKind::NoStartEvent: return "NoStartEvent";
    case WarningKind::UnsupportedElementMapped: return "UnsupportedElementMapped";
    case WarningKind::LossyRoundTrip: return "LossyRoundTrip";
    case WarningKind::DroppedMessageFlow: return "DroppedMessageFlow";
    case WarningKind::LeftoverMessages: return "LeftoverMessages";
    }
    return "?";
}

std::string_view to_string(ModelErrorKind kind)
{
    switch (kind) {
    case ModelErrorKind::MalformedXml: return "MalformedXml";
    case ModelErrorKind::UnsupportedElement: return "UnsupportedElement";
    case ModelErrorKind::DanglingReference: return "DanglingReference";
    case ModelErrorKind::InvalidStructure: return "InvalidStructure";
    case ModelErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "?";
}

ModelError::ModelError(ModelErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

const FlowNode* CollaborationModel::find_node(std::string_view id) const
{
    for (const auto& p : processes) {
        for (const auto& n : p.nodes) {
            if (n.id == id) {
                return &n;
            }
        }
    }
    return nullptr;
}

FlowNode* CollaborationModel::find_node(std::string_view id)
{
    return const_cast<FlowNode*>(std::as_const(*this).find_node(id));
}

const Process* CollaborationModel::find_process(std::string_view id) const
{
    for (const auto& p : processes) {
        if (p.id == id) {
            return &p;
        }
    }
    return nullptr;
}

const SequenceFlow* CollaborationModel::find_sequence_flow(std::string_view id) const
{
    for (const auto& f : sequence_flows) {
        if (f.id == id) {
            return &f;
        }
    }
    return nullptr;
}

const MessageFlow* CollaborationModel::find_message_flow(std::string_view id) const
{
    for (const auto& f : message_flows) {
        if (f.id == id) {
            return &f;
        }
    }
    return nullptr;
}

bool CollaborationModel::contains_id(std::string_view id) const
{
    if (collaboration && *collaboration == id) {
        return true;
    }
    for (const auto& p : participants) {
        if (p.id == id) {
            return true;
        }
    }
    for (const auto& p : processes) {
        if (p.id == id) {
            return true;
        }
    }
    return find_node(id) || find_sequence_flow(id) || find_message_flow(id);
}

ElementId CollaborationModel::fresh_id(std::string_view base) const
{
    ElementId candidate{base};
    for (int n = 2; contains_id(candidate); ++n) {
        candidate = std::string(base) + "_" + std::to_string(n);
    }
    return candidate;
}

std::size_t CollaborationModel::node_count() const
{
    std::size_t count = 0;
    for (const auto& p : processes) {
        count += p.nodes.size();
    }
    return count;
}

std::vector<const SequenceFlow*> CollaborationModel::incoming(std::string_view node) const
{
    return select(sequence_flows, node, &SequenceFlow::target);
}

std::vector<const SequenceFlow*> CollaborationModel::outgoing(std::string_view node) const
{
    return select(sequence_flows, node, &SequenceFlow::source);
}

std::vector<const MessageFlow*> CollaborationModel::incoming_messages(std::string_view node) const
{
    return select(message_flows, node, &MessageFlow::target);
}

std::vector<const MessageFlow*> CollaborationModel::outgoing_messages(std::string_view node) const
{
    return select(message_flows, node, &MessageFlow::source);
}

bool ir_equal(const CollaborationModel& a, const CollaborationModel& b)
{
    return a.collaboration == b.collaboration && a.participants == b.participants &&
           a.processes == b.processes && a.sequence_flows == b.sequence_flows &&
           a.message_flows == b.message_flows;
}

void check_invariants(const CollaborationModel& model, ModelErrorKind error_kind)
{
    auto fail = [error_kind](const std::string& message) { throw ModelError(error_kind, message); };

    std::unordered_set<std::string_view> ids;
    std::unordered_map<std::string_view, const FlowNode*> nodes;
    auto claim = [&](std::string_view id) {
        if (id.empty()) {
            fail("element without id");
        }
        if (!ids.insert(id).second) {
            fail("duplicate id '" + std::string(id) + "'");
        }
    };

    for (const auto& p : model.processes) {
        claim(p.id);
        for (const auto& n : p.nodes) {
            claim(n.id);
            if (n.process != p.id) {
                fail("node '" + n.id + "' records process '" + n.process + "' but lives in '" +
                     p.id + "'");
            }
            nodes.emplace(n.id, &n);
        }
    }

    std::unordered_map<std::string_view, int> in_degree, out_degree;
    for (const auto& f : model.sequence_flows) {
        claim(f.id);
        auto src = nodes.find(f.source);
        auto dst = nodes.find(f.target);
        if (src == nodes.end() || dst == nodes.end()) {
            throw ModelError(error_kind == ModelErrorKind::InternalInvariant
                                 ? error_kind
                                 : ModelErrorKind::DanglingReference,
                             "sequence flow '" + f.id + "' references a missing node");
        }
        if (src->second->process != dst->second->process) {
            fail("sequence flow '" + f.id + "' crosses process boundaries");
        }
        if (is_start_event(dst->second->kind)) {
            fail("start event '" + f.target + "' has an incoming sequence flow");
        }
        if (is_end_event(src->second->kind)) {
            fail("end event '" + f.source + "' has an outgoing sequence flow");
        }
        ++out_degree[f.source];
        ++in_degree[f.target];
        if (src->second->kind == NodeKind::EventBasedGateway &&
            !is_message_catch(dst->second->kind)) {
            fail("event-based gateway '" + f.source +
                 "' must lead to message catch events or receive tasks");
        }
    }

    for (const auto& f : model.message_flows) {
        claim(f.id);
        auto src = nodes.find(f.source);
        auto dst = nodes.find(f.target);
        if (src == nodes.end() || dst == nodes.end()) {
            throw ModelError(error_kind == ModelErrorKind::InternalInvariant
                                 ? error_kind
                                 : ModelErrorKind::DanglingReference,
                             "message flow '" + f.id + "' references a missing node");
        }
        if (!is_message_sender(src->second->kind)) {
            fail("message flow '" + f.id + "' starts at '" + f.source +
                 "', which cannot send messages");
        }
        if (!is_message_receiver(dst->second->kind)) {
            fail("message flow '" + f.id + "' ends at '" + f.target +
                 "', which cannot receive messages");
        }
        if (src->second->process == dst->second->process) {
            fail("message flow '" + f.id + "' connects nodes of the same process");
        }
    }

    for (const auto& p : model.participants) {
        claim(p.id);
        if (!p.process.empty() && !model.find_process(p.process)) {
            throw ModelError(ModelErrorKind::DanglingReference,
                             "participant '" + p.id + "' references missing process '" +
                                 p.process + "'");
        }
    }
    if (model.collaboration) {
        claim(*model.collaboration);
    }
}

}  // namespace bpmn
