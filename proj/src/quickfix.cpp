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

#include "bpmn/quickfix.hpp"

#include "bpmn/diagnosis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace bpmn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void stale(const std::string& message) { throw StaleFixError("stale fix: " + message); }

Process& owning_process(CollaborationModel& model, const ElementId& process)
{
    for (auto& p : model.processes) {
        if (p.id == process) {
            return p;
        }
    }
    stale("process '" + process + "' not found");
}

template <typename Flow>
std::size_t position_of(const std::vector<Flow>& flows, const ElementId& id)
{
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (flows[i].id == id) {
            return i;
        }
    }
    stale("flow '" + id + "' not found");
}

template <typename Seq, typename T>
void insert_at(Seq& seq, const std::optional<std::size_t>& position, T value)
{
    auto at = position ? std::min(*position, seq.size()) : seq.size();
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), std::move(value));
}

// Breadth-first walk over sequence flows, forward or backward.
std::vector<ElementId> walk(const CollaborationModel& model, const ElementId& from, bool forward)
{
    std::vector<ElementId> order;
    std::unordered_set<ElementId> seen{from};
    std::deque<ElementId> frontier{from};
    while (!frontier.empty()) {
        auto n = frontier.front();
        frontier.pop_front();
        for (const auto* f : forward ? model.outgoing(n) : model.incoming(n)) {
            const auto& next = forward ? f->target : f->source;
            if (seen.insert(next).second) {
                order.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return order;
}

bool reaches(const CollaborationModel& model, const ElementId& from, const ElementId& to)
{
    if (from == to) {
        return true;
    }
    auto forward = walk(model, from, true);
    return std::find(forward.begin(), forward.end(), to) != forward.end();
}

// A split of `split_kind` upstream of `join` with at least two outgoing
// flows whose targets reach the join.
std::optional<ElementId> find_feeding_split(const CollaborationModel& model, const ElementId& join,
                                            NodeKind split_kind)
{
    for (const auto& candidate : walk(model, join, false)) {
        const auto* node = model.find_node(candidate);
        if (!node || node->kind != split_kind) {
            continue;
        }
        int branches = 0;
        for (const auto* f : model.outgoing(candidate)) {
            if (reaches(model, f->target, join)) {
                ++branches;
            }
        }
        if (branches >= 2) {
            return candidate;
        }
    }
    return std::nullopt;
}

QuickFix make_fix(FixKind kind, std::vector<ElementId> targets, std::string description,
                  std::vector<EditOp> script)
{
    std::string id(to_string(kind));
    id += ':';
    for (std::size_t i = 0; i < targets.size(); ++i) {
        id += (i ? "," : "") + targets[i];
    }
    return {std::move(id), kind, std::move(targets), std::move(description), std::move(script)};
}

QuickFix replace_kind(FixKind kind, const FlowNode& node, NodeKind to, std::string description)
{
    return make_fix(kind, {node.id}, std::move(description),
                    {edit::ReplaceNodeKind{node.id, node.kind, to, node.tag}});
}

// P1: a parallel join that deadlocks because an exclusive split upstream
// only ever delivers one of its inputs.
std::vector<QuickFix> match_parallel_join(const CollaborationModel& model, const Diagnosis& d)
{
    std::vector<QuickFix> fixes;
    std::set<ElementId> done;
    for (const auto& v : d.result(Property::OptionToComplete).violations) {
        if (v.kind != ViolationKind::Deadlock) {
            continue;
        }
        for (const auto& id : v.elements) {
            const auto* node = model.find_node(id);
            if (!node || node->kind != NodeKind::ParallelGateway || model.incoming(id).size() < 2 ||
                done.contains(id)) {
                continue;
            }
            if (auto split = find_feeding_split(model, id, NodeKind::ExclusiveGateway)) {
                done.insert(id);
                fixes.push_back(replace_kind(
                    FixKind::ConvertParallelJoinToExclusive, *node, NodeKind::ExclusiveGateway,
                    "Replace parallel gateway '" + id + "' by an exclusive gateway: exclusive split '" +
                        *split + "' activates only one of its incoming branches."));
            }
        }
    }
    return fixes;
}

// P2: an exclusive merge that duplicates tokens coming from a parallel split.
std::vector<QuickFix> match_exclusive_join(const CollaborationModel& model, const Diagnosis& d)
{
    std::vector<QuickFix> fixes;
    std::set<ElementId> done;
    for (const auto& v : d.result(Property::Safeness).violations) {
        if (v.kind != ViolationKind::LackOfSynchronization || v.elements.empty()) {
            continue;
        }
        const auto* flow = model.find_sequence_flow(v.elements.front());
        if (!flow) {
            continue;
        }
        // Walk back along single-input nodes to the merging gateway.
        const FlowNode* merge = model.find_node(flow->source);
        std::unordered_set<ElementId> seen;
        while (merge && merge->kind != NodeKind::ExclusiveGateway && seen.insert(merge->id).second) {
            auto in = model.incoming(merge->id);
            merge = in.size() == 1 ? model.find_node(in.front()->source) : nullptr;
        }
        if (!merge || model.incoming(merge->id).size() < 2 || done.contains(merge->id)) {
            continue;
        }
        if (auto split = find_feeding_split(model, merge->id, NodeKind::ParallelGateway)) {
            done.insert(merge->id);
            fixes.push_back(replace_kind(
                FixKind::ConvertExclusiveJoinToParallel, *merge, NodeKind::ParallelGateway,
                "Replace exclusive gateway '" + merge->id +
                    "' by a parallel gateway to synchronize the branches of parallel split '" +
                    *split + "'."));
        }
    }
    return fixes;
}

bool implicated(const Diagnosis& d, const ElementId& node)
{
    auto in_trace = [&](const std::optional<Trace>& trace) {
        if (!trace || !d.net) {
            return false;
        }
        return std::any_of(trace->begin(), trace->end(), [&](const TraceStep& step) {
            return d.net->node_id(d.net->transition(step.transition).node) == node;
        });
    };
    for (const auto& r : d.results) {
        for (const auto& v : r.violations) {
            if (std::find(v.elements.begin(), v.elements.end(), node) != v.elements.end() ||
                in_trace(v.trace) || in_trace(v.cycle)) {
                return true;
            }
        }
    }
    return false;
}

// P3: an end event reached by several flows that takes part in an error.
std::vector<QuickFix> match_reused_end(const CollaborationModel& model, const Diagnosis& d)
{
    std::vector<QuickFix> fixes;
    for (const auto& w : d.warnings) {
        if (w.kind != WarningKind::ReusedEndEvent || w.elements.empty()) {
            continue;
        }
        const auto& end_id = w.elements.front();
        const auto* end = model.find_node(end_id);
        if (!end || !implicated(d, end_id)) {
            continue;
        }
        CollaborationModel scratch = model;
        std::vector<EditOp> script;
        auto incoming = model.incoming(end_id);
        for (std::size_t i = 1; i < incoming.size(); ++i) {
            FlowNode copy = *end;
            copy.id = scratch.fresh_id(end_id + "_split");
            script.push_back(edit::AddNode{copy, std::nullopt});
            script.push_back(edit::RetargetFlow{incoming[i]->id, end_id, copy.id});
            apply_edit(scratch, script[script.size() - 2]);
            apply_edit(scratch, script.back());
        }
        fixes.push_back(make_fix(FixKind::SplitReusedEndEvent, {end_id},
                                 "Give each of the " + std::to_string(incoming.size()) +
                                     " incoming flows of '" + end_id + "' its own end event.",
                                 std::move(script)));
    }
    return fixes;
}

// P4: a message catch that starves because no message flow reaches it.
std::vector<QuickFix> match_starvation(const CollaborationModel& model, const Diagnosis& d)
{
    std::vector<QuickFix> fixes;
    std::set<ElementId> done;
    for (const auto& v : d.result(Property::OptionToComplete).violations) {
        if (v.kind != ViolationKind::MessageStarvation) {
            continue;
        }
        for (const auto& id : v.elements) {
            const auto* node = model.find_node(id);
            if (!node || !is_message_catch(node->kind) || !model.incoming_messages(id).empty() ||
                !done.insert(id).second) {
                continue;
            }
            bool offered = false;
            for (const auto& p : model.processes) {
                if (p.id == node->process) {
                    continue;
                }
                for (const auto& sender : p.nodes) {
                    if (!is_message_sender(sender.kind) || !model.outgoing_messages(sender.id).empty()) {
                        continue;
                    }
                    MessageFlow flow{model.fresh_id("MessageFlow_" + sender.id + "_" + id), sender.id,
                                     id, "", {}};
                    fixes.push_back(make_fix(FixKind::AddMissingMessageFlow, {id, sender.id},
                                             "Let '" + sender.id + "' send the message '" + id +
                                                 "' is waiting for.",
                                             {edit::AddMessageFlow{std::move(flow), std::nullopt}}));
                    offered = true;
                }
            }
            if (!offered) {
                fixes.push_back(replace_kind(FixKind::ConvertReceiveToTask, *node, NodeKind::Task,
                                             "Turn '" + id +
                                                 "' into a plain task; no participant can send it a message."));
            }
        }
    }
    return fixes;
}

}  // namespace

std::string_view to_string(FixKind kind)
{
    switch (kind) {
    case FixKind::ConvertParallelJoinToExclusive: return "ConvertParallelJoinToExclusive";
    case FixKind::ConvertExclusiveJoinToParallel: return "ConvertExclusiveJoinToParallel";
    case FixKind::SplitReusedEndEvent: return "SplitReusedEndEvent";
    case FixKind::AddMissingMessageFlow: return "AddMissingMessageFlow";
    case FixKind::ConvertReceiveToTask: return "ConvertReceiveToTask";
    }
    return "?";
}

EditOp inverse(const EditOp& op)
{
    return std::visit(
        overloaded{
            [](const edit::ReplaceNodeKind& e) -> EditOp {
                // The replacement drops the tag; undo restores it.
                return edit::ReplaceNodeKind{e.target, e.to, e.from, ""};
            },
            [](const edit::AddNode& e) -> EditOp { return edit::RemoveNode{e.node, e.position.value_or(SIZE_MAX)}; },
            [](const edit::RemoveNode& e) -> EditOp { return edit::AddNode{e.node, e.position}; },
            [](const edit::AddSequenceFlow& e) -> EditOp {
                return edit::RemoveSequenceFlow{e.flow, e.position.value_or(SIZE_MAX)};
            },
            [](const edit::RemoveSequenceFlow& e) -> EditOp { return edit::AddSequenceFlow{e.flow, e.position}; },
            [](const edit::AddMessageFlow& e) -> EditOp {
                return edit::RemoveMessageFlow{e.flow, e.position.value_or(SIZE_MAX)};
            },
            [](const edit::RemoveMessageFlow& e) -> EditOp { return edit::AddMessageFlow{e.flow, e.position}; },
            [](const edit::RetargetFlow& e) -> EditOp { return edit::RetargetFlow{e.flow, e.to, e.from}; },
        },
        op);
}

void apply_edit(CollaborationModel& model, const EditOp& op)
{
    std::visit(
        overloaded{
            [&](const edit::ReplaceNodeKind& e) {
                auto* node = model.find_node(e.target);
                if (!node) stale("node '" + e.target + "' not found");
                if (node->kind != e.from) {
                    stale("node '" + e.target + "' is a " + std::string(to_string(node->kind)) +
                          ", expected " + std::string(to_string(e.from)));
                }
                node->kind = e.to;
                node->tag = e.to == e.from ? node->tag : std::string{};
                node->lossy = false;
            },
            [&](const edit::AddNode& e) {
                if (model.contains_id(e.node.id)) stale("id '" + e.node.id + "' already in use");
                insert_at(owning_process(model, e.node.process).nodes, e.position, e.node);
            },
            [&](const edit::RemoveNode& e) {
                auto& nodes = owning_process(model, e.node.process).nodes;
                auto it = std::find_if(nodes.begin(), nodes.end(),
                                       [&](const FlowNode& n) { return n.id == e.node.id; });
                if (it == nodes.end() || !(*it == e.node)) {
                    stale("node '" + e.node.id + "' not found or modified");
                }
                if (!model.incoming(e.node.id).empty() || !model.outgoing(e.node.id).empty() ||
                    !model.incoming_messages(e.node.id).empty() ||
                    !model.outgoing_messages(e.node.id).empty()) {
                    stale("node '" + e.node.id + "' is still connected");
                }
                nodes.erase(it);
            },
            [&](const edit::AddSequenceFlow& e) {
                if (model.contains_id(e.flow.id)) stale("id '" + e.flow.id + "' already in use");
                insert_at(model.sequence_flows, e.position, e.flow);
            },
            [&](const edit::RemoveSequenceFlow& e) {
                auto i = position_of(model.sequence_flows, e.flow.id);
                if (!(model.sequence_flows[i] == e.flow)) stale("flow '" + e.flow.id + "' modified");
                model.sequence_flows.erase(model.sequence_flows.begin() + static_cast<std::ptrdiff_t>(i));
            },
            [&](const edit::AddMessageFlow& e) {
                if (model.contains_id(e.flow.id)) stale("id '" + e.flow.id + "' already in use");
                insert_at(model.message_flows, e.position, e.flow);
            },
            [&](const edit::RemoveMessageFlow& e) {
                auto i = position_of(model.message_flows, e.flow.id);
                if (!(model.message_flows[i] == e.flow)) stale("flow '" + e.flow.id + "' modified");
                model.message_flows.erase(model.message_flows.begin() + static_cast<std::ptrdiff_t>(i));
            },
            [&](const edit::RetargetFlow& e) {
                auto i = position_of(model.sequence_flows, e.flow);
                auto& flow = model.sequence_flows[i];
                if (flow.target != e.from) {
                    stale("flow '" + e.flow + "' no longer ends at '" + e.from + "'");
                }
                if (!model.find_node(e.to)) stale("node '" + e.to + "' not found");
                flow.target = e.to;
            },
        },
        op);
}

const std::vector<FixPattern>& builtin_fix_patterns()
{
    static const std::vector<FixPattern> patterns{
        {1, "parallel join after exclusive split", match_parallel_join},
        {2, "exclusive join after parallel split", match_exclusive_join},
        {3, "reused end event", match_reused_end},
        {4, "starving message catch", match_starvation},
    };
    return patterns;
}

std::vector<QuickFix> suggest_fixes(const CollaborationModel& model, const Diagnosis& diagnosis,
                                    const std::vector<FixPattern>& catalog)
{
    std::vector<std::pair<int, QuickFix>> found;
    for (const auto& pattern : catalog) {
        for (auto& fix : pattern.match(model, diagnosis)) {
            found.emplace_back(pattern.number, std::move(fix));
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second.targets) < std::tie(b.first, b.second.targets);
    });
    std::vector<QuickFix> fixes;
    for (auto& [n, fix] : found) {
        fixes.push_back(std::move(fix));
    }
    return fixes;
}

CollaborationModel apply_fix(const CollaborationModel& model, const QuickFix& fix)
{
    for (const auto& t : fix.targets) {
        if (!model.find_node(t)) {
            stale("target '" + t + "' not found");
        }
    }
    CollaborationModel edited = model;
    for (const auto& op : fix.script) {
        apply_edit(edited, op);
    }
    edited.source_document.reset();
    check_invariants(edited, ModelErrorKind::InternalInvariant);
    return edited;
}

CollaborationModel undo_fix(const CollaborationModel& model, const QuickFix& fix)
{
    CollaborationModel reverted = model;
    for (auto it = fix.script.rbegin(); it != fix.script.rend(); ++it) {
        auto back = inverse(*it);
        // Restore the original tag recorded by the forward replacement.
        if (auto* r = std::get_if<edit::ReplaceNodeKind>(&*it)) {
            auto* node = reverted.find_node(r->target);
            apply_edit(reverted, back);
            node->tag = r->from_tag;
            continue;
        }
        apply_edit(reverted, back);
    }
    reverted.source_document.reset();
    check_invariants(reverted, ModelErrorKind::InternalInvariant);
    return reverted;
}

}  // namespace bpmn
