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

#include "bpmn/generators.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace bpmn {

namespace {

class Builder {
public:
    explicit Builder(std::string process_id)
    {
        model_.processes.push_back({std::move(process_id), "", {}, {{"isExecutable", "false"}}});
    }

    const ElementId& node(NodeKind kind, ElementId id, std::string name = {})
    {
        auto& p = model_.processes.front();
        p.nodes.push_back({std::move(id), std::move(name), kind, p.id});
        return p.nodes.back().id;
    }

    void flow(const ElementId& source, const ElementId& target)
    {
        model_.sequence_flows.push_back(
            {"Flow_" + std::to_string(model_.sequence_flows.size() + 1), source, target});
    }

    CollaborationModel finish()
    {
        model_.diagram = auto_layout(model_);
        return std::move(model_);
    }

private:
    CollaborationModel model_;
};

struct Size {
    int width;
    int height;
};

Size shape_size(NodeKind kind)
{
    if (is_activity(kind)) return {100, 80};
    if (is_gateway(kind)) return {50, 50};
    return {36, 36};
}

std::string num(int v) { return std::to_string(v); }

}  // namespace

CollaborationModel gen_parallel_branches(const BranchParams& params)
{
    if (params.branches < 1 || params.length < 1) {
        throw std::invalid_argument("branches and branch length must be at least 1");
    }
    Builder b("Process_1");
    const auto start = b.node(NodeKind::NoneStartEvent, "StartEvent_1", "Start");
    const auto split = b.node(NodeKind::ParallelGateway, "Gateway_split");
    const auto join = b.node(NodeKind::ParallelGateway, "Gateway_join");
    const auto end = b.node(NodeKind::NoneEndEvent, "EndEvent_1", "End");
    b.flow(start, split);
    for (std::size_t i = 1; i <= params.branches; ++i) {
        ElementId previous = split;
        for (std::size_t j = 1; j <= params.length; ++j) {
            auto suffix = std::to_string(i) + "_" + std::to_string(j);
            const auto task = b.node(NodeKind::Task, "Task_" + suffix, "Task " + suffix);
            b.flow(previous, task);
            previous = task;
        }
        b.flow(previous, join);
    }
    b.flow(join, end);
    return b.finish();
}

std::size_t parallel_branches_state_count(const BranchParams& params)
{
    if (params.branches == 0 || params.length == 0) {
        throw std::invalid_argument("branches and branch length must be at least 1");
    }
    std::size_t product = 1;
    for (std::size_t i = 0; i < params.branches; ++i) {
        product *= params.length + 1;
    }
    return product + 3;
}

CollaborationModel gen_growing_sequence(std::size_t target_elements)
{
    if (target_elements < 5) {
        throw std::invalid_argument("the growing series starts at 5 elements");
    }
    Builder b("Process_1");
    ElementId previous = b.node(NodeKind::NoneStartEvent, "StartEvent_1", "Start");
    std::size_t count = 2;  // start and end
    std::size_t tasks = 0;

    auto add_task = [&] {
        ++tasks;
        auto task = b.node(NodeKind::Task, "Task_" + std::to_string(tasks),
                           "Task " + std::to_string(tasks));
        b.flow(previous, task);
        previous = task;
        ++count;
    };

    for (std::size_t unit = 0;; ++unit) {
        bool full = true;
        for (int i = 0; i < 3 && full; ++i) {
            if (count + 1 > target_elements) {
                full = false;
                break;
            }
            add_task();
        }
        if (!full || count + 4 > target_elements) {
            break;
        }
        const auto kind = unit % 2 == 0 ? NodeKind::ExclusiveGateway : NodeKind::ParallelGateway;
        const auto tag = std::to_string(unit + 1);
        const auto split = b.node(kind, "Gateway_split_" + tag);
        b.flow(previous, split);
        std::vector<ElementId> branch_ends;
        for (int branch = 0; branch < 2; ++branch) {
            ++tasks;
            const auto task = b.node(NodeKind::Task, "Task_" + std::to_string(tasks),
                                     "Task " + std::to_string(tasks));
            b.flow(split, task);
            branch_ends.push_back(task);
        }
        const auto join = b.node(kind, "Gateway_join_" + tag);
        for (const auto& e : branch_ends) {
            b.flow(e, join);
        }
        previous = join;
        count += 4;
    }
    const auto end = b.node(NodeKind::NoneEndEvent, "EndEvent_1", "End");
    b.flow(previous, end);
    return b.finish();
}

std::string auto_layout(const CollaborationModel& model)
{
    struct Placed {
        int x, y, width, height;
    };
    std::unordered_map<std::string, Placed> placed;
    std::string shapes, edges;

    int pool_top = 40;
    std::vector<std::pair<const Participant*, std::pair<int, int>>> pools;

    for (const auto& process : model.processes) {
        // Longest-path layering; nodes on cycles keep their breadth-first layer.
        std::unordered_map<std::string, int> layer, pending;
        std::unordered_map<std::string, std::vector<std::string>> succ;
        for (const auto& n : process.nodes) {
            layer[n.id] = 0;
            pending[n.id] = 0;
        }
        for (const auto& f : model.sequence_flows) {
            if (pending.contains(f.source)) {
                succ[f.source].push_back(f.target);
                ++pending[f.target];
            }
        }
        std::deque<std::string> ready;
        for (const auto& n : process.nodes) {
            if (pending[n.id] == 0) ready.push_back(n.id);
        }
        std::unordered_map<std::string, bool> done;
        while (!ready.empty()) {
            auto id = ready.front();
            ready.pop_front();
            done[id] = true;
            for (const auto& t : succ[id]) {
                layer[t] = std::max(layer[t], layer[id] + 1);
                if (--pending[t] == 0) ready.push_back(t);
            }
        }
        for (const auto& n : process.nodes) {
            if (!done[n.id]) {
                for (const auto& t : succ[n.id]) {
                    if (!done[t]) layer[t] = std::max(layer[t], layer[n.id] + 1);
                }
            }
        }

        std::unordered_map<int, int> rows;
        int max_rows = 1;
        for (const auto& n : process.nodes) {
            const int row = rows[layer[n.id]]++;
            max_rows = std::max(max_rows, row + 1);
            const auto size = shape_size(n.kind);
            const int cx = 180 + layer[n.id] * 150;
            const int cy = pool_top + 80 + row * 120;
            Placed p{cx - size.width / 2, cy - size.height / 2, size.width, size.height};
            placed[n.id] = p;
            shapes += "      <bpmndi:BPMNShape id=\"" + n.id + "_di\" bpmnElement=\"" + n.id + "\"";
            if (n.kind == NodeKind::ExclusiveGateway) shapes += " isMarkerVisible=\"true\"";
            shapes += "><dc:Bounds x=\"" + num(p.x) + "\" y=\"" + num(p.y) + "\" width=\"" +
                      num(p.width) + "\" height=\"" + num(p.height) + "\" /></bpmndi:BPMNShape>\n";
        }

        int max_layer = 0;
        for (const auto& [id, l] : layer) max_layer = std::max(max_layer, l);
        const int height = max_rows * 120 + 40;
        for (const auto& part : model.participants) {
            if (part.process == process.id) {
                pools.push_back({&part, {pool_top, height}});
                pools.back().second.second = height;
                shapes += "      <bpmndi:BPMNShape id=\"" + part.id + "_di\" bpmnElement=\"" + part.id +
                          "\" isHorizontal=\"true\"><dc:Bounds x=\"60\" y=\"" + num(pool_top) +
                          "\" width=\"" + num(max_layer * 150 + 240) + "\" height=\"" + num(height) +
                          "\" /></bpmndi:BPMNShape>\n";
            }
        }
        pool_top += height + 60;
    }

    auto edge = [&](const std::string& id, const std::string& source, const std::string& target,
                    bool vertical) {
        auto s = placed.find(source);
        auto t = placed.find(target);
        if (s == placed.end() || t == placed.end()) return;
        const auto& a = s->second;
        const auto& b = t->second;
        int x1 = a.x + a.width, y1 = a.y + a.height / 2, x2 = b.x, y2 = b.y + b.height / 2;
        if (vertical) {
            x1 = a.x + a.width / 2;
            x2 = b.x + b.width / 2;
            y1 = a.y + (b.y > a.y ? a.height : 0);
            y2 = b.y + (b.y > a.y ? 0 : b.height);
        }
        edges += "      <bpmndi:BPMNEdge id=\"" + id + "_di\" bpmnElement=\"" + id +
                 "\"><di:waypoint x=\"" + num(x1) + "\" y=\"" + num(y1) + "\" /><di:waypoint x=\"" +
                 num(x2) + "\" y=\"" + num(y2) + "\" /></bpmndi:BPMNEdge>\n";
    };
    for (const auto& f : model.sequence_flows) edge(f.id, f.source, f.target, false);
    for (const auto& f : model.message_flows) edge(f.id, f.source, f.target, true);

    const std::string plane_element =
        model.collaboration ? *model.collaboration
                            : (model.processes.empty() ? std::string{} : model.processes.front().id);
    return "<bpmndi:BPMNDiagram id=\"BPMNDiagram_1\">\n    <bpmndi:BPMNPlane id=\"BPMNPlane_1\" "
           "bpmnElement=\"" +
           plane_element + "\">\n" + shapes + edges + "    </bpmndi:BPMNPlane>\n  </bpmndi:BPMNDiagram>";
}

}  // namespace bpmn
