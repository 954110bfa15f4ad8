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

#include "bpmn/properties.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

namespace bpmn {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

std::vector<ElementId> node_ids(const Net& net, std::vector<NodeIndex> nodes)
{
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<ElementId> out;
    out.reserve(nodes.size());
    for (auto n : nodes) {
        out.push_back(net.node_id(n));
    }
    return out;
}

// Backward reachability from the terminal states.
std::vector<std::uint8_t> coreachable_states(const StateSpace& space)
{
    const auto n = space.size();
    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (StateIndex s = 0; s < space.expanded_count(); ++s) {
        for (const auto& e : space.edges(s)) {
            ++offsets[e.target + 1];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i + 1] += offsets[i];
    }
    std::vector<StateIndex> preds(offsets[n]);
    {
        auto fill = offsets;
        for (StateIndex s = 0; s < space.expanded_count(); ++s) {
            for (const auto& e : space.edges(s)) {
                preds[fill[e.target]++] = s;
            }
        }
    }

    std::vector<std::uint8_t> reached(n, 0);
    std::vector<StateIndex> stack;
    for (auto t : space.terminals()) {
        reached[t] = 1;
        stack.push_back(t);
    }
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (auto i = offsets[s]; i < offsets[s + 1]; ++i) {
            const auto p = preds[i];
            if (!reached[p]) {
                reached[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return reached;
}

// Strongly connected components of the subgraph induced by `inside`.
// Returns the component id per state (kUnvisited outside) and the count.
std::pair<std::vector<std::uint32_t>, std::uint32_t> components(
    const StateSpace& space, const std::vector<std::uint8_t>& inside)
{
    const auto n = space.size();
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<StateIndex> stack;
    std::uint32_t next_index = 0, comp_count = 0;

    struct Frame {
        StateIndex state;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (StateIndex root = 0; root < n; ++root) {
        if (!inside[root] || index[root] != kUnvisited) {
            continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!call.empty()) {
            auto& frame = call.back();
            const auto edges = space.edges(frame.state);
            if (frame.edge < edges.size()) {
                const auto w = edges[frame.edge++].target;
                if (!inside[w]) {
                    continue;
                }
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                }
                else if (on_stack[w]) {
                    low[frame.state] = std::min(low[frame.state], index[w]);
                }
                continue;
            }
            const auto v = frame.state;
            call.pop_back();
            if (!call.empty()) {
                auto& parent = call.back();
                low[parent.state] = std::min(low[parent.state], low[v]);
            }
            if (low[v] == index[v]) {
                StateIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
        }
    }
    return {std::move(comp), comp_count};
}

// Shortest cycle through `anchor` using only edges inside its component.
Trace cycle_through(const StateSpace& space, StateIndex anchor,
                    const std::vector<std::uint32_t>& comp)
{
    const auto c = comp[anchor];
    std::unordered_map<StateIndex, Predecessor> parent;
    std::deque<StateIndex> frontier{anchor};
    std::optional<Predecessor> closing;
    while (!frontier.empty() && !closing) {
        const auto s = frontier.front();
        frontier.pop_front();
        for (const auto& e : space.edges(s)) {
            if (comp[e.target] != c) {
                continue;
            }
            if (e.target == anchor) {
                closing = Predecessor{s, e.transition};
                break;
            }
            if (parent.emplace(e.target, Predecessor{s, e.transition}).second) {
                frontier.push_back(e.target);
            }
        }
    }

    Trace cycle;
    if (!closing) {
        return cycle;
    }
    cycle.push_back({closing->transition, space.marking(anchor)});
    for (auto s = closing->state; s != anchor;) {
        const auto p = parent.at(s);
        cycle.push_back({p.transition, space.marking(s)});
        s = p.state;
    }
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

std::string_view to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::Deadlock: return "Deadlock";
    case ViolationKind::Livelock: return "Livelock";
    case ViolationKind::MessageStarvation: return "MessageStarvation";
    case ViolationKind::DeadActivity: return "DeadActivity";
    case ViolationKind::LackOfSynchronization: return "LackOfSynchronization";
    }
    return "?";
}

std::string_view to_string(Property property)
{
    switch (property) {
    case Property::Safeness: return "Safeness";
    case Property::OptionToComplete: return "OptionToComplete";
    case Property::NoDeadActivities: return "NoDeadActivities";
    }
    return "?";
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Fulfilled: return "true";
    case Verdict::Violated: return "false";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

PropertyResult check_safeness(const StateSpace& space, bool exhaustive)
{
    PropertyResult result{Property::Safeness};
    std::set<PlaceIndex> reported;
    for (const auto& u : space.unsafe_states()) {
        for (auto flow : u.flows) {
            if (!reported.insert(flow).second) {
                continue;
            }
            Violation v{ViolationKind::LackOfSynchronization, {space.net().place_id(flow)}};
            v.trace = shortest_trace(space, u.state);
            v.state = u.state;
            result.violations.push_back(std::move(v));
        }
    }
    if (!result.violations.empty()) {
        result.fulfilled = Verdict::Violated;
    }
    else if (!exhaustive) {
        result.fulfilled = Verdict::Unknown;
    }
    return result;
}

PropertyResult check_option_to_complete(const StateSpace& space, bool exhaustive)
{
    PropertyResult result{Property::OptionToComplete};
    if (!exhaustive) {
        result.fulfilled = Verdict::Unknown;
        return result;
    }
    const auto& net = space.net();
    const auto coreachable = coreachable_states(space);

    std::vector<std::uint8_t> stuck_region(space.size(), 0);
    bool any = false;
    for (StateIndex s = 0; s < space.size(); ++s) {
        stuck_region[s] = !coreachable[s];
        any = any || stuck_region[s];
    }
    if (!any) {
        return result;
    }

    std::set<std::pair<ViolationKind, std::vector<ElementId>>> seen;
    auto report = [&](Violation v) {
        if (seen.emplace(v.kind, v.elements).second) {
            result.violations.push_back(std::move(v));
        }
    };

    for (StateIndex s = 0; s < space.size(); ++s) {
        if (!stuck_region[s] || !space.edges(s).empty()) {
            continue;
        }
        std::vector<NodeIndex> blocked;
        bool waits_for_message = true;
        for (auto e : space.entries(s)) {
            const auto p = entry_place(e);
            if (net.is_message_place(p)) {
                continue;
            }
            const auto node = net.place_target(p);
            blocked.push_back(node);
            const auto kind = net.node_kind(node);
            waits_for_message = waits_for_message &&
                                (is_message_catch(kind) || kind == NodeKind::EventBasedGateway);
        }
        Violation v{waits_for_message ? ViolationKind::MessageStarvation : ViolationKind::Deadlock,
                    node_ids(net, blocked)};
        v.trace = shortest_trace(space, s);
        v.state = s;
        report(std::move(v));
    }

    auto [comp, comp_count] = components(space, stuck_region);
    std::vector<StateIndex> anchor(comp_count, kUnvisited);
    std::vector<std::uint8_t> cyclic(comp_count, 0);
    std::vector<std::vector<NodeIndex>> fired_inside(comp_count);
    for (StateIndex s = 0; s < space.size(); ++s) {
        if (!stuck_region[s]) {
            continue;
        }
        const auto c = comp[s];
        anchor[c] = std::min(anchor[c], s);
        for (const auto& e : space.edges(s)) {
            if (comp[e.target] == c) {
                cyclic[c] = 1;
                fired_inside[c].push_back(net.transition(e.transition).node);
            }
        }
    }
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < comp_count; ++c) {
        if (cyclic[c]) {
            order.push_back(c);
        }
    }
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return anchor[a] < anchor[b]; });
    for (auto c : order) {
        Violation v{ViolationKind::Livelock, node_ids(net, fired_inside[c])};
        v.trace = shortest_trace(space, anchor[c]);
        v.cycle = cycle_through(space, anchor[c], comp);
        v.state = anchor[c];
        report(std::move(v));
    }

    std::stable_sort(result.violations.begin(), result.violations.end(),
                     [](const Violation& a, const Violation& b) { return *a.state < *b.state; });
    result.fulfilled = result.violations.empty() ? Verdict::Fulfilled : Verdict::Violated;
    return result;
}

PropertyResult check_dead_activities(const StateSpace& space, bool exhaustive)
{
    PropertyResult result{Property::NoDeadActivities};
    if (!exhaustive) {
        result.fulfilled = Verdict::Unknown;
        return result;
    }
    const auto& net = space.net();
    std::vector<ElementId> dead;
    for (NodeIndex n = 0; n < net.node_count(); ++n) {
        if (is_activity(net.node_kind(n)) && !space.fired(n)) {
            dead.push_back(net.node_id(n));
        }
    }
    if (!dead.empty()) {
        result.violations.push_back({ViolationKind::DeadActivity, std::move(dead)});
        result.fulfilled = Verdict::Violated;
    }
    return result;
}

std::optional<StaticWarning> leftover_messages(const StateSpace& space)
{
    const auto& net = space.net();
    std::set<PlaceIndex> flows;
    for (auto t : space.terminals()) {
        for (auto e : space.entries(t)) {
            flows.insert(entry_place(e));
        }
    }
    if (flows.empty()) {
        return std::nullopt;
    }
    StaticWarning w{WarningKind::LeftoverMessages, {}, "messages are left unconsumed at completion"};
    for (auto p : flows) {
        w.elements.push_back(net.place_id(p));
    }
    return w;
}

}  // namespace bpmn
