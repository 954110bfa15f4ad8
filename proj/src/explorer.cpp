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

#include "bpmn/explorer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bpmn {

namespace {

constexpr StateIndex kEmptySlot = std::numeric_limits<StateIndex>::max();
constexpr Predecessor kNoPredecessor{kEmptySlot, 0};

}  // namespace

void ExplorationLimits::validate() const
{
    if (max_states < 1 || max_states >= kEmptySlot) {
        throw std::invalid_argument("max states must be between 1 and 2^32-2");
    }
    if (max_tokens_per_place < 1 || max_tokens_per_place > kMaxTokenCount) {
        throw std::invalid_argument("max tokens per place must be between 1 and " +
                                    std::to_string(kMaxTokenCount));
    }
}

std::string_view to_string(BoundKind kind)
{
    return kind == BoundKind::MaxStates ? "MaxStates" : "TokenBound";
}

StateSpace::StateSpace(std::shared_ptr<const Net> net)
    : net_(std::move(net)), table_(1024, kEmptySlot), table_mask_(1023),
      fired_(net_->node_count(), 0)
{
}

std::span<const PackedEntry> StateSpace::entries(StateIndex s) const
{
    return {arena_.data() + offsets_[s], static_cast<std::size_t>(offsets_[s + 1] - offsets_[s])};
}

Marking StateSpace::marking(StateIndex s) const
{
    auto e = entries(s);
    return Marking({e.begin(), e.end()});
}

std::span<const Edge> StateSpace::edges(StateIndex s) const
{
    if (s >= expanded_count()) {
        return {};
    }
    return {edges_.data() + edge_offsets_[s],
            static_cast<std::size_t>(edge_offsets_[s + 1] - edge_offsets_[s])};
}

std::optional<Predecessor> StateSpace::first_predecessor(StateIndex s) const
{
    if (predecessor_[s].state == kEmptySlot) {
        return std::nullopt;
    }
    return predecessor_[s];
}

std::uint64_t StateSpace::hash(std::span<const PackedEntry> marking) const
{
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ marking.size();
    for (auto e : marking) {
        h ^= e;
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 31;
    }
    return h;
}

std::optional<StateIndex> StateSpace::find(std::span<const PackedEntry> marking) const
{
    for (auto slot = hash(marking) & table_mask_;; slot = (slot + 1) & table_mask_) {
        const auto s = table_[slot];
        if (s == kEmptySlot) {
            return std::nullopt;
        }
        auto e = entries(s);
        if (std::equal(e.begin(), e.end(), marking.begin(), marking.end())) {
            return s;
        }
    }
}

void StateSpace::grow_table()
{
    std::vector<StateIndex> bigger(table_.size() * 2, kEmptySlot);
    const auto mask = bigger.size() - 1;
    for (auto s : table_) {
        if (s == kEmptySlot) {
            continue;
        }
        auto slot = hash(entries(s)) & mask;
        while (bigger[slot] != kEmptySlot) {
            slot = (slot + 1) & mask;
        }
        bigger[slot] = s;
    }
    table_ = std::move(bigger);
    table_mask_ = mask;
}

std::pair<StateIndex, bool> StateSpace::insert(std::span<const PackedEntry> marking,
                                               std::optional<Predecessor> predecessor)
{
    auto slot = hash(marking) & table_mask_;
    for (;; slot = (slot + 1) & table_mask_) {
        const auto s = table_[slot];
        if (s == kEmptySlot) {
            break;
        }
        auto e = entries(s);
        if (std::equal(e.begin(), e.end(), marking.begin(), marking.end())) {
            return {s, false};
        }
    }

    const auto index = static_cast<StateIndex>(size());
    table_[slot] = index;
    arena_.insert(arena_.end(), marking.begin(), marking.end());
    offsets_.push_back(arena_.size());
    predecessor_.push_back(predecessor.value_or(kNoPredecessor));
    depth_.push_back(predecessor ? depth_[predecessor->state] + 1 : 0);

    std::vector<PlaceIndex> unsafe;
    for (auto e : marking) {
        if (!net_->is_message_place(entry_place(e)) && entry_count(e) >= 2) {
            unsafe.push_back(entry_place(e));
        }
    }
    if (!unsafe.empty()) {
        unsafe_.push_back({index, std::move(unsafe)});
    }
    if (is_terminal(*net_, marking)) {
        terminals_.push_back(index);
    }

    if (size() * 2 > table_.size()) {
        grow_table();
    }
    return {index, true};
}

std::pair<StateSpace, ExplorationStats> explore(std::shared_ptr<const Net> net,
                                                const ExplorationLimits& limits)
{
    limits.validate();
    const auto started = std::chrono::steady_clock::now();

    StateSpace space(net);
    ExplorationStats stats;

    space.insert(net->initial().entries(), std::nullopt);

    std::vector<PackedEntry> current;
    std::vector<PackedEntry> successor;
    std::vector<TransitionIndex> enabled;
    bool stopped = false;

    for (StateIndex s = 0; s < space.size() && !stopped; ++s) {
        auto e = space.entries(s);
        current.assign(e.begin(), e.end());

        enabled.clear();
        net->collect_enabled(current, enabled);
        for (auto ti : enabled) {
            const auto& t = net->transition(ti);
            space.fired_[t.node] = 1;
            if (t.chosen_event) {
                space.fired_[*t.chosen_event] = 1;
            }
            if (!net->fire_into(current, t, successor, limits.max_tokens_per_place)) {
                stats.bound_hit = BoundKind::TokenBound;
                continue;
            }
            auto known = space.find(successor);
            if (!known && space.size() >= limits.max_states) {
                stats.bound_hit = BoundKind::MaxStates;
                stopped = true;
                space.edges_.resize(space.edge_offsets_.back());
                break;
            }
            StateIndex target = known ? *known : space.insert(successor, Predecessor{s, ti}).first;
            space.edges_.push_back({ti, target});
        }
        if (!stopped) {
            space.edge_offsets_.push_back(space.edges_.size());
        }
    }

    stats.state_count = space.size();
    stats.transition_count = space.edge_count();
    stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - started);
    return {std::move(space), stats};
}

Trace shortest_trace(const StateSpace& space, StateIndex target)
{
    if (target >= space.size()) {
        throw std::out_of_range("state index out of range");
    }
    Trace trace;
    auto s = target;
    while (auto pred = space.first_predecessor(s)) {
        trace.push_back({pred->transition, space.marking(s)});
        s = pred->state;
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
}

}  // namespace bpmn
