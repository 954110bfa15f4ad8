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

#include "bpmn/semantics.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace bpmn {

using StateIndex = std::uint32_t;

struct ExplorationLimits {
    std::size_t max_states = 10'000'000;
    /// Applies to sequence flows and message flows alike. At most kMaxTokenCount.
    TokenCount max_tokens_per_place = 100;

    /// Throws std::invalid_argument unless both limits are in range.
    void validate() const;
};

enum class BoundKind { MaxStates, TokenBound };

std::string_view to_string(BoundKind kind);

struct ExplorationStats {
    std::size_t state_count = 0;
    std::size_t transition_count = 0;
    std::chrono::nanoseconds elapsed{0};
    std::optional<BoundKind> bound_hit;
};

struct Edge {
    TransitionIndex transition;
    StateIndex target;
};

struct Predecessor {
    StateIndex state;
    TransitionIndex transition;
};

struct UnsafeState {
    StateIndex state;
    /// Sequence flows holding two or more tokens.
    std::vector<PlaceIndex> flows;
};

struct TraceStep {
    TransitionIndex transition;
    /// Marking after the firing.
    Marking marking;
};

using Trace = std::vector<TraceStep>;

/// Deduplicated reachability graph in breadth-first discovery order.
/// State 0 is the initial marking; state indices are nondecreasing in depth.
class StateSpace {
public:
    explicit StateSpace(std::shared_ptr<const Net> net);

    const Net& net() const { return *net_; }
    std::shared_ptr<const Net> shared_net() const { return net_; }

    std::size_t size() const { return depth_.size(); }
    std::span<const PackedEntry> entries(StateIndex s) const;
    Marking marking(StateIndex s) const;
    std::optional<StateIndex> find(std::span<const PackedEntry> marking) const;

    /// States with index below this have all their outgoing edges recorded.
    std::size_t expanded_count() const { return edge_offsets_.size() - 1; }
    std::span<const Edge> edges(StateIndex s) const;
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<Predecessor> first_predecessor(StateIndex s) const;
    std::uint32_t depth(StateIndex s) const { return depth_[s]; }

    const std::vector<StateIndex>& terminals() const { return terminals_; }
    bool fired(NodeIndex n) const { return fired_[n] != 0; }
    /// Unsafe states in discovery order, so the first entry per flow has minimal depth.
    const std::vector<UnsafeState>& unsafe_states() const { return unsafe_; }

private:
    friend std::pair<StateSpace, ExplorationStats> explore(std::shared_ptr<const Net>,
                                                            const ExplorationLimits&);

    /// Appends a new state; returns its index or the index of the equal state.
    std::pair<StateIndex, bool> insert(std::span<const PackedEntry> marking,
                                       std::optional<Predecessor> predecessor);
    std::uint64_t hash(std::span<const PackedEntry> marking) const;
    void grow_table();

    std::shared_ptr<const Net> net_;
    std::vector<PackedEntry> arena_;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<StateIndex> table_;
    std::uint64_t table_mask_ = 0;

    std::vector<Edge> edges_;
    std::vector<std::uint64_t> edge_offsets_{0};
    std::vector<Predecessor> predecessor_;
    std::vector<std::uint32_t> depth_;
    std::vector<StateIndex> terminals_;
    std::vector<std::uint8_t> fired_;
    std::vector<UnsafeState> unsafe_;
};

/// Breadth-first exploration from the initial marking with on-the-fly
/// collection of terminal states, fired nodes and unsafe states. Runs to
/// exhaustion unless a limit triggers; then `stats.bound_hit` is set and the
/// partial space is returned.
std::pair<StateSpace, ExplorationStats> explore(std::shared_ptr<const Net> net,
                                                const ExplorationLimits& limits = {});

/// Follows first-discovery predecessors from `target` back to the initial
/// state. The trace has depth(target) steps.
Trace shortest_trace(const StateSpace& space, StateIndex target);

}  // namespace bpmn
