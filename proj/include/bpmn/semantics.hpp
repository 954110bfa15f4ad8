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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bpmn {

/// Sequence flows and message flows share one index space. Sequence flows
/// come first, each group sorted by id, so ordering by place index is the
/// canonical ordering by flow id.
using PlaceIndex = std::uint32_t;
using NodeIndex = std::uint32_t;
using TransitionIndex = std::uint32_t;
using TokenCount = std::uint32_t;

inline constexpr TokenCount kMaxTokenCount = 255;

/// A marking entry packs the place index into the upper 24 bits and the
/// (nonzero) count into the lower 8.
using PackedEntry = std::uint32_t;

constexpr PackedEntry pack_entry(PlaceIndex place, TokenCount count)
{
    return (place << 8) | count;
}
constexpr PlaceIndex entry_place(PackedEntry e) { return e >> 8; }
constexpr TokenCount entry_count(PackedEntry e) { return e & 0xFFu; }

/// Token counts on sequence flows plus pending messages on message flows.
/// Only nonzero entries are stored, sorted by place, so equal markings have
/// identical encodings.
class Marking {
public:
    Marking() = default;
    explicit Marking(std::vector<PackedEntry> entries) : entries_(std::move(entries)) {}

    TokenCount count(PlaceIndex place) const;
    std::span<const PackedEntry> entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const Marking&, const Marking&) = default;

private:
    std::vector<PackedEntry> entries_;
};

/// One firing mode of a node. Modes are static: enabling depends only on
/// the availability of the consumed tokens and messages.
struct Transition {
    TransitionIndex index = 0;
    NodeIndex node = 0;
    std::vector<PlaceIndex> consumed_seq;
    std::vector<PlaceIndex> produced_seq;
    std::vector<PlaceIndex> consumed_msg;
    std::vector<PlaceIndex> produced_msg;
    /// Catch node taken by an event-based gateway firing.
    std::optional<NodeIndex> chosen_event;
    /// Set for terminate end events: every remaining sequence-flow token of
    /// this process is removed after consumption.
    std::optional<std::uint32_t> clears_process;

    /// Net effect per place, sorted by place; clearing not included.
    std::vector<std::pair<PlaceIndex, int>> delta;
};

class SemanticsError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The token game of a collaboration, compiled to integer indices.
class Net {
public:
    explicit Net(const CollaborationModel& model);

    std::size_t place_count() const { return place_ids_.size(); }
    std::size_t sequence_flow_count() const { return sequence_flow_count_; }
    bool is_message_place(PlaceIndex p) const { return p >= sequence_flow_count_; }
    const std::string& place_id(PlaceIndex p) const { return place_ids_[p]; }
    std::optional<PlaceIndex> place(std::string_view flow_id) const;
    /// Node that consumes from this place (target of the flow).
    NodeIndex place_target(PlaceIndex p) const { return place_targets_[p]; }
    NodeIndex place_source(PlaceIndex p) const { return place_sources_[p]; }

    std::size_t node_count() const { return node_ids_.size(); }
    const std::string& node_id(NodeIndex n) const { return node_ids_[n]; }
    NodeKind node_kind(NodeIndex n) const { return node_kinds_[n]; }
    std::optional<NodeIndex> node(std::string_view node_id) const;

    const std::vector<Transition>& transitions() const { return transitions_; }
    const Transition& transition(TransitionIndex t) const { return transitions_[t]; }
    std::span<const TransitionIndex> consumers(PlaceIndex p) const { return consumers_[p]; }

    const Marking& initial() const { return initial_; }

    /// Appends the enabled transitions of `marking` to `out` in canonical order.
    void collect_enabled(std::span<const PackedEntry> marking,
                         std::vector<TransitionIndex>& out) const;

    /// Writes the successor into `out`. Returns false when some count would
    /// exceed `max_count` (the output is then unspecified).
    bool fire_into(std::span<const PackedEntry> marking, const Transition& t,
                   std::vector<PackedEntry>& out, TokenCount max_count = kMaxTokenCount) const;

    bool is_enabled(std::span<const PackedEntry> marking, const Transition& t) const;

    /// "{f1:1, f2:1 | mf1:1}" with flow ids; messages after the bar.
    std::string describe(const Marking& marking) const;
    /// Canonical text encoding: "id=count" pairs over nonzero entries,
    /// sorted by flow id, sequence flows before message flows.
    std::string encode(std::span<const PackedEntry> marking) const;
    std::string describe(const Transition& t) const;

    /// Builds a marking from flow ids. Throws std::out_of_range on unknown ids.
    Marking make_marking(const std::map<std::string, TokenCount>& counts) const;

private:
    std::vector<std::string> place_ids_;
    std::unordered_map<std::string, PlaceIndex> place_index_;
    std::vector<NodeIndex> place_targets_;
    std::vector<NodeIndex> place_sources_;
    std::vector<std::uint32_t> place_process_;
    std::size_t sequence_flow_count_ = 0;

    std::vector<std::string> node_ids_;
    std::vector<NodeKind> node_kinds_;
    std::unordered_map<std::string, NodeIndex> node_index_;

    std::vector<Transition> transitions_;
    std::vector<std::vector<TransitionIndex>> consumers_;
    Marking initial_;
};

/// One token on each outgoing flow of each none start event.
Marking initial_marking(const Net& net);

/// Enabled firings in canonical order (node id, consumed flows, produced
/// flows, chosen event).
std::vector<const Transition*> enabled_transitions(const Net& net, const Marking& m);

/// Returns m - consumed + produced. Throws SemanticsError if `t` is not
/// enabled or a count would exceed kMaxTokenCount.
Marking fire(const Net& net, const Marking& m, const Transition& t);

/// No sequence flow holds a token. Pending messages do not count.
bool is_terminal(const Net& net, const Marking& m);
bool is_terminal(const Net& net, std::span<const PackedEntry> m);

}  // namespace bpmn
