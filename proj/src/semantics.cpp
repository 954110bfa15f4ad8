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

#include "bpmn/semantics.hpp"

#include <algorithm>
#include <tuple>

namespace bpmn {

namespace {

struct Adjacency {
    std::vector<PlaceIndex> seq_in, seq_out, msg_in, msg_out;
};

std::vector<std::pair<PlaceIndex, int>> compute_delta(const Transition& t)
{
    std::map<PlaceIndex, int> d;
    for (auto p : t.consumed_seq) --d[p];
    for (auto p : t.consumed_msg) --d[p];
    for (auto p : t.produced_seq) ++d[p];
    for (auto p : t.produced_msg) ++d[p];
    std::vector<std::pair<PlaceIndex, int>> out;
    for (auto [p, v] : d) {
        if (v != 0) {
            out.emplace_back(p, v);
        }
    }
    return out;
}

}  // namespace

TokenCount Marking::count(PlaceIndex place) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pack_entry(place, 0));
    if (it != entries_.end() && entry_place(*it) == place) {
        return entry_count(*it);
    }
    return 0;
}

Net::Net(const CollaborationModel& model)
{
    // Nodes sorted by id.
    std::vector<const FlowNode*> nodes;
    std::unordered_map<std::string_view, std::uint32_t> process_of;
    for (std::uint32_t pi = 0; pi < model.processes.size(); ++pi) {
        for (const auto& n : model.processes[pi].nodes) {
            nodes.push_back(&n);
            process_of.emplace(n.id, pi);
        }
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const FlowNode* a, const FlowNode* b) { return a->id < b->id; });
    for (const auto* n : nodes) {
        node_index_.emplace(n->id, static_cast<NodeIndex>(node_ids_.size()));
        node_ids_.push_back(n->id);
        node_kinds_.push_back(n->kind);
    }
    auto node_at = [this](const std::string& id) {
        auto it = node_index_.find(id);
        if (it == node_index_.end()) {
            throw ModelError(ModelErrorKind::DanglingReference, "unknown node '" + id + "'");
        }
        return it->second;
    };

    // Places: sequence flows then message flows, each sorted by id.
    std::vector<const SequenceFlow*> seq;
    for (const auto& f : model.sequence_flows) seq.push_back(&f);
    std::sort(seq.begin(), seq.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::vector<const MessageFlow*> msg;
    for (const auto& f : model.message_flows) msg.push_back(&f);
    std::sort(msg.begin(), msg.end(), [](auto* a, auto* b) { return a->id < b->id; });

    std::vector<Adjacency> adj(node_ids_.size());
    auto add_place = [&](const std::string& id, const std::string& src, const std::string& dst) {
        auto p = static_cast<PlaceIndex>(place_ids_.size());
        place_ids_.push_back(id);
        place_index_.emplace(id, p);
        place_sources_.push_back(node_at(src));
        place_targets_.push_back(node_at(dst));
        place_process_.push_back(process_of.at(src));
        return p;
    };
    for (const auto* f : seq) {
        auto p = add_place(f->id, f->source, f->target);
        adj[place_sources_[p]].seq_out.push_back(p);
        adj[place_targets_[p]].seq_in.push_back(p);
    }
    sequence_flow_count_ = place_ids_.size();
    for (const auto* f : msg) {
        auto p = add_place(f->id, f->source, f->target);
        adj[place_sources_[p]].msg_out.push_back(p);
        adj[place_targets_[p]].msg_in.push_back(p);
    }
    if (place_ids_.size() >= (1u << 24)) {
        throw ModelError(ModelErrorKind::InvalidStructure, "too many flows");
    }

    // Firing modes.
    auto emit = [this](Transition t) { transitions_.push_back(std::move(t)); };
    for (NodeIndex n = 0; n < node_ids_.size(); ++n) {
        const auto& a = adj[n];
        const auto kind = node_kinds_[n];
        auto base = [&]() {
            Transition t;
            t.node = n;
            return t;
        };
        switch (kind) {
        case NodeKind::NoneStartEvent:
            break;
        case NodeKind::MessageStartEvent:
            for (auto m : a.msg_in) {
                auto t = base();
                t.consumed_msg = {m};
                t.produced_seq = a.seq_out;
                emit(std::move(t));
            }
            break;
        case NodeKind::Task:
        case NodeKind::SendTask:
        case NodeKind::IntermediateMessageThrow:
        case NodeKind::NoneEndEvent:
        case NodeKind::MessageEndEvent:
        case NodeKind::TerminateEndEvent:
            for (auto in : a.seq_in) {
                auto t = base();
                t.consumed_seq = {in};
                if (!is_end_event(kind)) {
                    t.produced_seq = a.seq_out;
                }
                if (is_message_sender(kind)) {
                    t.produced_msg = a.msg_out;
                }
                if (kind == NodeKind::TerminateEndEvent) {
                    t.clears_process = place_process_[in];
                }
                emit(std::move(t));
            }
            break;
        case NodeKind::ReceiveTask:
        case NodeKind::IntermediateMessageCatch:
            for (auto in : a.seq_in) {
                for (auto m : a.msg_in) {
                    auto t = base();
                    t.consumed_seq = {in};
                    t.consumed_msg = {m};
                    t.produced_seq = a.seq_out;
                    emit(std::move(t));
                }
            }
            break;
        case NodeKind::ExclusiveGateway:
            for (auto in : a.seq_in) {
                for (auto out : a.seq_out) {
                    auto t = base();
                    t.consumed_seq = {in};
                    t.produced_seq = {out};
                    emit(std::move(t));
                }
            }
            break;
        case NodeKind::ParallelGateway:
            if (!a.seq_in.empty()) {
                auto t = base();
                t.consumed_seq = a.seq_in;
                t.produced_seq = a.seq_out;
                emit(std::move(t));
            }
            break;
        case NodeKind::EventBasedGateway:
            for (auto in : a.seq_in) {
                for (auto out : a.seq_out) {
                    const NodeIndex event = place_targets_[out];
                    const auto& ea = adj[event];
                    for (auto m : ea.msg_in) {
                        auto t = base();
                        t.consumed_seq = {in};
                        t.consumed_msg = {m};
                        t.produced_seq = ea.seq_out;
                        t.chosen_event = event;
                        emit(std::move(t));
                    }
                }
            }
            break;
        }
    }

    for (auto& t : transitions_) {
        std::sort(t.consumed_seq.begin(), t.consumed_seq.end());
        std::sort(t.produced_seq.begin(), t.produced_seq.end());
        std::sort(t.consumed_msg.begin(), t.consumed_msg.end());
        std::sort(t.produced_msg.begin(), t.produced_msg.end());
        t.delta = compute_delta(t);
    }
    auto order_key = [](const Transition& t) {
        return std::tie(t.node, t.consumed_seq, t.produced_seq, t.chosen_event, t.consumed_msg);
    };
    std::stable_sort(transitions_.begin(), transitions_.end(),
                     [&](const Transition& a, const Transition& b) {
                         return order_key(a) < order_key(b);
                     });

    consumers_.resize(place_ids_.size());
    for (TransitionIndex i = 0; i < transitions_.size(); ++i) {
        auto& t = transitions_[i];
        t.index = i;
        for (auto p : t.consumed_seq) consumers_[p].push_back(i);
        for (auto p : t.consumed_msg) consumers_[p].push_back(i);
    }

    std::vector<PackedEntry> init;
    for (NodeIndex n = 0; n < node_ids_.size(); ++n) {
        if (node_kinds_[n] == NodeKind::NoneStartEvent) {
            for (auto p : adj[n].seq_out) {
                init.push_back(pack_entry(p, 1));
            }
        }
    }
    std::sort(init.begin(), init.end());
    initial_ = Marking(std::move(init));
}

std::optional<PlaceIndex> Net::place(std::string_view flow_id) const
{
    auto it = place_index_.find(std::string(flow_id));
    if (it == place_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<NodeIndex> Net::node(std::string_view node_id) const
{
    auto it = node_index_.find(std::string(node_id));
    if (it == node_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Net::is_enabled(std::span<const PackedEntry> marking, const Transition& t) const
{
    if (t.consumed_seq.empty() && t.consumed_msg.empty()) {
        return false;
    }
    auto has = [&](PlaceIndex p) {
        auto it = std::lower_bound(marking.begin(), marking.end(), pack_entry(p, 0));
        return it != marking.end() && entry_place(*it) == p;
    };
    return std::all_of(t.consumed_seq.begin(), t.consumed_seq.end(), has) &&
           std::all_of(t.consumed_msg.begin(), t.consumed_msg.end(), has);
}

void Net::collect_enabled(std::span<const PackedEntry> marking,
                          std::vector<TransitionIndex>& out) const
{
    const auto first = out.size();
    for (auto e : marking) {
        const auto& c = consumers_[entry_place(e)];
        out.insert(out.end(), c.begin(), c.end());
    }
    auto begin = out.begin() + static_cast<std::ptrdiff_t>(first);
    std::sort(begin, out.end());
    out.erase(std::unique(begin, out.end()), out.end());
    out.erase(std::remove_if(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                             [&](TransitionIndex t) { return !is_enabled(marking, transitions_[t]); }),
              out.end());
}

bool Net::fire_into(std::span<const PackedEntry> marking, const Transition& t,
                    std::vector<PackedEntry>& out, TokenCount max_count) const
{
    out.clear();
    out.reserve(marking.size() + t.delta.size());
    auto m = marking.begin();
    auto d = t.delta.begin();
    bool within = true;
    auto push = [&](PlaceIndex p, std::int64_t c) {
        if (c < 0) {
            throw SemanticsError("transition '" + describe(t) + "' is not enabled");
        }
        if (c == 0) {
            return;
        }
        if (t.clears_process && !is_message_place(p) && place_process_[p] == *t.clears_process) {
            return;
        }
        if (c > static_cast<std::int64_t>(max_count)) {
            within = false;
            c = std::min<std::int64_t>(c, kMaxTokenCount);
        }
        out.push_back(pack_entry(p, static_cast<TokenCount>(c)));
    };
    while (m != marking.end() || d != t.delta.end()) {
        if (d == t.delta.end() || (m != marking.end() && entry_place(*m) < d->first)) {
            push(entry_place(*m), entry_count(*m));
            ++m;
        }
        else if (m == marking.end() || d->first < entry_place(*m)) {
            push(d->first, d->second);
            ++d;
        }
        else {
            push(d->first, static_cast<std::int64_t>(entry_count(*m)) + d->second);
            ++m;
            ++d;
        }
    }
    return within;
}

std::string Net::encode(std::span<const PackedEntry> marking) const
{
    std::string out;
    for (auto e : marking) {
        if (!out.empty()) out += ',';
        out += place_ids_[entry_place(e)];
        out += '=';
        out += std::to_string(entry_count(e));
    }
    return out;
}

std::string Net::describe(const Marking& marking) const
{
    std::string seq, msg;
    for (auto e : marking.entries()) {
        auto& target = is_message_place(entry_place(e)) ? msg : seq;
        if (!target.empty()) target += ", ";
        target += place_ids_[entry_place(e)] + ":" + std::to_string(entry_count(e));
    }
    return "{" + seq + (msg.empty() ? "" : " | " + msg) + "}";
}

std::string Net::describe(const Transition& t) const
{
    std::string out = node_ids_[t.node];
    if (t.chosen_event) {
        out += "->" + node_ids_[*t.chosen_event];
    }
    return out;
}

Marking Net::make_marking(const std::map<std::string, TokenCount>& counts) const
{
    std::vector<PackedEntry> entries;
    for (const auto& [id, c] : counts) {
        auto p = place(id);
        if (!p) {
            throw std::out_of_range("unknown flow '" + id + "'");
        }
        if (c > 0) {
            entries.push_back(pack_entry(*p, std::min(c, kMaxTokenCount)));
        }
    }
    std::sort(entries.begin(), entries.end());
    return Marking(std::move(entries));
}

Marking initial_marking(const Net& net) { return net.initial(); }

std::vector<const Transition*> enabled_transitions(const Net& net, const Marking& m)
{
    std::vector<TransitionIndex> indices;
    net.collect_enabled(m.entries(), indices);
    std::vector<const Transition*> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(&net.transition(i));
    }
    return out;
}

Marking fire(const Net& net, const Marking& m, const Transition& t)
{
    if (!net.is_enabled(m.entries(), t)) {
        throw SemanticsError("transition '" + net.describe(t) + "' is not enabled in " +
                             net.describe(m));
    }
    std::vector<PackedEntry> out;
    if (!net.fire_into(m.entries(), t, out)) {
        throw SemanticsError("token count overflow firing '" + net.describe(t) + "'");
    }
    return Marking(std::move(out));
}

bool is_terminal(const Net& net, std::span<const PackedEntry> m)
{
    // Sequence places sort first, so a terminal marking has either no
    // entries or only message entries.
    return m.empty() || net.is_message_place(entry_place(m.front()));
}

bool is_terminal(const Net& net, const Marking& m) { return is_terminal(net, m.entries()); }

}  // namespace bpmn
