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

// Reference token game for tests. Deliberately naive: markings are ordered
// maps keyed by flow id, successors are recomputed from the model's flow
// lists on every call, and reachability is a plain fixpoint iteration over
// a std::set. Shares no code with the engine beyond the model types.

#pragma once

#include "bpmn/model.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Mark {
    std::map<std::string, int> seq;
    std::map<std::string, int> msg;

    friend auto operator<=>(const Mark&, const Mark&) = default;
};

struct Step {
    std::string node;
    Mark after;
};

/// "id=count,..." with sequence flows first, then message flows, each by id.
inline std::string encode(const Mark& m)
{
    std::string out;
    for (const auto* part : {&m.seq, &m.msg}) {
        for (const auto& [id, count] : *part) {
            if (count == 0) continue;
            if (!out.empty()) out += ',';
            out += id + "=" + std::to_string(count);
        }
    }
    return out;
}

inline Mark initial(const bpmn::CollaborationModel& model)
{
    Mark m;
    for (const auto& p : model.processes) {
        for (const auto& n : p.nodes) {
            if (n.kind != bpmn::NodeKind::NoneStartEvent) continue;
            for (const auto& f : model.sequence_flows) {
                if (f.source == n.id) m.seq[f.id] += 1;
            }
        }
    }
    return m;
}

namespace detail {

inline void take(std::map<std::string, int>& part, const std::string& id)
{
    if (--part[id] == 0) part.erase(id);
}

inline bool has(const std::map<std::string, int>& part, const std::string& id)
{
    auto it = part.find(id);
    return it != part.end() && it->second > 0;
}

}  // namespace detail

/// Adjacency lists of a model, built once so enumeration does not rescan
/// the flow lists for every state.
struct Index {
    std::map<std::string, std::vector<std::string>> seq_in, seq_out, msg_in, msg_out;
    std::map<std::string, bpmn::NodeKind> kind;
    std::map<std::string, std::string> seq_target;
    /// Sequence flows by the process of their source node.
    std::map<std::string, std::vector<std::string>> process_flows;

    explicit Index(const bpmn::CollaborationModel& model)
    {
        for (const auto& p : model.processes) {
            for (const auto& n : p.nodes) kind[n.id] = n.kind;
        }
        for (const auto& f : model.sequence_flows) {
            seq_in[f.target].push_back(f.id);
            seq_out[f.source].push_back(f.id);
            seq_target[f.id] = f.target;
            process_flows[model.find_node(f.source)->process].push_back(f.id);
        }
        for (const auto& f : model.message_flows) {
            msg_in[f.target].push_back(f.id);
            msg_out[f.source].push_back(f.id);
        }
    }
};

/// All successors of `m`, each labelled with the fired node.
inline std::vector<Step> successors(const bpmn::CollaborationModel& model, const Index& index, const Mark& m)
{
    using bpmn::NodeKind;
    using detail::has;
    using detail::take;

    static const std::vector<std::string> none;
    auto lookup = [](const auto& map, const std::string& node) -> const std::vector<std::string>& {
        auto it = map.find(node);
        return it == map.end() ? none : it->second;
    };
    auto seq_in = [&](const std::string& node) -> const auto& { return lookup(index.seq_in, node); };
    auto seq_out = [&](const std::string& node) -> const auto& { return lookup(index.seq_out, node); };
    auto msg_in = [&](const std::string& node) -> const auto& { return lookup(index.msg_in, node); };
    auto msg_out = [&](const std::string& node) -> const auto& { return lookup(index.msg_out, node); };
    auto kind_of = [&](const std::string& node) { return index.kind.at(node); };

    std::vector<Step> out;
    for (const auto& process : model.processes) {
        for (const auto& n : process.nodes) {
            const auto produce_all = [&](Mark& next) {
                for (const auto& o : seq_out(n.id)) next.seq[o] += 1;
            };
            const auto send_all = [&](Mark& next) {
                for (const auto& o : msg_out(n.id)) next.msg[o] += 1;
            };
            switch (n.kind) {
            case NodeKind::NoneStartEvent:
                break;
            case NodeKind::MessageStartEvent:
                for (const auto& mi : msg_in(n.id)) {
                    if (!has(m.msg, mi)) continue;
                    Mark next = m;
                    take(next.msg, mi);
                    produce_all(next);
                    out.push_back({n.id, next});
                }
                break;
            case NodeKind::Task:
            case NodeKind::SendTask:
            case NodeKind::IntermediateMessageThrow:
            case NodeKind::NoneEndEvent:
            case NodeKind::MessageEndEvent:
                for (const auto& in : seq_in(n.id)) {
                    if (!has(m.seq, in)) continue;
                    Mark next = m;
                    take(next.seq, in);
                    produce_all(next);
                    send_all(next);
                    out.push_back({n.id, next});
                }
                break;
            case NodeKind::TerminateEndEvent:
                for (const auto& in : seq_in(n.id)) {
                    if (!has(m.seq, in)) continue;
                    Mark next = m;
                    take(next.seq, in);
                    for (const auto& f : lookup(index.process_flows, n.process)) next.seq.erase(f);
                    out.push_back({n.id, next});
                }
                break;
            case NodeKind::ReceiveTask:
            case NodeKind::IntermediateMessageCatch:
                for (const auto& in : seq_in(n.id)) {
                    for (const auto& mi : msg_in(n.id)) {
                        if (!has(m.seq, in) || !has(m.msg, mi)) continue;
                        Mark next = m;
                        take(next.seq, in);
                        take(next.msg, mi);
                        produce_all(next);
                        out.push_back({n.id, next});
                    }
                }
                break;
            case NodeKind::ExclusiveGateway:
                for (const auto& in : seq_in(n.id)) {
                    if (!has(m.seq, in)) continue;
                    for (const auto& o : seq_out(n.id)) {
                        Mark next = m;
                        take(next.seq, in);
                        next.seq[o] += 1;
                        out.push_back({n.id, next});
                    }
                }
                break;
            case NodeKind::ParallelGateway: {
                const auto ins = seq_in(n.id);
                bool ready = !ins.empty();
                for (const auto& in : ins) ready = ready && has(m.seq, in);
                if (!ready) break;
                Mark next = m;
                for (const auto& in : ins) take(next.seq, in);
                produce_all(next);
                out.push_back({n.id, next});
                break;
            }
            case NodeKind::EventBasedGateway:
                for (const auto& in : seq_in(n.id)) {
                    if (!has(m.seq, in)) continue;
                    for (const auto& o : seq_out(n.id)) {
                        const auto& event = index.seq_target.at(o);
                        if (!bpmn::is_message_catch(kind_of(event))) continue;
                        for (const auto& mi : msg_in(event)) {
                            if (!has(m.msg, mi)) continue;
                            Mark next = m;
                            take(next.seq, in);
                            take(next.msg, mi);
                            for (const auto& eo : seq_out(event)) next.seq[eo] += 1;
                            out.push_back({event, next});
                        }
                    }
                }
                break;
            }
        }
    }
    return out;
}

inline std::vector<Step> successors(const bpmn::CollaborationModel& model, const Mark& m)
{
    return successors(model, Index(model), m);
}

inline bool terminal(const Mark& m) { return m.seq.empty(); }

struct Reachability {
    std::set<Mark> states;
    /// Nodes that fire in some reachable transition.
    std::set<std::string> fired;
    std::map<Mark, std::vector<Step>> edges;
};

/// Worklist closure in last-in first-out order: expand any state not yet
/// expanded until none is left. Gives up (returns false) beyond `limit` states.
inline bool enumerate(const bpmn::CollaborationModel& model, Reachability& r,
                      std::size_t limit = 200'000)
{
    r = {};
    const Index index(model);
    std::vector<Mark> work{initial(model)};
    r.states.insert(work.back());
    while (!work.empty()) {
        Mark m = std::move(work.back());
        work.pop_back();
        auto steps = successors(model, index, m);
        for (const auto& s : steps) {
            r.fired.insert(s.node);
            if (r.states.insert(s.after).second) work.push_back(s.after);
        }
        r.edges[m] = std::move(steps);
        if (r.states.size() > limit) return false;
    }
    return true;
}

inline std::set<std::string> encodings(const Reachability& r)
{
    std::set<std::string> out;
    for (const auto& m : r.states) out.insert(encode(m));
    return out;
}

/// States from which no terminal state is reachable: everything outside
/// the backward closure of the terminal states.
inline std::set<Mark> cannot_complete(const Reachability& r)
{
    std::map<Mark, std::vector<Mark>> preds;
    for (const auto& [m, steps] : r.edges) {
        for (const auto& s : steps) preds[s.after].push_back(m);
    }
    std::set<Mark> good;
    std::vector<Mark> work;
    for (const auto& m : r.states) {
        if (terminal(m)) {
            good.insert(m);
            work.push_back(m);
        }
    }
    while (!work.empty()) {
        const Mark m = std::move(work.back());
        work.pop_back();
        for (const auto& p : preds[m]) {
            if (good.insert(p).second) work.push_back(p);
        }
    }
    std::set<Mark> bad;
    for (const auto& m : r.states) if (!good.count(m)) bad.insert(m);
    return bad;
}

/// Sequence flows that hold two or more tokens in some reachable state.
inline std::set<std::string> unsafe_flows(const Reachability& r)
{
    std::set<std::string> out;
    for (const auto& m : r.states) {
        for (const auto& [id, c] : m.seq) if (c >= 2) out.insert(id);
    }
    return out;
}

/// Shortest distance from the initial state by label correcting: a state
/// is revisited whenever a shorter path to it turns up.
inline std::map<Mark, int> depths(const bpmn::CollaborationModel& model, const Reachability& r)
{
    std::map<Mark, int> d{{initial(model), 0}};
    std::vector<Mark> work{initial(model)};
    while (!work.empty()) {
        const Mark m = std::move(work.back());
        work.pop_back();
        const int next = d.at(m) + 1;
        const auto it = r.edges.find(m);
        if (it == r.edges.end()) continue;
        for (const auto& s : it->second) {
            auto [jt, inserted] = d.emplace(s.after, next);
            if (inserted || jt->second > next) {
                jt->second = next;
                work.push_back(s.after);
            }
        }
    }
    return d;
}

}  // namespace oracle
