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

#include "bpmn/report.hpp"

#include <sstream>

namespace bpmn {

namespace {

using Json = nlohmann::ordered_json;

struct StepMoves {
    std::string fire;
    std::vector<std::string> consume;
    std::vector<std::string> produce;
};

// Token moves of one firing. Clearing by a terminate end event is not part
// of the transition's consumed lists, so it is read off the two markings.
StepMoves step_moves(const Net& net, const Marking& before, const TraceStep& step)
{
    const auto& t = net.transition(step.transition);
    StepMoves moves;
    moves.fire = net.node_id(t.node);
    for (auto p : t.consumed_seq) moves.consume.push_back(net.place_id(p));
    for (auto p : t.consumed_msg) moves.consume.push_back(net.place_id(p));
    if (t.clears_process) {
        for (auto e : before.entries()) {
            const auto p = entry_place(e);
            if (net.is_message_place(p)) continue;
            TokenCount left = entry_count(e);
            for (auto c : t.consumed_seq) {
                if (c == p) --left;
            }
            for (TokenCount i = step.marking.count(p); i < left; ++i) {
                moves.consume.push_back(net.place_id(p));
            }
        }
    }
    for (auto p : t.produced_seq) moves.produce.push_back(net.place_id(p));
    for (auto p : t.produced_msg) moves.produce.push_back(net.place_id(p));
    return moves;
}

Json steps_json(const Net& net, const Marking& start, const Trace& trace)
{
    Json steps = Json::array();
    const Marking* before = &start;
    for (const auto& step : trace) {
        auto moves = step_moves(net, *before, step);
        steps.push_back({{"fire", moves.fire}, {"consume", moves.consume}, {"produce", moves.produce}});
        before = &step.marking;
    }
    return Json{{"steps", std::move(steps)}};
}

const Marking& end_of(const Net& net, const Trace& trace)
{
    return trace.empty() ? net.initial() : trace.back().marking;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ")
{
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

}  // namespace

std::string model_display_name(const CollaborationModel& model)
{
    if (model.collaboration) return *model.collaboration;
    return model.processes.empty() ? std::string{} : model.processes.front().id;
}

Json diagnosis_json(const Diagnosis& d, const std::string& model_name)
{
    Json doc;
    doc["model"] = model_name;

    Json stats;
    stats["states"] = d.stats.state_count;
    stats["transitions"] = d.stats.transition_count;
    stats["runtime_us"] = std::chrono::duration_cast<std::chrono::microseconds>(d.stats.elapsed).count();
    if (d.stats.bound_hit) stats["boundHit"] = to_string(*d.stats.bound_hit);
    doc["stats"] = std::move(stats);

    Json properties = Json::array();
    for (const auto& r : d.results) {
        Json violations = Json::array();
        for (const auto& v : r.violations) {
            Json jv;
            jv["kind"] = to_string(v.kind);
            jv["elements"] = v.elements;
            if (v.trace) jv["trace"] = steps_json(*d.net, d.net->initial(), *v.trace);
            if (v.cycle) {
                const auto& anchor = v.trace ? end_of(*d.net, *v.trace) : d.net->initial();
                jv["cycle"] = steps_json(*d.net, anchor, *v.cycle);
            }
            if (!v.note.empty()) jv["note"] = v.note;
            violations.push_back(std::move(jv));
        }
        properties.push_back({{"name", to_string(r.property)},
                              {"fulfilled", to_string(r.fulfilled)},
                              {"violations", std::move(violations)}});
    }
    doc["properties"] = std::move(properties);

    Json fixes = Json::array();
    for (const auto& f : d.quick_fixes) {
        fixes.push_back({{"id", f.id},
                         {"kind", to_string(f.kind)},
                         {"targets", f.targets},
                         {"description", f.description}});
    }
    doc["quickFixes"] = std::move(fixes);

    Json warnings = Json::array();
    for (const auto& w : d.warnings) {
        warnings.push_back({{"kind", to_string(w.kind)}, {"elements", w.elements}});
    }
    doc["warnings"] = std::move(warnings);
    return doc;
}

std::string diagnosis_text(const Diagnosis& d, const std::string& model_name)
{
    std::ostringstream out;
    if (d.all_fulfilled()) {
        out << "all properties fulfilled\n";
    }
    out << model_name << ": " << d.stats.state_count << " states, " << d.stats.transition_count
        << " transitions, " << std::chrono::duration_cast<std::chrono::microseconds>(d.stats.elapsed).count()
        << " us";
    if (d.stats.bound_hit) out << " (stopped at " << to_string(*d.stats.bound_hit) << " bound)";
    out << "\n";

    for (const auto& r : d.results) {
        out << "  " << to_string(r.property) << ": " << to_string(r.fulfilled) << "\n";
        for (const auto& v : r.violations) {
            out << "    " << to_string(v.kind) << " at " << join(v.elements);
            if (!v.note.empty()) out << " (" << v.note << ")";
            out << "\n";
            if (v.trace) {
                out << "      trace:";
                for (const auto& s : *v.trace) out << " " << d.net->node_id(d.net->transition(s.transition).node);
                if (v.trace->empty()) out << " (initial state)";
                out << "\n";
            }
            if (v.cycle) {
                out << "      cycle:";
                for (const auto& s : *v.cycle) out << " " << d.net->node_id(d.net->transition(s.transition).node);
                out << "\n";
            }
        }
    }
    for (const auto& w : d.warnings) {
        out << "  warning " << to_string(w.kind) << ": " << (w.message.empty() ? join(w.elements) : w.message)
            << "\n";
    }
    for (const auto& f : d.quick_fixes) {
        out << "  fix " << f.id << ": " << f.description << "\n";
    }
    return out.str();
}

}  // namespace bpmn
