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

#include "bpmn/diagnosis.hpp"
#include "bpmn/report.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <map>

using namespace bpmn;
using testing::load_fixture;
using Json = nlohmann::ordered_json;

namespace {

Json report(const std::string& fixture)
{
    const auto m = load_fixture(fixture);
    return diagnosis_json(diagnose(m), model_display_name(m));
}

std::vector<std::string> keys(const Json& object)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : object.items()) out.push_back(k);
    return out;
}

// Replays consume/produce lists on a plain token map and checks that the
// result is the marking recorded by the explorer.
void check_moves(const Net& net, const Marking& start, const Trace& trace, const Json& steps)
{
    REQUIRE(steps.size() == trace.size());
    std::map<std::string, int> tokens;
    auto load = [&](const Marking& m) {
        std::map<std::string, int> out;
        for (auto e : m.entries()) out[net.place_id(entry_place(e))] = entry_count(e);
        return out;
    };
    tokens = load(start);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        CHECK(steps[i]["fire"] == net.node_id(net.transition(trace[i].transition).node));
        for (const auto& id : steps[i]["consume"]) {
            CHECK(tokens[id.get<std::string>()] > 0);
            if (--tokens[id.get<std::string>()] == 0) tokens.erase(id.get<std::string>());
        }
        for (const auto& id : steps[i]["produce"]) ++tokens[id.get<std::string>()];
        CHECK(tokens == load(trace[i].marking));
    }
}

}  // namespace

TEST_CASE("document layout for the deadlock fixture")
{
    auto doc = report("deadlock.bpmn");
    CHECK(keys(doc) == std::vector<std::string>{"model", "stats", "properties", "quickFixes", "warnings"});
    CHECK(keys(doc["stats"]) == std::vector<std::string>{"states", "transitions", "runtime_us"});
    CHECK(doc["stats"]["runtime_us"].is_number_integer());
    doc["stats"].erase("runtime_us");

    const auto expected = Json::parse(R"({
      "model": "Process_deadlock",
      "stats": {"states": 5, "transitions": 4},
      "properties": [
        {"name": "Safeness", "fulfilled": "true", "violations": []},
        {"name": "OptionToComplete", "fulfilled": "false", "violations": [
          {"kind": "Deadlock", "elements": ["And_join"], "trace": {"steps": [
            {"fire": "Xor_split", "consume": ["f0"], "produce": ["fa"]},
            {"fire": "Task_A", "consume": ["fa"], "produce": ["fa2"]}]}}]},
        {"name": "NoDeadActivities", "fulfilled": "true", "violations": []}
      ],
      "quickFixes": [{"id": "ConvertParallelJoinToExclusive:And_join",
                      "kind": "ConvertParallelJoinToExclusive", "targets": ["And_join"]}],
      "warnings": []
    })");
    REQUIRE(doc["quickFixes"].size() == 1);
    CHECK(doc["quickFixes"][0]["description"].get<std::string>().find("And_join") != std::string::npos);
    doc["quickFixes"][0].erase("description");
    CHECK(doc == expected);
}

TEST_CASE("livelock carries a cycle that starts where the trace ends")
{
    const auto doc = report("livelock.bpmn");
    const auto& v = doc["properties"][1]["violations"][0];
    CHECK(v["kind"] == "Livelock");
    REQUIRE(v.contains("cycle"));
    const auto& cycle = v["cycle"]["steps"];
    REQUIRE(cycle.size() == 3);
    // The last produced flow of the trace is consumed first by the cycle and
    // produced again at its end.
    const auto& last = v["trace"]["steps"].back();
    CHECK(cycle.front()["consume"] == last["produce"]);
    CHECK(cycle.back()["produce"] == last["produce"]);
}

TEST_CASE("consume and produce lists explain every marking change")
{
    for (const auto& name : testing::analyzable_fixtures()) {
        CAPTURE(name);
        const auto m = load_fixture(name);
        const auto d = diagnose(m);
        const auto doc = diagnosis_json(d, model_display_name(m));
        for (std::size_t r = 0; r < d.results.size(); ++r) {
            for (std::size_t i = 0; i < d.results[r].violations.size(); ++i) {
                const auto& v = d.results[r].violations[i];
                const auto& jv = doc["properties"][r]["violations"][i];
                CHECK(jv["kind"] == to_string(v.kind));
                if (!v.trace) {
                    CHECK_FALSE(jv.contains("trace"));
                    continue;
                }
                check_moves(*d.net, d.net->initial(), *v.trace, jv["trace"]["steps"]);
                if (v.cycle) {
                    const auto& end = v.trace->empty() ? d.net->initial() : v.trace->back().marking;
                    check_moves(*d.net, end, *v.cycle, jv["cycle"]["steps"]);
                }
            }
        }
    }
}

TEST_CASE("tokens removed by a terminate end event are listed as consumed")
{
    const auto model = load_fixture("terminate.bpmn");
    const auto net = std::make_shared<const Net>(model);
    auto [space, stats] = explore(net);
    std::size_t checked = 0;
    for (StateIndex s = 0; s < space.size(); ++s) {
        const auto before = space.marking(s);
        for (const auto* t : enabled_transitions(*net, before)) {
            if (!t->clears_process || before.entries().size() < 2) continue;
            auto trace = shortest_trace(space, s);
            trace.push_back({t->index, fire(*net, before, *t)});
            Diagnosis d;
            d.results = {{Property::Safeness, Verdict::Violated,
                          {{ViolationKind::LackOfSynchronization, {"x"}, trace, std::nullopt, s, ""}}},
                         {Property::OptionToComplete},
                         {Property::NoDeadActivities}};
            d.net = net;
            const auto doc = diagnosis_json(d, "t");
            const auto& steps = doc["properties"][0]["violations"][0]["trace"]["steps"];
            check_moves(*net, net->initial(), trace, steps);
            CHECK(steps.back()["consume"].size() > 1);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("bounded runs report the bound")
{
    DiagnoseOptions options;
    options.limits.max_states = 3;
    const auto m = load_fixture("sound.bpmn");
    const auto doc = diagnosis_json(diagnose(m, options), "x");
    CHECK(doc["stats"]["boundHit"] == "MaxStates");
    for (const auto& p : doc["properties"]) CHECK(p["fulfilled"] == "unknown");
}

TEST_CASE("warnings and notes")
{
    const auto doc = report("reused_end.bpmn");
    REQUIRE(doc["warnings"].size() == 1);
    CHECK(keys(doc["warnings"][0]) == std::vector<std::string>{"kind", "elements"});
    CHECK(doc["warnings"][0]["kind"] == "ReusedEndEvent");
    CHECK(doc["warnings"][0]["elements"] == Json::array({"End"}));
}

TEST_CASE("text report")
{
    const auto sound = load_fixture("sound.bpmn");
    const auto text = diagnosis_text(diagnose(sound), model_display_name(sound));
    CHECK(text.rfind("all properties fulfilled", 0) == 0);

    const auto bad = load_fixture("deadlock.bpmn");
    const auto out = diagnosis_text(diagnose(bad), model_display_name(bad));
    CHECK(out.find("all properties fulfilled") == std::string::npos);
    CHECK(out.find("Deadlock at And_join") != std::string::npos);
    CHECK(out.find("trace: Xor_split Task_A") != std::string::npos);
    CHECK(out.find("ConvertParallelJoinToExclusive:And_join") != std::string::npos);
}

TEST_CASE("display names")
{
    CHECK(model_display_name(load_fixture("starvation.bpmn")) == "Collab_orders");
    CHECK(model_display_name(load_fixture("deadlock.bpmn")) == "Process_deadlock");
    CHECK(model_display_name(CollaborationModel{}).empty());
}
