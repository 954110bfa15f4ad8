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

#include "bpmn/validate.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace bpmn;
using testing::load_fixture;

namespace {

std::vector<WarningKind> kinds(const std::vector<StaticWarning>& ws)
{
    std::vector<WarningKind> out;
    for (const auto& w : ws) out.push_back(w.kind);
    return out;
}

}  // namespace

TEST_CASE("clean fixtures have no structural warnings")
{
    for (const char* name : {"sound.bpmn", "deadlock.bpmn", "terminate.bpmn", "message_start.bpmn"}) {
        CAPTURE(name);
        CHECK(validate_structure(load_fixture(name)).empty());
    }
}

TEST_CASE("end event with two incoming flows")
{
    const auto ws = validate_structure(load_fixture("reused_end.bpmn"));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == WarningKind::ReusedEndEvent);
    CHECK(ws[0].elements == std::vector<ElementId>{"End"});
}

TEST_CASE("receivers without message flow")
{
    const auto ws = validate_structure(load_fixture("starvation.bpmn"));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].kind == WarningKind::ReceiveWithoutMessageFlow);
    CHECK(ws[0].elements == std::vector<ElementId>{"Receive_payment"});

    const auto catches = validate_structure(load_fixture("dead_task.bpmn"));
    CHECK(kinds(catches) == std::vector{WarningKind::ReceiveWithoutMessageFlow});
}

TEST_CASE("disconnected nodes, pass-through gateways, missing start")
{
    CollaborationModel m;
    m.processes.push_back({"P", "", {{"t", "", NodeKind::Task, "P"},
                                     {"g", "", NodeKind::ExclusiveGateway, "P"},
                                     {"u", "", NodeKind::Task, "P"},
                                     {"v", "", NodeKind::Task, "P"},
                                     {"lonely", "", NodeKind::Task, "P"}}});
    m.sequence_flows = {{"f0", "t", "g"}, {"f1", "g", "u"}, {"f2", "u", "v"}};
    const auto ws = validate_structure(m);
    CHECK(kinds(ws) == std::vector{WarningKind::DisconnectedNode, WarningKind::GatewayWithSingleInAndOut,
                                   WarningKind::NoStartEvent});
    CHECK(ws[0].elements == std::vector<ElementId>{"lonely"});
    CHECK(ws[1].elements == std::vector<ElementId>{"g"});
    CHECK(ws[2].elements.empty());
}

TEST_CASE("validation is deterministic")
{
    const auto m = load_fixture("starvation_no_sender.bpmn");
    CHECK(validate_structure(m) == validate_structure(m));
}
