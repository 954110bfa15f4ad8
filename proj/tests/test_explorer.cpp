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
#include "bpmn/generators.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "random_models.hpp"

using namespace bpmn;
using testing::load_fixture;

namespace {

std::shared_ptr<const Net> net_of(const CollaborationModel& m) { return std::make_shared<const Net>(m); }

// Replays a trace with the public firing function; returns the end marking.
Marking replay(const Net& net, const Trace& trace)
{
    Marking m = net.initial();
    for (const auto& step : trace) {
        m = fire(net, m, net.transition(step.transition));
        REQUIRE(m == step.marking);
    }
    return m;
}

}  // namespace

TEST_CASE("sequential model: one state per flow plus the empty marking")
{
    auto [space, stats] = explore(net_of(load_fixture("default_namespace.bpmn")));
    CHECK(stats.state_count == 3);
    CHECK(stats.transition_count == 2);
    CHECK_FALSE(stats.bound_hit);
    CHECK(space.size() == 3);
    CHECK(space.marking(0) == space.net().initial());
    CHECK(space.terminals() == std::vector<StateIndex>{2});
    CHECK(space.marking(2).empty());
}

TEST_CASE("deadlock fixture has 5 states")
{
    auto [space, stats] = explore(net_of(load_fixture("deadlock.bpmn")));
    CHECK(stats.state_count == 5);
    CHECK(space.terminals().empty());
    const auto stuck = space.find(space.net().make_marking({{"fa2", 1}}).entries());
    REQUIRE(stuck);
    CHECK(space.depth(*stuck) == 2);
    CHECK(space.edges(*stuck).empty());
    CHECK(shortest_trace(space, *stuck).size() == 2);
}

TEST_CASE("parallel-branch counts follow the closed form")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t l = 1; l <= 4; ++l) {
            auto [space, stats] = explore(net_of(gen_parallel_branches({n, l})));
            CAPTURE(n);
            CAPTURE(l);
            CHECK(stats.state_count == parallel_branches_state_count({n, l}));
            CHECK(space.terminals().size() == 1);
        }
    }
}

TEST_CASE("breadth-first layering")
{
    for (const auto& name : testing::analyzable_fixtures()) {
        auto [space, stats] = explore(net_of(load_fixture(name)));
        CAPTURE(name);
        CHECK(space.expanded_count() == space.size());
        for (StateIndex s = 1; s < space.size(); ++s) {
            CHECK(space.depth(s - 1) <= space.depth(s));
            const auto pred = space.first_predecessor(s);
            REQUIRE(pred);
            CHECK(space.depth(pred->state) + 1 == space.depth(s));
        }
        for (StateIndex s = 0; s < space.size(); ++s) {
            for (const auto& e : space.edges(s)) {
                // An edge never skips a layer forward.
                CHECK(space.depth(e.target) <= space.depth(s) + 1);
            }
        }
        CHECK_FALSE(space.first_predecessor(0));
    }
}

TEST_CASE("exploration is deterministic")
{
    const auto m = load_fixture("reused_end.bpmn");
    auto [a, sa] = explore(net_of(m));
    auto [b, sb] = explore(net_of(m));
    REQUIRE(a.size() == b.size());
    for (StateIndex s = 0; s < a.size(); ++s) {
        CHECK(a.marking(s) == b.marking(s));
        const auto ea = a.edges(s), eb = b.edges(s);
        REQUIRE(ea.size() == eb.size());
        for (std::size_t i = 0; i < ea.size(); ++i) {
            CHECK(ea[i].transition == eb[i].transition);
            CHECK(ea[i].target == eb[i].target);
        }
    }
}

TEST_CASE("traces replay to their end state and have depth-many steps")
{
    for (const auto& name : testing::analyzable_fixtures()) {
        auto [space, stats] = explore(net_of(load_fixture(name)));
        CAPTURE(name);
        for (StateIndex s = 0; s < space.size(); ++s) {
            const auto trace = shortest_trace(space, s);
            CHECK(trace.size() == space.depth(s));
            CHECK(replay(space.net(), trace) == space.marking(s));
        }
    }
    auto [space, stats] = explore(net_of(load_fixture("sound.bpmn")));
    CHECK_THROWS_AS(shortest_trace(space, static_cast<StateIndex>(space.size())), std::out_of_range);
}

TEST_CASE("unsafe states are recorded with their flows")
{
    auto [space, stats] = explore(net_of(load_fixture("lack_of_sync.bpmn")));
    REQUIRE_FALSE(space.unsafe_states().empty());
    const auto& first = space.unsafe_states().front();
    REQUIRE(first.flows.size() == 1);
    CHECK(space.net().place_id(first.flows[0]) == "fx");
    CHECK(space.depth(first.state) == 5);
    for (const auto& u : space.unsafe_states()) {
        for (auto p : u.flows) CHECK(space.marking(u.state).count(p) >= 2);
    }
}

TEST_CASE("fired nodes")
{
    auto [space, stats] = explore(net_of(load_fixture("dead_task.bpmn")));
    const auto& net = space.net();
    CHECK(space.fired(*net.node("Book_trip")));
    CHECK(space.fired(*net.node("Catch_accept")));
    CHECK_FALSE(space.fired(*net.node("Catch_decline")));
    CHECK_FALSE(space.fired(*net.node("Close_case")));
    CHECK_FALSE(space.fired(*net.node("Start_agency")));
}

TEST_CASE("state bound stops exactly at the limit")
{
    ExplorationLimits limits;
    limits.max_states = 100;
    auto [space, stats] = explore(net_of(gen_parallel_branches({10, 1})), limits);
    CHECK(stats.state_count == 100);
    CHECK(space.size() == 100);
    CHECK(stats.bound_hit == BoundKind::MaxStates);
    CHECK(space.expanded_count() < 100);
    for (StateIndex s = 0; s < space.expanded_count(); ++s) {
        for (const auto& e : space.edges(s)) CHECK(e.target < 100);
    }

    limits.max_states = 1027;
    auto [full, full_stats] = explore(net_of(gen_parallel_branches({10, 1})), limits);
    CHECK(full_stats.state_count == 1027);
    CHECK_FALSE(full_stats.bound_hit);
}

TEST_CASE("token bound cuts unbounded growth")
{
    CollaborationModel m;
    m.processes.push_back({"P", "", {{"s", "", NodeKind::NoneStartEvent, "P"},
                                     {"t", "", NodeKind::Task, "P"},
                                     {"e", "", NodeKind::NoneEndEvent, "P"}}});
    // t puts a token back on its own input and one towards the end.
    m.sequence_flows = {{"f0", "s", "t"}, {"f1", "t", "t"}, {"f2", "t", "e"}};
    ExplorationLimits limits;
    limits.max_tokens_per_place = 3;
    auto [space, stats] = explore(net_of(m), limits);
    CHECK(stats.bound_hit == BoundKind::TokenBound);
    for (StateIndex s = 0; s < space.size(); ++s) {
        for (auto e : space.entries(s)) CHECK(entry_count(e) <= 3);
    }
}

TEST_CASE("limit validation")
{
    ExplorationLimits limits;
    CHECK_NOTHROW(limits.validate());
    limits.max_states = 0;
    CHECK_THROWS_AS(limits.validate(), std::invalid_argument);
    limits = {};
    limits.max_tokens_per_place = 0;
    CHECK_THROWS_AS(limits.validate(), std::invalid_argument);
    limits.max_tokens_per_place = 256;
    CHECK_THROWS_AS(limits.validate(), std::invalid_argument);
    CHECK_THROWS_AS(explore(net_of(load_fixture("sound.bpmn")), limits), std::invalid_argument);
}

TEST_CASE("random models keep the layering and replay properties")
{
    ExplorationLimits limits;
    limits.max_states = 5000;
    limits.max_tokens_per_place = 4;
    for (unsigned seed = 0; seed < 100; ++seed) {
        auto [space, stats] = explore(net_of(testing::random_model(seed, seed % 2 == 1)), limits);
        CAPTURE(seed);
        for (StateIndex s = 1; s < space.size(); ++s) CHECK(space.depth(s - 1) <= space.depth(s));
        const auto last = static_cast<StateIndex>(space.size() - 1);
        CHECK(replay(space.net(), shortest_trace(space, last)) == space.marking(last));
        for (auto t : space.terminals()) CHECK(is_terminal(space.net(), space.entries(t)));
    }
}
