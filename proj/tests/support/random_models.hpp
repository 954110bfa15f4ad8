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

// Small structurally valid models for property tests. Not necessarily
// sound or bounded; callers cap the exploration.

#pragma once

#include "bpmn/model.hpp"

#include <random>
#include <string>

namespace testing {

inline bpmn::CollaborationModel random_model(unsigned seed, bool with_messages = false)
{
    using bpmn::NodeKind;
    std::mt19937 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    bpmn::CollaborationModel m;
    int flow_counter = 0;
    auto flow = [&](const std::string& s, const std::string& t) {
        m.sequence_flows.push_back({"sf" + std::to_string(flow_counter++), s, t});
    };

    auto build_process = [&](const std::string& pid, bool receiver_side) {
        bpmn::Process p{pid};
        const int inner = pick(2, 6);
        std::vector<std::string> internal;
        p.nodes.push_back({pid + "_start", "", NodeKind::NoneStartEvent, pid});
        for (int i = 0; i < inner; ++i) {
            static constexpr NodeKind kinds[] = {NodeKind::Task, NodeKind::Task,
                                                 NodeKind::ExclusiveGateway, NodeKind::ParallelGateway};
            NodeKind k = kinds[pick(0, 3)];
            if (with_messages && i == 0) k = receiver_side ? NodeKind::ReceiveTask : NodeKind::SendTask;
            const auto id = pid + "_n" + std::to_string(i);
            p.nodes.push_back({id, "", k, pid});
            internal.push_back(id);
        }
        const auto end_kind = pick(0, 4) == 0 ? NodeKind::TerminateEndEvent : NodeKind::NoneEndEvent;
        p.nodes.push_back({pid + "_end", "", end_kind, pid});

        flow(pid + "_start", internal[pick(0, inner - 1)]);
        for (int i = 0; i < inner; ++i) {
            const int outs = pick(1, 2);
            for (int o = 0; o < outs; ++o) {
                // Mostly forward edges so many models terminate; back edges make loops.
                const int r = pick(0, 9);
                if (r < 3 || i == inner - 1) {
                    flow(internal[i], pid + "_end");
                }
                else if (r < 8) {
                    flow(internal[i], internal[pick(i + 1, inner - 1)]);
                }
                else {
                    flow(internal[i], internal[pick(0, i)]);
                }
            }
        }
        m.processes.push_back(std::move(p));
    };

    build_process("PA", false);
    if (with_messages) {
        build_process("PB", true);
        m.collaboration = "C";
        m.participants = {{"Pool_A", "", "PA"}, {"Pool_B", "", "PB"}};
        m.message_flows.push_back({"mf0", "PA_n0", "PB_n0"});
    }
    return m;
}

}  // namespace testing
