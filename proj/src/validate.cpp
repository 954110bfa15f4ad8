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

#include <unordered_map>

namespace bpmn {

std::vector<StaticWarning> validate_structure(const CollaborationModel& model)
{
    std::unordered_map<std::string_view, int> seq_in, seq_out, msg_in;
    for (const auto& f : model.sequence_flows) {
        ++seq_out[f.source];
        ++seq_in[f.target];
    }
    for (const auto& f : model.message_flows) {
        ++msg_in[f.target];
    }

    std::vector<StaticWarning> receive, reused, disconnected, pass_through;
    bool has_start = false;

    for (const auto& p : model.processes) {
        for (const auto& n : p.nodes) {
            const int in = seq_in[n.id];
            const int out = seq_out[n.id];
            has_start = has_start || is_start_event(n.kind);

            if (is_message_receiver(n.kind) && msg_in[n.id] == 0) {
                receive.push_back({WarningKind::ReceiveWithoutMessageFlow,
                                   {n.id},
                                   "'" + n.id + "' waits for a message but no message flow targets it"});
            }
            if (is_end_event(n.kind) && in >= 2) {
                reused.push_back({WarningKind::ReusedEndEvent,
                                  {n.id},
                                  "end event '" + n.id + "' has " + std::to_string(in) +
                                      " incoming sequence flows"});
            }
            if (in == 0 && out == 0) {
                disconnected.push_back({WarningKind::DisconnectedNode,
                                        {n.id},
                                        "'" + n.id + "' has no sequence flows"});
            }
            if (is_gateway(n.kind) && in == 1 && out == 1) {
                pass_through.push_back({WarningKind::GatewayWithSingleInAndOut,
                                        {n.id},
                                        "gateway '" + n.id + "' neither splits nor joins"});
            }
        }
    }

    std::vector<StaticWarning> warnings;
    for (auto* group : {&receive, &reused, &disconnected, &pass_through}) {
        warnings.insert(warnings.end(), group->begin(), group->end());
    }
    if (!has_start) {
        warnings.push_back({WarningKind::NoStartEvent, {}, "the model has no start event"});
    }
    return warnings;
}

}  // namespace bpmn
