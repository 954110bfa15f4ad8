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
#include "bpmn/xml_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

inline std::string fixture_path(const std::string& name)
{
    return std::string(BPMN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline bpmn::CollaborationModel load_fixture(const std::string& name, bool lenient = false)
{
    return bpmn::parse_bpmn(read_fixture(name), bpmn::ParseOptions{lenient});
}

/// Fixtures whose analysis is expected to succeed in strict mode.
inline const std::vector<std::string>& analyzable_fixtures()
{
    static const std::vector<std::string> names = {
        "sound.bpmn",       "deadlock.bpmn",   "lack_of_sync.bpmn",
        "livelock.bpmn",    "starvation.bpmn", "starvation_no_sender.bpmn",
        "dead_task.bpmn",   "reused_end.bpmn", "terminate.bpmn",
        "message_start.bpmn", "bpmn_io_export.bpmn",
    };
    return names;
}

}  // namespace testing
