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

#include "bpmn/diagnosis.hpp"

#include <string>

namespace httplib {
class Server;
}

namespace bpmn {

struct ServiceOptions {
    ExplorationLimits limits;
    bool lenient = false;
};

struct ServiceResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Request handlers, independent of the transport. Each call parses and
/// diagnoses from scratch; nothing is shared between requests.
ServiceResponse handle_analyze(const std::string& xml, const ServiceOptions& options);
ServiceResponse handle_fix_apply(const std::string& json_body, const ServiceOptions& options);
ServiceResponse handle_health();

/// Registers the /api routes on `server`.
void mount_service(httplib::Server& server, const ServiceOptions& options);

}  // namespace bpmn
