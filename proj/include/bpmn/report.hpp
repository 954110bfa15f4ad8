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

#include "json.hpp"

#include <string>

namespace bpmn {

inline constexpr const char* kVersion = "0.1.0";

/// The diagnostics document shared by the CLI and the service. Keys keep
/// insertion order so the output is stable for golden comparisons.
///
///   {model, stats: {states, transitions, runtime_us, boundHit?},
///    properties: [{name, fulfilled, violations: [{kind, elements, trace?, cycle?, note?}]}],
///    quickFixes: [{id, kind, targets, description}],
///    warnings: [{kind, elements}]}
///
/// Trace and cycle are {steps: [{fire, consume, produce}]}; consume lists
/// every token removed by the firing, one entry per token.
nlohmann::ordered_json diagnosis_json(const Diagnosis& diagnosis, const std::string& model_name);

/// Human-readable summary. A fully sound model yields a first line of
/// "all properties fulfilled".
std::string diagnosis_text(const Diagnosis& diagnosis, const std::string& model_name);

/// Name shown in reports: the collaboration id, else the first process id.
std::string model_display_name(const CollaborationModel& model);

}  // namespace bpmn
