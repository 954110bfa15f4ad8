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

#include <vector>

namespace bpmn {

/// Static modelling smells that need no exploration: receivers without a
/// message flow, end events with several incoming flows, nodes without any
/// sequence flow, pass-through gateways and missing start events.
/// Warnings are ordered by kind, then by node order in the model.
std::vector<StaticWarning> validate_structure(const CollaborationModel& model);

}  // namespace bpmn
