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

#include <string>
#include <string_view>
#include <vector>

namespace bpmn {

struct ParseOptions {
    /// Downgrade unsupported flow nodes to Task (with a warning) instead of
    /// failing. Message flows to black-box pools are dropped.
    bool lenient = false;
};

/// Reads the supported BPMN 2.0 subset. Elements outside the BPMN model
/// namespace prefix (vendor extensions) are ignored, as are message
/// definitions, lanes, annotations and data elements. The diagram section is
/// kept verbatim in `CollaborationModel::diagram`.
///
/// Throws ModelError (MalformedXml, UnsupportedElement, DanglingReference,
/// InvalidStructure).
CollaborationModel parse_bpmn(std::string_view xml, const ParseOptions& options = {});

/// Emits BPMN 2.0 XML, one line per flow node or flow. Original tags and
/// attributes recorded in the IR are reproduced. When `warnings` is given,
/// a LossyRoundTrip warning is appended for every node that was downgraded
/// by a lenient parse.
std::string serialize_bpmn(const CollaborationModel& model,
                           std::vector<StaticWarning>* warnings = nullptr);

/// Canonical BPMN tag (without prefix) for a node kind, e.g. "exclusiveGateway".
std::string_view canonical_tag(NodeKind kind);

}  // namespace bpmn
