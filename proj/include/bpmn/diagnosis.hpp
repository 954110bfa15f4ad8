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

#include "bpmn/explorer.hpp"
#include "bpmn/model.hpp"
#include "bpmn/properties.hpp"
#include "bpmn/quickfix.hpp"

#include <memory>
#include <vector>

namespace bpmn {

struct Diagnosis {
    /// Safeness, OptionToComplete, NoDeadActivities, in that order.
    std::vector<PropertyResult> results;
    ExplorationStats stats;
    std::vector<QuickFix> quick_fixes;
    std::vector<StaticWarning> warnings;
    /// Resolves the transition and place indices used by traces.
    std::shared_ptr<const Net> net;

    const PropertyResult& result(Property property) const;
    bool all_fulfilled() const;
    bool any_violated() const;
    bool any_unknown() const;
};

struct DiagnoseOptions {
    ExplorationLimits limits;
    bool suggest_fixes = true;
};

/// Structural validation, exploration, the three property checks and
/// (optionally) quick-fix suggestion.
Diagnosis diagnose(const CollaborationModel& model, const DiagnoseOptions& options = {});

}  // namespace bpmn
