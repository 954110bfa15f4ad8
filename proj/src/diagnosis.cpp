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

#include "bpmn/diagnosis.hpp"

#include "bpmn/validate.hpp"

#include <algorithm>

namespace bpmn {

const PropertyResult& Diagnosis::result(Property property) const
{
    for (const auto& r : results) {
        if (r.property == property) {
            return r;
        }
    }
    throw std::out_of_range("no result for property " + std::string(to_string(property)));
}

bool Diagnosis::all_fulfilled() const
{
    return std::all_of(results.begin(), results.end(),
                       [](const auto& r) { return r.fulfilled == Verdict::Fulfilled; });
}

bool Diagnosis::any_violated() const
{
    return std::any_of(results.begin(), results.end(),
                       [](const auto& r) { return r.fulfilled == Verdict::Violated; });
}

bool Diagnosis::any_unknown() const
{
    return std::any_of(results.begin(), results.end(),
                       [](const auto& r) { return r.fulfilled == Verdict::Unknown; });
}

Diagnosis diagnose(const CollaborationModel& model, const DiagnoseOptions& options)
{
    Diagnosis d;
    d.warnings = model.parse_warnings;
    auto structural = validate_structure(model);
    d.warnings.insert(d.warnings.end(), structural.begin(), structural.end());

    d.net = std::make_shared<const Net>(model);
    auto [space, stats] = explore(d.net, options.limits);
    d.stats = stats;
    const bool exhaustive = !stats.bound_hit;

    d.results.push_back(check_safeness(space, exhaustive));
    d.results.push_back(check_option_to_complete(space, exhaustive));
    d.results.push_back(check_dead_activities(space, exhaustive));

    if (auto leftover = leftover_messages(space)) {
        d.warnings.push_back(std::move(*leftover));
    }
    if (options.suggest_fixes) {
        d.quick_fixes = suggest_fixes(model, d);
    }
    return d;
}

}  // namespace bpmn
