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

#include "bpmn/service.hpp"

#include "bpmn/report.hpp"
#include "bpmn/xml_io.hpp"

#include "httplib.h"

namespace bpmn {

namespace {

using Json = nlohmann::ordered_json;

ServiceResponse error_response(int status, std::string_view kind, const std::string& message)
{
    return {status, Json{{"error", kind}, {"message", message}}.dump()};
}

DiagnoseOptions diagnose_options(const ServiceOptions& options)
{
    DiagnoseOptions o;
    o.limits = options.limits;
    return o;
}

}  // namespace

ServiceResponse handle_analyze(const std::string& xml, const ServiceOptions& options)
{
    CollaborationModel model;
    try {
        model = parse_bpmn(xml, ParseOptions{options.lenient});
    } catch (const ModelError& e) {
        return error_response(422, to_string(e.kind()), e.what());
    }
    const auto d = diagnose(model, diagnose_options(options));
    return {200, diagnosis_json(d, model_display_name(model)).dump()};
}

ServiceResponse handle_fix_apply(const std::string& json_body, const ServiceOptions& options)
{
    std::string xml, fix_id;
    try {
        const auto body = Json::parse(json_body);
        xml = body.at("xml").get<std::string>();
        fix_id = body.at("fixId").get<std::string>();
    } catch (const Json::exception& e) {
        return error_response(400, "MalformedRequest", e.what());
    }

    CollaborationModel model;
    try {
        model = parse_bpmn(xml, ParseOptions{options.lenient});
    } catch (const ModelError& e) {
        return error_response(422, to_string(e.kind()), e.what());
    }
    // Fix ids are recomputed from the submitted model, so a fix proposed
    // for an older version of the XML is reported as stale.
    const auto before = diagnose(model, diagnose_options(options));
    const auto it = std::find_if(before.quick_fixes.begin(), before.quick_fixes.end(),
                                 [&](const QuickFix& f) { return f.id == fix_id; });
    if (it == before.quick_fixes.end()) {
        return error_response(409, "StaleFix", "fix '" + fix_id + "' does not apply to this model");
    }
    CollaborationModel edited;
    try {
        edited = apply_fix(model, *it);
    } catch (const StaleFixError& e) {
        return error_response(409, "StaleFix", e.what());
    }
    const auto after = diagnose(edited, diagnose_options(options));
    Json out;
    out["xml"] = serialize_bpmn(edited);
    out["diagnosis"] = diagnosis_json(after, model_display_name(edited));
    return {200, out.dump()};
}

ServiceResponse handle_health()
{
    return {200, Json{{"status", "ok"}, {"version", kVersion}}.dump()};
}

void mount_service(httplib::Server& server, const ServiceOptions& options)
{
    auto send = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/api/analyze", [options, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_analyze(req.body, options));
    });
    server.Post("/api/fix/apply", [options, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_fix_apply(req.body, options));
    });
    server.Get("/api/health",
               [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(Json{{"error", "Internal"}, {"message", message}}.dump(), "application/json");
    });
}

}  // namespace bpmn
