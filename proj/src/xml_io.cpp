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

#include "bpmn/xml_io.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bpmn {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kModelNs = "http://www.omg.org/spec/BPMN/20100524/MODEL";

const std::array<std::pair<std::string_view, std::string_view>, 5> kDefaultNamespaces{{
    {"xmlns:bpmn", kModelNs},
    {"xmlns:bpmndi", "http://www.omg.org/spec/BPMN/20100524/DI"},
    {"xmlns:dc", "http://www.omg.org/spec/DD/20100524/DC"},
    {"xmlns:di", "http://www.omg.org/spec/DD/20100524/DI"},
    {"targetNamespace", "http://bpmn.io/schema/bpmn"},
}};

// Activity flavours that behave exactly like a plain task for control flow.
const std::unordered_set<std::string_view> kTaskFlavours{"task", "userTask", "serviceTask",
                                                         "manualTask"};

// Process children that carry no control flow.
const std::unordered_set<std::string_view> kIgnoredProcessChildren{
    "laneSet",           "textAnnotation",    "association",   "dataObject",
    "dataObjectReference", "dataStoreReference", "documentation", "extensionElements",
    "ioSpecification",   "property",          "group",         "category"};

std::string_view local_name(std::string_view qualified)
{
    auto colon = qualified.find(':');
    return colon == std::string_view::npos ? qualified : qualified.substr(colon + 1);
}

std::string_view prefix_of(std::string_view qualified)
{
    auto colon = qualified.find(':');
    return colon == std::string_view::npos ? std::string_view{} : qualified.substr(0, colon);
}

bool is_markup(std::string_view key)
{
    return key == "<xmlattr>" || key == "<xmlcomment>" || key == "<xmltext>";
}

struct Element {
    std::string_view name;
    const pt::ptree* tree;

    std::string attr(const char* key) const
    {
        return tree->get<std::string>(std::string("<xmlattr>.") + key, "");
    }

    Attributes extra_attributes(std::initializer_list<std::string_view> skip) const
    {
        Attributes out;
        if (auto attrs = tree->get_child_optional("<xmlattr>")) {
            for (const auto& [key, value] : *attrs) {
                if (std::find(skip.begin(), skip.end(), key) == skip.end()) {
                    out.emplace_back(key, value.data());
                }
            }
        }
        return out;
    }
};

class Reader {
public:
    Reader(std::string_view bpmn_prefix, const ParseOptions& options)
        : prefix_(bpmn_prefix), options_(options)
    {
    }

    bool in_model_ns(std::string_view qualified) const { return prefix_of(qualified) == prefix_; }

    std::vector<Element> children(const pt::ptree& tree) const
    {
        std::vector<Element> out;
        for (const auto& [key, child] : tree) {
            if (!is_markup(key) && in_model_ns(key)) {
                out.push_back({local_name(key), &child});
            }
        }
        return out;
    }

    // Name of the first *EventDefinition child, or empty.
    std::string event_definition(const Element& e) const
    {
        for (const auto& c : children(*e.tree)) {
            if (c.name.ends_with("EventDefinition")) {
                return std::string(c.name);
            }
        }
        return {};
    }

    std::optional<NodeKind> classify(const Element& e) const
    {
        const auto def = event_definition(e);
        if (kTaskFlavours.contains(e.name)) return NodeKind::Task;
        if (e.name == "sendTask") return NodeKind::SendTask;
        if (e.name == "receiveTask") return NodeKind::ReceiveTask;
        if (e.name == "exclusiveGateway") return NodeKind::ExclusiveGateway;
        if (e.name == "parallelGateway") return NodeKind::ParallelGateway;
        if (e.name == "eventBasedGateway") return NodeKind::EventBasedGateway;
        if (e.name == "startEvent") {
            if (def.empty()) return NodeKind::NoneStartEvent;
            if (def == "messageEventDefinition") return NodeKind::MessageStartEvent;
        }
        if (e.name == "endEvent") {
            if (def.empty()) return NodeKind::NoneEndEvent;
            if (def == "messageEventDefinition") return NodeKind::MessageEndEvent;
            if (def == "terminateEventDefinition") return NodeKind::TerminateEndEvent;
        }
        if (e.name == "intermediateCatchEvent" && def == "messageEventDefinition") {
            return NodeKind::IntermediateMessageCatch;
        }
        if (e.name == "intermediateThrowEvent" && def == "messageEventDefinition") {
            return NodeKind::IntermediateMessageThrow;
        }
        return std::nullopt;
    }

    void read_process(const Element& e, CollaborationModel& model) const
    {
        Process process;
        process.id = e.attr("id");
        process.name = e.attr("name");
        process.attributes = e.extra_attributes({"id", "name"});

        for (const auto& c : children(*e.tree)) {
            if (c.name == "sequenceFlow") {
                model.sequence_flows.push_back({c.attr("id"), c.attr("sourceRef"),
                                                c.attr("targetRef"), c.attr("name"),
                                                c.extra_attributes({"id", "name", "sourceRef",
                                                                    "targetRef"})});
                continue;
            }
            if (kIgnoredProcessChildren.contains(c.name)) {
                continue;
            }

            FlowNode node;
            node.id = c.attr("id");
            node.name = c.attr("name");
            node.process = process.id;
            node.attributes = c.extra_attributes({"id", "name"});

            if (auto kind = classify(c)) {
                node.kind = *kind;
                if (c.name != canonical_tag(*kind)) {
                    node.tag = std::string(c.name);
                }
            }
            else {
                auto def = event_definition(c);
                std::string what = "'" + std::string(c.name) + "'";
                if (!def.empty()) {
                    what += " with " + def;
                }
                if (!options_.lenient) {
                    throw ModelError(ModelErrorKind::UnsupportedElement,
                                     "unsupported element " + what + " (id '" + node.id + "')");
                }
                node.kind = NodeKind::Task;
                node.lossy = true;
                // Attributes such as attachedToRef or triggeredByEvent lose meaning on a task.
                node.attributes.clear();
                model.parse_warnings.push_back({WarningKind::UnsupportedElementMapped,
                                                {node.id},
                                                "unsupported element " + what + " mapped to task"});
            }
            process.nodes.push_back(std::move(node));
        }
        model.processes.push_back(std::move(process));
    }

    void read_collaboration(const Element& e, CollaborationModel& model) const
    {
        if (model.collaboration) {
            return;
        }
        model.collaboration = e.attr("id");
        for (const auto& c : children(*e.tree)) {
            if (c.name == "participant") {
                model.participants.push_back({c.attr("id"), c.attr("name"), c.attr("processRef")});
            }
            else if (c.name == "messageFlow") {
                model.message_flows.push_back({c.attr("id"), c.attr("sourceRef"),
                                               c.attr("targetRef"), c.attr("name"),
                                               c.extra_attributes({"id", "name", "sourceRef",
                                                                   "targetRef"})});
            }
        }
    }

private:
    std::string_view prefix_;
    const ParseOptions& options_;
};

// Locates the diagram-interchange section by scanning for a BPMNDiagram
// element with any prefix. Returns [begin, end) of the raw text.
std::string extract_diagram(std::string_view xml)
{
    std::size_t begin = std::string_view::npos;
    std::string closing;
    for (std::size_t pos = xml.find('<'); pos != std::string_view::npos;
         pos = xml.find('<', pos + 1)) {
        std::size_t name_end = xml.find_first_of(" \t\r\n/>", pos + 1);
        if (name_end == std::string_view::npos) {
            break;
        }
        auto name = xml.substr(pos + 1, name_end - pos - 1);
        if (local_name(name) == "BPMNDiagram") {
            begin = pos;
            closing = "</" + std::string(name) + ">";
            break;
        }
    }
    if (begin == std::string_view::npos) {
        return {};
    }
    auto last = xml.rfind(closing);
    if (last == std::string_view::npos || last < begin) {
        return {};
    }
    return std::string(xml.substr(begin, last + closing.size() - begin));
}

void escape_into(std::string& out, std::string_view text)
{
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
}

void attribute(std::string& out, std::string_view key, std::string_view value)
{
    out += ' ';
    out += key;
    out += "=\"";
    escape_into(out, value);
    out += '"';
}

void attributes(std::string& out, const Attributes& attrs)
{
    for (const auto& [k, v] : attrs) {
        attribute(out, k, v);
    }
}

std::string_view event_definition_tag(NodeKind kind)
{
    switch (kind) {
    case NodeKind::MessageStartEvent:
    case NodeKind::MessageEndEvent:
    case NodeKind::IntermediateMessageCatch:
    case NodeKind::IntermediateMessageThrow:
        return "messageEventDefinition";
    case NodeKind::TerminateEndEvent:
        return "terminateEventDefinition";
    default:
        return {};
    }
}

template <typename Flow>
void emit_flow(std::string& out, std::string_view indent, std::string_view tag, const Flow& f)
{
    out += indent;
    out += "<bpmn:";
    out += tag;
    attribute(out, "id", f.id);
    if (!f.name.empty()) {
        attribute(out, "name", f.name);
    }
    attribute(out, "sourceRef", f.source);
    attribute(out, "targetRef", f.target);
    attributes(out, f.attributes);
    out += " />\n";
}

}  // namespace

std::string_view canonical_tag(NodeKind kind)
{
    switch (kind) {
    case NodeKind::NoneStartEvent:
    case NodeKind::MessageStartEvent: return "startEvent";
    case NodeKind::Task: return "task";
    case NodeKind::SendTask: return "sendTask";
    case NodeKind::ReceiveTask: return "receiveTask";
    case NodeKind::ExclusiveGateway: return "exclusiveGateway";
    case NodeKind::ParallelGateway: return "parallelGateway";
    case NodeKind::EventBasedGateway: return "eventBasedGateway";
    case NodeKind::IntermediateMessageCatch: return "intermediateCatchEvent";
    case NodeKind::IntermediateMessageThrow: return "intermediateThrowEvent";
    case NodeKind::NoneEndEvent:
    case NodeKind::MessageEndEvent:
    case NodeKind::TerminateEndEvent: return "endEvent";
    }
    return "task";
}

CollaborationModel parse_bpmn(std::string_view xml, const ParseOptions& options)
{
    pt::ptree doc;
    try {
        std::istringstream in{std::string(xml)};
        pt::read_xml(in, doc, pt::xml_parser::no_comments);
    }
    catch (const pt::xml_parser_error& e) {
        throw ModelError(ModelErrorKind::MalformedXml, e.message() + " (line " +
                                                           std::to_string(e.line()) + ")");
    }

    const pt::ptree* root = nullptr;
    std::string_view root_name;
    for (const auto& [key, child] : doc) {
        if (local_name(key) == "definitions") {
            root = &child;
            root_name = key;
            break;
        }
    }
    if (!root) {
        throw ModelError(ModelErrorKind::MalformedXml, "document has no definitions element");
    }

    CollaborationModel model;
    model.source_document = std::string(xml);
    model.definitions_attributes = Element{root_name, root}.extra_attributes({});
    model.diagram = extract_diagram(xml);

    Reader reader(prefix_of(root_name), options);
    for (const auto& e : reader.children(*root)) {
        if (e.name == "process") {
            reader.read_process(e, model);
        }
        else if (e.name == "collaboration") {
            reader.read_collaboration(e, model);
        }
    }

    if (options.lenient) {
        std::erase_if(model.message_flows, [&](const MessageFlow& f) {
            const auto* source = model.find_node(f.source);
            const auto* target = model.find_node(f.target);
            if (source && target && is_message_sender(source->kind) &&
                is_message_receiver(target->kind)) {
                return false;
            }
            model.parse_warnings.push_back(
                {WarningKind::DroppedMessageFlow,
                 {f.id},
                 "message flow '" + f.id + "' does not connect a sender to a receiver"});
            return true;
        });
    }

    check_invariants(model, ModelErrorKind::InvalidStructure);
    return model;
}

std::string serialize_bpmn(const CollaborationModel& model, std::vector<StaticWarning>* warnings)
{
    try {
        check_invariants(model, ModelErrorKind::InternalInvariant);
    }
    catch (const ModelError& e) {
        throw ModelError(ModelErrorKind::InternalInvariant, e.what());
    }

    std::string out;
    out.reserve(256 + 96 * (model.node_count() + model.sequence_flows.size()) +
                model.diagram.size());
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<bpmn:definitions";

    Attributes root = model.definitions_attributes;
    auto has = [&root](std::string_view key) {
        return std::any_of(root.begin(), root.end(), [&](const auto& kv) { return kv.first == key; });
    };
    for (const auto& [key, value] : kDefaultNamespaces) {
        if (!has(key)) {
            root.emplace_back(key, value);
        }
    }
    if (!has("id")) {
        root.emplace_back("id", "Definitions_1");
    }
    attributes(out, root);
    out += ">\n";

    if (model.collaboration) {
        out += "  <bpmn:collaboration";
        attribute(out, "id", *model.collaboration);
        out += ">\n";
        for (const auto& p : model.participants) {
            out += "    <bpmn:participant";
            attribute(out, "id", p.id);
            if (!p.name.empty()) {
                attribute(out, "name", p.name);
            }
            if (!p.process.empty()) {
                attribute(out, "processRef", p.process);
            }
            out += " />\n";
        }
        for (const auto& f : model.message_flows) {
            emit_flow(out, "    ", "messageFlow", f);
        }
        out += "  </bpmn:collaboration>\n";
    }

    std::unordered_map<std::string_view, std::vector<const SequenceFlow*>> flows_by_process;
    {
        std::unordered_map<std::string_view, std::string_view> owner;
        for (const auto& p : model.processes) {
            for (const auto& n : p.nodes) {
                owner.emplace(n.id, p.id);
            }
        }
        for (const auto& f : model.sequence_flows) {
            flows_by_process[owner.at(f.source)].push_back(&f);
        }
    }

    for (const auto& p : model.processes) {
        out += "  <bpmn:process";
        attribute(out, "id", p.id);
        if (!p.name.empty()) {
            attribute(out, "name", p.name);
        }
        attributes(out, p.attributes);
        out += ">\n";
        for (const auto& n : p.nodes) {
            auto tag = n.tag.empty() ? canonical_tag(n.kind) : std::string_view{n.tag};
            out += "    <bpmn:";
            out += tag;
            attribute(out, "id", n.id);
            if (!n.name.empty()) {
                attribute(out, "name", n.name);
            }
            attributes(out, n.attributes);
            if (auto def = event_definition_tag(n.kind); !def.empty()) {
                out += "><bpmn:";
                out += def;
                out += " /></bpmn:";
                out += tag;
                out += ">\n";
            }
            else {
                out += " />\n";
            }
            if (n.lossy && warnings) {
                warnings->push_back({WarningKind::LossyRoundTrip,
                                     {n.id},
                                     "element '" + n.id + "' re-emitted as a task"});
            }
        }
        for (const auto* f : flows_by_process[p.id]) {
            emit_flow(out, "    ", "sequenceFlow", *f);
        }
        out += "  </bpmn:process>\n";
    }

    if (!model.diagram.empty()) {
        out += "  ";
        out += model.diagram;
        out += "\n";
    }
    out += "</bpmn:definitions>\n";
    return out;
}

}  // namespace bpmn
