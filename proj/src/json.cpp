// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/json.h"

#include <stdexcept>

namespace gql {

Json toJson(const DataValue& value)
{
    switch (value.kind()) {
    case DataValue::Kind::Null:
        return nullptr;
    case DataValue::Kind::String:
        return value.asString();
    case DataValue::Kind::Int:
        return value.asInt();
    case DataValue::Kind::Float:
        return value.asFloat();
    case DataValue::Kind::Bool:
        return value.asBool();
    case DataValue::Kind::Enum:
        return value.asEnum().name;
    case DataValue::Kind::List: {
        Json array = Json::array();
        for (const auto& item : value.asList()) {
            array.push_back(toJson(item));
        }
        return array;
    }
    case DataValue::Kind::Map: {
        Json object = Json::object();
        for (const auto& [key, item] : value.asMap()) {
            object[key] = toJson(item);
        }
        return object;
    }
    case DataValue::Kind::Opaque:
        throw std::logic_error("opaque value cannot be serialized");
    }
    return nullptr;
}

DataValue fromJson(const Json& json)
{
    switch (json.type()) {
    case Json::value_t::null:
        return {};
    case Json::value_t::boolean:
        return json.get<bool>();
    case Json::value_t::number_integer:
        return json.get<std::int64_t>();
    case Json::value_t::number_unsigned: {
        auto u = json.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) {
            return static_cast<double>(u);
        }
        return static_cast<std::int64_t>(u);
    }
    case Json::value_t::number_float:
        return json.get<double>();
    case Json::value_t::string:
        return json.get<std::string>();
    case Json::value_t::array: {
        ValueList list;
        for (const auto& item : json) {
            list.push_back(fromJson(item));
        }
        return list;
    }
    case Json::value_t::object: {
        ValueMap map;
        for (const auto& [key, item] : json.items()) {
            map.emplace_back(key, fromJson(item));
        }
        return map;
    }
    default:
        throw std::invalid_argument("unsupported JSON value");
    }
}

Json responseToJson(const Response& response)
{
    Json out = Json::object();
    out["data"] = toJson(response.data);
    if (!response.errors.empty()) {
        Json errors = Json::array();
        for (const auto& e : response.errors) {
            Json error = Json::object();
            error["message"] = e.message;
            if (!e.path.empty()) {
                Json path = Json::array();
                for (const auto& segment : e.path) {
                    if (const auto* key = std::get_if<std::string>(&segment)) {
                        path.push_back(*key);
                    } else {
                        path.push_back(std::get<std::size_t>(segment));
                    }
                }
                error["path"] = std::move(path);
            }
            errors.push_back(std::move(error));
        }
        out["errors"] = std::move(errors);
    }
    return out;
}

std::string dumpCompact(const Json& json)
{
    return json.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string serializeResponse(const Response& response)
{
    return dumpCompact(responseToJson(response));
}

namespace {

Json literalToJson(const LiteralValue& literal)
{
    struct Visitor {
        Json operator()(const NullLiteral&) const { return Json{{"kind", "null"}}; }
        Json operator()(const std::string& s) const { return Json{{"kind", "string"}, {"value", s}}; }
        Json operator()(std::int64_t i) const { return Json{{"kind", "int"}, {"value", i}}; }
        Json operator()(bool b) const { return Json{{"kind", "boolean"}, {"value", b}}; }
        Json operator()(const EnumLiteral& e) const { return Json{{"kind", "enum"}, {"value", e.name}}; }
    };
    return std::visit(Visitor{}, literal);
}

Json selectionsToJson(const std::vector<FieldSelection>& selections)
{
    Json out = Json::array();
    for (const auto& field : selections) {
        Json node = Json::object();
        if (field.alias) {
            node["alias"] = *field.alias;
        }
        node["name"] = field.name;
        if (!field.arguments.empty()) {
            Json args = Json::object();
            for (const auto& [name, value] : field.arguments) {
                args[name] = literalToJson(value);
            }
            node["arguments"] = std::move(args);
        }
        if (!field.selections.empty()) {
            node["selections"] = selectionsToJson(field.selections);
        }
        out.push_back(std::move(node));
    }
    return out;
}

Json optionalText(const std::optional<std::string>& text)
{
    return text ? Json(*text) : Json(nullptr);
}

} // namespace

Json documentToJson(const Document& doc)
{
    Json operations = Json::array();
    for (const auto& op : doc.operations) {
        Json node = Json::object();
        node["operation"] = "query";
        node["name"] = optionalText(op.name);
        node["selections"] = selectionsToJson(op.selections);
        operations.push_back(std::move(node));
    }
    return Json{{"kind", "document"}, {"operations", std::move(operations)}};
}

Json schemaDocumentToJson(const std::vector<TypeDefinitionAst>& defs)
{
    Json types = Json::array();
    for (const auto& def : defs) {
        Json node = Json::object();
        if (const auto* object = std::get_if<ObjectDefAst>(&def)) {
            node["kind"] = "object";
            node["name"] = object->name;
            node["description"] = optionalText(object->description);
            Json fields = Json::array();
            for (const auto& field : object->fields) {
                Json f = Json::object();
                f["name"] = field.name;
                f["type"] = printTypeRef(field.returnType);
                Json args = Json::object();
                for (const auto& arg : field.arguments) {
                    args[arg.name] = printTypeRef(arg.type);
                }
                f["arguments"] = std::move(args);
                f["description"] = optionalText(field.description);
                fields.push_back(std::move(f));
            }
            node["fields"] = std::move(fields);
        } else {
            const auto& enumDef = std::get<EnumDefAst>(def);
            node["kind"] = "enum";
            node["name"] = enumDef.name;
            node["description"] = optionalText(enumDef.description);
            node["values"] = enumDef.values;
        }
        types.push_back(std::move(node));
    }
    return Json{{"kind", "schema"}, {"types", std::move(types)}};
}

Json diagnosticsToJson(const std::vector<Diagnostic>& diagnostics)
{
    Json out = Json::array();
    for (const auto& d : diagnostics) {
        out.push_back(Json{{"message", d.message}, {"path", d.path}, {"severity", "error"}});
    }
    return out;
}

} // namespace gql
