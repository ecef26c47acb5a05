// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/value.h"

#include "gql/ast.h"

#include <charconv>

namespace gql {

bool DataValue::isScalar() const noexcept
{
    switch (kind()) {
    case Kind::String:
    case Kind::Int:
    case Kind::Float:
    case Kind::Bool:
    case Kind::Enum:
        return true;
    default:
        return false;
    }
}

const DataValue* DataValue::find(std::string_view key) const noexcept
{
    const auto* map = std::get_if<ValueMap>(&_data);
    if (!map) {
        return nullptr;
    }
    for (const auto& [k, v] : *map) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

DataValue& DataValue::set(std::string key, DataValue value)
{
    if (isNull()) {
        _data = ValueMap{};
    }
    auto& map = asMap();
    for (auto& [k, v] : map) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    map.emplace_back(std::move(key), std::move(value));
    return *this;
}

std::string_view kindName(DataValue::Kind kind) noexcept
{
    switch (kind) {
    case DataValue::Kind::Null:
        return "null";
    case DataValue::Kind::String:
        return "string";
    case DataValue::Kind::Int:
        return "integer";
    case DataValue::Kind::Float:
        return "float";
    case DataValue::Kind::Bool:
        return "boolean";
    case DataValue::Kind::Enum:
        return "enum";
    case DataValue::Kind::List:
        return "list";
    case DataValue::Kind::Map:
        return "map";
    case DataValue::Kind::Opaque:
        return "opaque";
    }
    return "value";
}

std::string toDebugString(const DataValue& value)
{
    switch (value.kind()) {
    case DataValue::Kind::Null:
        return "null";
    case DataValue::Kind::String:
        return printStringLiteral(value.asString());
    case DataValue::Kind::Int:
        return std::to_string(value.asInt());
    case DataValue::Kind::Float: {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value.asFloat());
        return std::string(buf, end);
    }
    case DataValue::Kind::Bool:
        return value.asBool() ? "true" : "false";
    case DataValue::Kind::Enum:
        return value.asEnum().name;
    case DataValue::Kind::List: {
        std::string out = "[";
        bool first = true;
        for (const auto& item : value.asList()) {
            if (!first) {
                out += ", ";
            }
            first = false;
            out += toDebugString(item);
        }
        return out + "]";
    }
    case DataValue::Kind::Map: {
        std::string out = "{";
        bool first = true;
        for (const auto& [key, item] : value.asMap()) {
            if (!first) {
                out += ", ";
            }
            first = false;
            out += key + ": " + toDebugString(item);
        }
        return out + "}";
    }
    case DataValue::Kind::Opaque:
        return "<opaque>";
    }
    return {};
}

} // namespace gql
