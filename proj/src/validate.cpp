// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/validate.h"

#include <unordered_set>

namespace gql {
namespace {

std::string_view literalKind(const LiteralValue& literal)
{
    struct Kind {
        std::string_view operator()(const NullLiteral&) const { return "null"; }
        std::string_view operator()(const std::string&) const { return "string"; }
        std::string_view operator()(std::int64_t) const { return "integer"; }
        std::string_view operator()(bool) const { return "boolean"; }
        std::string_view operator()(const EnumLiteral&) const { return "enum"; }
    };
    return std::visit(Kind{}, literal);
}

[[noreturn]] void mismatch(const TypeRef& type, const LiteralValue& literal)
{
    throw CoercionError("expected " + printTypeRef(type) + ", got " + std::string(literalKind(literal)) + " literal " +
        printLiteral(literal));
}

DataValue coerceNamed(const Schema& schema, const TypeRef& type, const LiteralValue& literal)
{
    const std::string& name = type.name();
    const TypeDefinition* def = schema.findType(name);
    if (!def) {
        throw CoercionError("unknown type " + name);
    }
    if (const auto* enumType = std::get_if<EnumType>(def)) {
        const auto* symbol = std::get_if<EnumLiteral>(&literal);
        if (!symbol) {
            mismatch(type, literal);
        }
        if (!enumType->hasValue(symbol->name)) {
            throw CoercionError(symbol->name + " is not a value of enum " + name);
        }
        return EnumSymbol{symbol->name};
    }
    if (!std::holds_alternative<ScalarType>(*def)) {
        throw CoercionError("type " + name + " is not an input type");
    }
    if (name == "String") {
        if (const auto* s = std::get_if<std::string>(&literal)) {
            return *s;
        }
    } else if (name == "Integer") {
        if (const auto* i = std::get_if<std::int64_t>(&literal)) {
            return *i;
        }
    } else if (name == "Float") {
        if (const auto* i = std::get_if<std::int64_t>(&literal)) {
            return static_cast<double>(*i);
        }
    } else if (name == "Boolean") {
        if (const auto* b = std::get_if<bool>(&literal)) {
            return *b;
        }
    } else if (name == "ID") {
        if (const auto* s = std::get_if<std::string>(&literal)) {
            return *s;
        }
        if (const auto* i = std::get_if<std::int64_t>(&literal)) {
            return std::to_string(*i);
        }
    }
    mismatch(type, literal);
}

void checkSelections(const Schema& schema, const ObjectType& type, const std::vector<FieldSelection>& selections,
    std::vector<std::string>& path, std::vector<Diagnostic>& out)
{
    std::unordered_set<std::string> keys;
    for (const auto& selection : selections) {
        const std::string& key = selection.responseKey();
        path.push_back(key);

        if (!keys.insert(key).second) {
            out.push_back({"duplicate response key " + key, path});
        }

        const FieldDefinition* field = schema.findField(type, selection.name);
        if (!field) {
            out.push_back({"unknown field " + selection.name + " on " + type.name, path});
            path.pop_back();
            continue;
        }

        for (const auto& [argName, literal] : selection.arguments) {
            path.push_back(argName);
            if (const ArgumentDefinition* arg = field->findArgument(argName)) {
                try {
                    coerceLiteral(schema, arg->type, literal);
                } catch (const CoercionError& e) {
                    out.push_back({"argument " + argName + ": " + e.what(), path});
                }
            } else {
                out.push_back({"unknown argument " + argName + " on field " + selection.name, path});
            }
            path.pop_back();
        }
        for (const auto& arg : field->arguments) {
            if (arg.type.isNonNull() && !selection.findArgument(arg.name)) {
                path.push_back(arg.name);
                out.push_back({"missing required argument " + arg.name, path});
                path.pop_back();
            }
        }

        const TypeDefinition* core = schema.findType(field->returnType.coreName());
        if (const auto* object = core ? std::get_if<ObjectType>(core) : nullptr) {
            if (selection.selections.empty()) {
                out.push_back({"object field requires selection set", path});
            } else {
                checkSelections(schema, *object, selection.selections, path, out);
            }
        } else if (core && !selection.selections.empty()) {
            out.push_back({"leaf field " + selection.name + " of type " + printTypeRef(field->returnType) +
                    " must not have a selection set",
                path});
        }
        path.pop_back();
    }
}

} // namespace

DataValue coerceLiteral(const Schema& schema, const TypeRef& type, const LiteralValue& literal)
{
    const bool isNull = std::holds_alternative<NullLiteral>(literal);
    switch (type.kind()) {
    case TypeRef::Kind::NonNull:
        if (isNull) {
            throw CoercionError("expected " + printTypeRef(type) + ", got null");
        }
        return coerceLiteral(schema, type.inner(), literal);
    case TypeRef::Kind::List:
        if (isNull) {
            return {};
        }
        // A single value stands for a one-element list.
        return ValueList{coerceLiteral(schema, type.inner(), literal)};
    case TypeRef::Kind::Named:
        if (isNull) {
            return {};
        }
        return coerceNamed(schema, type, literal);
    }
    return {};
}

ValueMap coerceArguments(const Schema& schema, const FieldDefinition& field, const ArgumentList& literals)
{
    ValueMap result;
    for (const auto& [name, literal] : literals) {
        const ArgumentDefinition* arg = field.findArgument(name);
        if (!arg) {
            throw CoercionError("unknown argument " + name + " on field " + field.name);
        }
        try {
            result.emplace_back(name, coerceLiteral(schema, arg->type, literal));
        } catch (const CoercionError& e) {
            throw CoercionError("argument " + name + ": " + e.what());
        }
    }
    for (const auto& arg : field.arguments) {
        if (arg.type.isNonNull()) {
            bool present = false;
            for (const auto& entry : result) {
                present = present || entry.first == arg.name;
            }
            if (!present) {
                throw CoercionError("missing required argument " + arg.name);
            }
        }
    }
    return result;
}

std::vector<Diagnostic> validateDocument(const Schema& schema, const Document& doc)
{
    std::vector<Diagnostic> out;
    const ObjectType* root = schema.findObjectType(Schema::kQueryTypeName);
    if (!root) {
        out.push_back({"schema has no Query root type", {std::string(Schema::kQueryTypeName)}});
        return out;
    }
    std::vector<std::string> path;
    for (const auto& op : doc.operations) {
        checkSelections(schema, *root, op.selections, path, out);
    }
    return out;
}

} // namespace gql
