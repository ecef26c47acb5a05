// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/execute.h"

#include "gql/parser.h"
#include "gql/validate.h"

namespace gql {

std::string formatPath(const ResponsePath& path)
{
    std::string out;
    for (const auto& segment : path) {
        if (const auto* key = std::get_if<std::string>(&segment)) {
            if (!out.empty()) {
                out.push_back('.');
            }
            out += *key;
        } else {
            out += "[" + std::to_string(std::get<std::size_t>(segment)) + "]";
        }
    }
    return out;
}

void Executor::error(ErrorKind kind, std::string message, const ResponsePath& path)
{
    _errors.push_back({std::move(message), path, kind});
}

std::optional<DataValue> Executor::executeSelectionSet(const ObjectType& type,
    const std::vector<FieldSelection>& selections, const DataValue* parent, ResponsePath& path)
{
    ValueMap result;
    result.reserve(selections.size());
    for (const auto& selection : selections) {
        path.emplace_back(selection.responseKey());
        const FieldDefinition* field = _schema.findField(type, selection.name);
        if (!field) {
            // Only reachable when validation was skipped.
            error(ErrorKind::Validation, "unknown field " + selection.name + " on " + type.name, path);
            path.pop_back();
            continue;
        }

        std::optional<DataValue> completed;
        try {
            const ValueMap args = coerceArguments(_schema, *field, selection.arguments);
            const ResolveContext ctx{std::nullopt, parent, args, *field, type};
            const DataValue raw = resolveFieldValue(ctx).value_or(DataValue{});
            completed = completeValue(field->returnType, selection.selections, raw, path, *field, args);
        } catch (const CoercionError& e) {
            error(ErrorKind::Coercion, e.what(), path);
            if (!field->returnType.isNonNull()) {
                completed = DataValue{};
            }
        }
        path.pop_back();

        if (!completed) {
            return std::nullopt;
        }
        result.emplace_back(selection.responseKey(), std::move(*completed));
    }
    return DataValue(std::move(result));
}

std::optional<DataValue> Executor::resolveFieldValue(const ResolveContext& ctx) const
{
    if (&ctx.field == &Schema::typeMetaField()) {
        const DataValue* name = ctx.arg("name");
        return name && name->isString() ? introspectType(_schema, name->asString()) : DataValue{};
    }
    if (&ctx.field == &Schema::typenameMetaField()) {
        return DataValue(ctx.type.name);
    }

    if (ctx.field.resolver) {
        return ctx.field.resolver(ctx);
    }

    const DataValue* raw = ctx.parent ? ctx.parent->find(ctx.field.name) : nullptr;
    const ObjectType* core = _schema.findObjectType(ctx.field.returnType.coreName());
    if (core && core->resolver) {
        if (!raw) {
            const ResolveContext typeCtx{std::nullopt, ctx.parent, ctx.args, ctx.field, *core};
            return core->resolver(typeCtx);
        }
        if (raw->isInt() || raw->isString()) {
            const ResolveContext typeCtx{*raw, ctx.parent, ctx.args, ctx.field, *core};
            return core->resolver(typeCtx);
        }
    }
    return raw ? *raw : DataValue{};
}

std::optional<DataValue> Executor::completeValue(const TypeRef& type, const std::vector<FieldSelection>& selections,
    const DataValue& value, ResponsePath& path, const FieldDefinition& field, const ValueMap& args)
{
    if (type.isNonNull()) {
        auto result = completeUnwrapped(type.inner(), selections, value, path, field, args);
        if (result && result->isNull()) {
            error(ErrorKind::NonNullViolation,
                "null value for non-null type " + printTypeRef(type) + " at " + formatPath(path), path);
            return std::nullopt;
        }
        return result;
    }
    auto result = completeUnwrapped(type, selections, value, path, field, args);
    return result ? std::move(result) : DataValue{};
}

std::optional<DataValue> Executor::completeUnwrapped(const TypeRef& type,
    const std::vector<FieldSelection>& selections, const DataValue& value, ResponsePath& path,
    const FieldDefinition& field, const ValueMap& args)
{
    if (value.isNull()) {
        return DataValue{};
    }
    if (!type.isList()) {
        return completeNamed(type, selections, value, path, field, args);
    }
    if (!value.isList()) {
        error(ErrorKind::TypeMismatch,
            "expected a list for " + printTypeRef(type) + ", got " + std::string(kindName(value.kind())), path);
        return std::nullopt;
    }
    ValueList items;
    items.reserve(value.asList().size());
    for (std::size_t i = 0; i < value.asList().size(); ++i) {
        path.emplace_back(i);
        auto item = completeValue(type.inner(), selections, value.asList()[i], path, field, args);
        path.pop_back();
        if (!item) {
            return std::nullopt;
        }
        items.push_back(std::move(*item));
    }
    return DataValue(std::move(items));
}

std::optional<DataValue> Executor::completeNamed(const TypeRef& type, const std::vector<FieldSelection>& selections,
    const DataValue& value, ResponsePath& path, const FieldDefinition& field, const ValueMap& args)
{
    const std::string& name = type.name();
    const TypeDefinition* def = _schema.findType(name);
    auto mismatch = [&] {
        error(ErrorKind::TypeMismatch,
            "expected " + name + ", got " + std::string(kindName(value.kind())) + " value", path);
        return std::nullopt;
    };
    if (!def) {
        error(ErrorKind::TypeMismatch, "unknown type " + name, path);
        return std::nullopt;
    }

    if (const auto* object = std::get_if<ObjectType>(def)) {
        if (value.isMap()) {
            return executeSelectionSet(*object, selections, &value, path);
        }
        if (!value.isInt() && !value.isString()) {
            return mismatch();
        }
        // A bare scalar is an entity id for the type's resolver.
        if (!object->resolver) {
            error(ErrorKind::MissingTypeResolver,
                "no resolver bound for type " + name + " to resolve id " + toDebugString(value), path);
            return std::nullopt;
        }
        const ResolveContext ctx{value, nullptr, args, field, *object};
        auto entity = object->resolver(ctx);
        if (!entity) {
            error(ErrorKind::UnresolvedEntity, "no " + name + " with id " + toDebugString(value), path);
            return std::nullopt;
        }
        if (entity->isNull()) {
            return DataValue{};
        }
        if (!entity->isMap()) {
            error(ErrorKind::TypeMismatch,
                "resolver for " + name + " returned " + std::string(kindName(entity->kind())) + " for an id", path);
            return std::nullopt;
        }
        return executeSelectionSet(*object, selections, &*entity, path);
    }

    if (const auto* enumType = std::get_if<EnumType>(def)) {
        const std::string* symbol = value.isEnum() ? &value.asEnum().name
            : value.isString()                     ? &value.asString()
                                                   : nullptr;
        if (!symbol || !enumType->hasValue(*symbol)) {
            return mismatch();
        }
        return DataValue(EnumSymbol{*symbol});
    }

    if (name == "String") {
        if (value.isString()) {
            return value;
        }
    } else if (name == "Integer") {
        if (value.isInt()) {
            return value;
        }
    } else if (name == "Float") {
        if (value.isFloat()) {
            return value;
        }
        if (value.isInt()) {
            return DataValue(static_cast<double>(value.asInt()));
        }
    } else if (name == "Boolean") {
        if (value.isBool()) {
            return value;
        }
    } else if (name == "ID") {
        if (value.isString()) {
            return value;
        }
        if (value.isInt()) {
            return DataValue(std::to_string(value.asInt()));
        }
    }
    return mismatch();
}

DataValue introspectType(const Schema& schema, std::string_view name)
{
    const TypeDefinition* def = schema.findType(name);
    if (!def) {
        return {};
    }
    auto describe = [](const std::optional<std::string>& description) {
        return description ? DataValue(*description) : DataValue{};
    };

    DataValue result;
    result.set("name", typeName(*def));
    if (const auto* object = std::get_if<ObjectType>(def)) {
        result.set("kind", EnumSymbol{"OBJECT"});
        result.set("description", describe(object->description));
        ValueList fields;
        for (const auto& field : object->fields) {
            ValueList args;
            for (const auto& arg : field.arguments) {
                args.push_back(ValueMap{{"name", arg.name}, {"type", printTypeRef(arg.type)}});
            }
            fields.push_back(ValueMap{{"name", field.name}, {"type", printTypeRef(field.returnType)},
                {"description", describe(field.description)}, {"args", std::move(args)}});
        }
        result.set("fields", std::move(fields));
    } else if (const auto* enumType = std::get_if<EnumType>(def)) {
        result.set("kind", EnumSymbol{"ENUM"});
        result.set("description", describe(enumType->description));
        ValueList values;
        for (const auto& value : enumType->values) {
            values.push_back(ValueMap{{"name", value}, {"description", DataValue{}}});
        }
        result.set("enumValues", std::move(values));
    } else {
        result.set("kind", EnumSymbol{"SCALAR"});
        result.set("description", describe(typeDescription(*def)));
    }
    return result;
}

Response executeRequest(const Schema& schema, const Document& doc, std::optional<std::string_view> operationName)
{
    Response response;
    const auto diagnostics = validateDocument(schema, doc);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) {
            response.errors.push_back({d.message, ResponsePath(d.path.begin(), d.path.end()), ErrorKind::Validation});
        }
        return response;
    }

    const OperationDefinition* op = nullptr;
    if (operationName) {
        for (const auto& candidate : doc.operations) {
            if (candidate.name && *candidate.name == *operationName) {
                op = &candidate;
                break;
            }
        }
        if (!op) {
            response.errors.push_back(
                {"unknown operation " + std::string(*operationName), {}, ErrorKind::UnknownOperation});
            return response;
        }
    } else if (doc.operations.size() == 1) {
        op = &doc.operations.front();
    } else {
        response.errors.push_back(
            {"document has several operations; an operation name is required", {}, ErrorKind::AmbiguousOperation});
        return response;
    }

    Executor executor(schema);
    ResponsePath path;
    auto data = executor.executeSelectionSet(schema.queryType(), op->selections, nullptr, path);
    response.data = data ? std::move(*data) : DataValue{};
    response.errors = executor.takeErrors();
    return response;
}

Response executeQuery(const Schema& schema, std::string_view source, std::optional<std::string_view> operationName)
{
    Document doc;
    try {
        doc = parseDocument(source);
    } catch (const ParseError& e) {
        Response response;
        response.errors.push_back({std::string("parse error at ") + e.what(), {}, ErrorKind::Parse});
        return response;
    }
    return executeRequest(schema, doc, operationName);
}

} // namespace gql
