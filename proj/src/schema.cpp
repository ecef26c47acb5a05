// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/schema.h"

#include "gql/parser.h"

#include <array>
#include <unordered_set>

namespace gql {
namespace {

constexpr std::array<std::string_view, 5> kBuiltinScalars = {"String", "Integer", "Boolean", "Float", "ID"};

constexpr std::string_view kIntrospectionSdl = R"(
type __Type {
  name: String!
  kind: __TypeKind!
  description: String
  fields: [__Field!]
  enumValues: [__EnumValue!]
}
type __Field {
  name: String!
  type: String!
  description: String
  args: [__InputValue!]
}
type __InputValue {
  name: String!
  type: String!
}
type __EnumValue {
  name: String!
  description: String
}
enum __TypeKind {
  OBJECT
  ENUM
  SCALAR
}
)";

TypeDefinition toDefinition(const TypeDefinitionAst& ast)
{
    if (const auto* object = std::get_if<ObjectDefAst>(&ast)) {
        ObjectType type{object->name, object->description, {}, {}};
        for (const auto& field : object->fields) {
            FieldDefinition def{field.name, field.returnType, {}, field.description, {}};
            for (const auto& arg : field.arguments) {
                def.arguments.push_back({arg.name, arg.type});
            }
            type.fields.push_back(std::move(def));
        }
        return type;
    }
    const auto& enumDef = std::get<EnumDefAst>(ast);
    return EnumType{enumDef.name, enumDef.description, enumDef.values};
}

std::string joinMessages(const std::vector<SchemaDiagnostic>& diagnostics)
{
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty()) {
            out += "; ";
        }
        out += d.message;
    }
    return out;
}

} // namespace

const DataValue* ResolveContext::arg(std::string_view name) const noexcept
{
    for (const auto& [key, value] : args) {
        if (key == name) {
            return &value;
        }
    }
    return nullptr;
}

const ArgumentDefinition* FieldDefinition::findArgument(std::string_view argName) const noexcept
{
    for (const auto& arg : arguments) {
        if (arg.name == argName) {
            return &arg;
        }
    }
    return nullptr;
}

const FieldDefinition* ObjectType::findField(std::string_view fieldName) const noexcept
{
    for (const auto& field : fields) {
        if (field.name == fieldName) {
            return &field;
        }
    }
    return nullptr;
}

bool EnumType::hasValue(std::string_view value) const noexcept
{
    for (const auto& v : values) {
        if (v == value) {
            return true;
        }
    }
    return false;
}

const std::string& typeName(const TypeDefinition& def) noexcept
{
    return std::visit([](const auto& d) -> const std::string& { return d.name; }, def);
}

const std::optional<std::string>& typeDescription(const TypeDefinition& def) noexcept
{
    return std::visit([](const auto& d) -> const std::optional<std::string>& { return d.description; }, def);
}

SchemaError::SchemaError(std::vector<SchemaDiagnostic> diagnostics)
    : std::runtime_error(joinMessages(diagnostics)), _diagnostics(std::move(diagnostics))
{
}

bool SchemaError::has(SchemaErrorKind kind) const noexcept
{
    for (const auto& d : _diagnostics) {
        if (d.kind == kind) {
            return true;
        }
    }
    return false;
}

Schema::Schema()
{
    for (auto name : kBuiltinScalars) {
        addBuiltin(ScalarType{std::string(name), std::nullopt});
    }
    static const std::vector<TypeDefinitionAst> introspection = parseSchemaDocument(kIntrospectionSdl);
    for (const auto& def : introspection) {
        addBuiltin(toDefinition(def));
    }
    _builtinCount = _types.size();
}

void Schema::addBuiltin(TypeDefinition def)
{
    _index.emplace(typeName(def), _types.size());
    _types.push_back(std::move(def));
}

bool Schema::isBuiltinScalar(std::string_view name) noexcept
{
    for (auto scalar : kBuiltinScalars) {
        if (scalar == name) {
            return true;
        }
    }
    return false;
}

bool Schema::isReservedName(std::string_view name) noexcept
{
    return name.substr(0, 2) == "__";
}

void Schema::addType(TypeDefinition def)
{
    const std::string& name = typeName(def);
    if (isReservedName(name)) {
        throw SchemaError({{SchemaErrorKind::ReservedName, {name}, "type name " + name + " is reserved"}});
    }
    if (isBuiltinScalar(name)) {
        throw SchemaError(
            {{SchemaErrorKind::DuplicateType, {name}, "built-in scalar " + name + " cannot be redefined"}});
    }
    if (_index.count(name)) {
        throw SchemaError({{SchemaErrorKind::DuplicateType, {name}, "duplicate type " + name}});
    }
    _index.emplace(name, _types.size());
    _types.push_back(std::move(def));
}

const TypeDefinition* Schema::findType(std::string_view name) const noexcept
{
    auto it = _index.find(std::string(name));
    return it == _index.end() ? nullptr : &_types[it->second];
}

TypeDefinition* Schema::findMutable(std::string_view name) noexcept
{
    auto it = _index.find(std::string(name));
    return it == _index.end() ? nullptr : &_types[it->second];
}

const TypeDefinition& Schema::lookupType(std::string_view name) const
{
    const TypeDefinition* def = findType(name);
    if (!def) {
        throw TypeNotFound(std::string(name));
    }
    return *def;
}

const ObjectType* Schema::findObjectType(std::string_view name) const noexcept
{
    const TypeDefinition* def = findType(name);
    return def ? std::get_if<ObjectType>(def) : nullptr;
}

const ObjectType& Schema::queryType() const
{
    const ObjectType* query = findObjectType(kQueryTypeName);
    if (!query) {
        throw std::logic_error("schema has no Query object type");
    }
    return *query;
}

const FieldDefinition* Schema::findField(const ObjectType& type, std::string_view fieldName) const noexcept
{
    if (fieldName == "__typename") {
        return &typenameMetaField();
    }
    if (fieldName == "__type" && type.name == kQueryTypeName) {
        return &typeMetaField();
    }
    return type.findField(fieldName);
}

const FieldDefinition& Schema::typeMetaField()
{
    static const FieldDefinition field{"__type", TypeRef::named("__Type"),
        {{"name", TypeRef::nonNull(TypeRef::named("String"))}}, "Looks up a type by name.", {}};
    return field;
}

const FieldDefinition& Schema::typenameMetaField()
{
    static const FieldDefinition field{
        "__typename", TypeRef::nonNull(TypeRef::named("String")), {}, "Name of the enclosing object type.", {}};
    return field;
}

std::vector<std::string> Schema::typeNames() const
{
    std::vector<std::string> names;
    for (std::size_t i = _builtinCount; i < _types.size(); ++i) {
        names.push_back(typeName(_types[i]));
    }
    return names;
}

ObjectType& Schema::mutableObject(std::string_view typeName)
{
    TypeDefinition* def = findMutable(typeName);
    ObjectType* object = def ? std::get_if<ObjectType>(def) : nullptr;
    if (!object || isReservedName(typeName)) {
        throw RegistrationError(
            RegistrationError::Kind::UnknownType, "no object type named " + std::string(typeName));
    }
    return *object;
}

void Schema::registerTypeResolver(std::string_view typeName, Resolver resolver)
{
    ObjectType& object = mutableObject(typeName);
    if (object.resolver) {
        throw RegistrationError(
            RegistrationError::Kind::AlreadyBound, "resolver for " + object.name + " is already bound");
    }
    object.resolver = std::move(resolver);
}

void Schema::registerFieldResolver(std::string_view typeName, std::string_view fieldName, Resolver resolver)
{
    ObjectType& object = mutableObject(typeName);
    for (auto& field : object.fields) {
        if (field.name == fieldName) {
            if (field.resolver) {
                throw RegistrationError(RegistrationError::Kind::AlreadyBound,
                    "resolver for " + object.name + "." + field.name + " is already bound");
            }
            field.resolver = std::move(resolver);
            return;
        }
    }
    throw RegistrationError(RegistrationError::Kind::UnknownField,
        "no field " + std::string(fieldName) + " on type " + object.name);
}

void Schema::setDescription(std::string_view typeName, std::string description)
{
    TypeDefinition* def = findMutable(typeName);
    if (!def) {
        throw TypeNotFound(std::string(typeName));
    }
    std::visit([&](auto& d) { d.description = std::move(description); }, *def);
}

void Schema::setFieldDescription(std::string_view typeName, std::string_view fieldName, std::string description)
{
    ObjectType& object = mutableObject(typeName);
    for (auto& field : object.fields) {
        if (field.name == fieldName) {
            field.description = std::move(description);
            return;
        }
    }
    throw RegistrationError(RegistrationError::Kind::UnknownField,
        "no field " + std::string(fieldName) + " on type " + object.name);
}

std::vector<SchemaDiagnostic> validateSchema(const Schema& schema)
{
    std::vector<SchemaDiagnostic> out;

    const TypeDefinition* root = schema.findType(Schema::kQueryTypeName);
    if (!root) {
        out.push_back({SchemaErrorKind::MissingQueryRoot, {std::string(Schema::kQueryTypeName)},
            "root type Query missing"});
    } else if (!std::holds_alternative<ObjectType>(*root)) {
        out.push_back({SchemaErrorKind::QueryRootNotObject, {std::string(Schema::kQueryTypeName)},
            "root type Query must be an object type"});
    }

    for (const auto& name : schema.typeNames()) {
        const TypeDefinition& def = schema.lookupType(name);
        if (!isValidName(name)) {
            out.push_back({SchemaErrorKind::InvalidName, {name}, "invalid type name " + name});
        }
        if (const auto* enumType = std::get_if<EnumType>(&def)) {
            if (enumType->values.empty()) {
                out.push_back({SchemaErrorKind::EmptyType, {name}, "enum " + name + " has no values"});
            }
            std::unordered_set<std::string> seen;
            for (const auto& value : enumType->values) {
                if (!seen.insert(value).second) {
                    out.push_back({SchemaErrorKind::DuplicateEnumValue, {name, value},
                        "duplicate enum value " + value + " in " + name});
                }
            }
            continue;
        }
        const auto* object = std::get_if<ObjectType>(&def);
        if (!object) {
            continue;
        }
        if (object->fields.empty()) {
            out.push_back({SchemaErrorKind::EmptyType, {name}, "object type " + name + " has no fields"});
        }
        std::unordered_set<std::string> fieldNames;
        for (const auto& field : object->fields) {
            if (!fieldNames.insert(field.name).second) {
                out.push_back({SchemaErrorKind::DuplicateField, {name, field.name},
                    "duplicate field " + field.name + " on " + name});
            }
            if (Schema::isReservedName(field.name)) {
                out.push_back({SchemaErrorKind::ReservedName, {name, field.name},
                    "field name " + field.name + " is reserved"});
            } else if (!isValidName(field.name)) {
                out.push_back({SchemaErrorKind::InvalidName, {name, field.name},
                    "invalid field name " + field.name});
            }
            const std::string& core = field.returnType.coreName();
            if (!schema.findType(core)) {
                out.push_back({SchemaErrorKind::UnresolvedType, {name, field.name}, "unresolved type " + core});
            }
            std::unordered_set<std::string> argNames;
            for (const auto& arg : field.arguments) {
                if (!argNames.insert(arg.name).second) {
                    out.push_back({SchemaErrorKind::DuplicateArgument, {name, field.name, arg.name},
                        "duplicate argument " + arg.name + " on " + name + "." + field.name});
                }
                const std::string& argCore = arg.type.coreName();
                const TypeDefinition* argType = schema.findType(argCore);
                if (!argType) {
                    out.push_back({SchemaErrorKind::UnresolvedType, {name, field.name, arg.name},
                        "unresolved type " + argCore});
                } else if (std::holds_alternative<ObjectType>(*argType)) {
                    out.push_back({SchemaErrorKind::NonScalarArgument, {name, field.name, arg.name},
                        "argument types must be scalar or enum"});
                }
            }
        }
    }
    return out;
}

Schema buildSchema(const std::vector<TypeDefinitionAst>& defs)
{
    Schema schema;
    std::vector<SchemaDiagnostic> problems;
    for (const auto& def : defs) {
        try {
            schema.addType(toDefinition(def));
        } catch (const SchemaError& e) {
            problems.insert(problems.end(), e.diagnostics().begin(), e.diagnostics().end());
        }
    }
    auto diagnostics = validateSchema(schema);
    problems.insert(problems.end(), diagnostics.begin(), diagnostics.end());
    if (!problems.empty()) {
        throw SchemaError(std::move(problems));
    }
    return schema;
}

Schema loadSchema(std::string_view sdl)
{
    return buildSchema(parseSchemaDocument(sdl));
}

const TypeDefinition& lookupType(const Schema& schema, std::string_view name)
{
    return schema.lookupType(name);
}

Schema registerTypeResolver(Schema schema, std::string_view typeName, Resolver resolver)
{
    schema.registerTypeResolver(typeName, std::move(resolver));
    return schema;
}

Schema registerFieldResolver(Schema schema, std::string_view typeName, std::string_view fieldName, Resolver resolver)
{
    schema.registerFieldResolver(typeName, fieldName, std::move(resolver));
    return schema;
}

} // namespace gql
