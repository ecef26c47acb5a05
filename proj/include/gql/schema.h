// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/ast.h"
#include "gql/value.h"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace gql {

struct FieldDefinition;
struct ObjectType;

/// Everything a resolver gets to see for one invocation.
struct ResolveContext {
    /// Entity identifier, when the engine resolves a bare id.
    std::optional<DataValue> id;
    /// The enclosing object's resolved map; null at root fields.
    const DataValue* parent = nullptr;
    /// Coerced arguments of `field`. Omitted arguments are absent.
    const ValueMap& args;
    const FieldDefinition& field;
    const ObjectType& type;

    const DataValue* arg(std::string_view name) const noexcept;
};

/// Returns std::nullopt when nothing matches.
using Resolver = std::function<std::optional<DataValue>(const ResolveContext&)>;

struct ArgumentDefinition {
    std::string name;
    TypeRef type;
};

struct FieldDefinition {
    std::string name;
    TypeRef returnType;
    std::vector<ArgumentDefinition> arguments;
    std::optional<std::string> description;
    Resolver resolver;

    const ArgumentDefinition* findArgument(std::string_view argName) const noexcept;
};

struct ObjectType {
    std::string name;
    std::optional<std::string> description;
    std::vector<FieldDefinition> fields;
    Resolver resolver;

    const FieldDefinition* findField(std::string_view fieldName) const noexcept;
};

struct EnumType {
    std::string name;
    std::optional<std::string> description;
    std::vector<std::string> values;

    bool hasValue(std::string_view value) const noexcept;
};

struct ScalarType {
    std::string name;
    std::optional<std::string> description;
};

using TypeDefinition = std::variant<ObjectType, EnumType, ScalarType>;

const std::string& typeName(const TypeDefinition& def) noexcept;
const std::optional<std::string>& typeDescription(const TypeDefinition& def) noexcept;

enum class SchemaErrorKind {
    MissingQueryRoot,
    QueryRootNotObject,
    UnresolvedType,
    DuplicateType,
    ReservedName,
    InvalidName,
    NonScalarArgument,
    EmptyType,
    DuplicateField,
    DuplicateArgument,
    DuplicateEnumValue,
};

struct SchemaDiagnostic {
    SchemaErrorKind kind;
    // Type name, then field name, then argument name, as far as applicable.
    std::vector<std::string> path;
    std::string message;
};

class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(std::vector<SchemaDiagnostic> diagnostics);

    const std::vector<SchemaDiagnostic>& diagnostics() const noexcept { return _diagnostics; }
    bool has(SchemaErrorKind kind) const noexcept;

private:
    std::vector<SchemaDiagnostic> _diagnostics;
};

class RegistrationError : public std::runtime_error {
public:
    enum class Kind { UnknownType, UnknownField, AlreadyBound };

    RegistrationError(Kind kind, const std::string& message) : std::runtime_error(message), _kind(kind) {}

    Kind kind() const noexcept { return _kind; }

private:
    Kind _kind;
};

class TypeNotFound : public std::runtime_error {
public:
    explicit TypeNotFound(const std::string& name) : std::runtime_error("type not found: " + name) {}
};

/// Type registry with the mandatory `Query` root.
///
/// Built-in scalars (String, Integer, Boolean, Float, ID) and the `__`
/// introspection types are always present. Named references are stored
/// by name and resolved through the registry, so recursive types need no
/// cyclic structure.
///
/// Registration of types and resolvers is a single-threaded build phase;
/// afterwards the schema is read-only and may be shared between threads.
class Schema {
public:
    static constexpr std::string_view kQueryTypeName = "Query";

    Schema();

    /// Adds a user type. Throws SchemaError for duplicate, reserved or
    /// built-in names; other well-formedness checks live in validateSchema.
    void addType(TypeDefinition def);

    const TypeDefinition* findType(std::string_view name) const noexcept;
    /// Throws TypeNotFound.
    const TypeDefinition& lookupType(std::string_view name) const;
    const ObjectType* findObjectType(std::string_view name) const noexcept;
    /// Throws std::logic_error when there is no object type named Query.
    const ObjectType& queryType() const;

    /// Field lookup that also answers the `__type` and `__typename`
    /// meta-fields.
    const FieldDefinition* findField(const ObjectType& type, std::string_view fieldName) const noexcept;

    /// Names of user-declared types in declaration order.
    std::vector<std::string> typeNames() const;
    static bool isBuiltinScalar(std::string_view name) noexcept;
    static bool isReservedName(std::string_view name) noexcept;

    // Resolver slots start unbound and can be bound once.
    void registerTypeResolver(std::string_view typeName, Resolver resolver);
    void registerFieldResolver(std::string_view typeName, std::string_view fieldName, Resolver resolver);

    void setDescription(std::string_view typeName, std::string description);
    void setFieldDescription(std::string_view typeName, std::string_view fieldName, std::string description);

    static const FieldDefinition& typeMetaField();
    static const FieldDefinition& typenameMetaField();

private:
    TypeDefinition* findMutable(std::string_view name) noexcept;
    ObjectType& mutableObject(std::string_view typeName);
    void addBuiltin(TypeDefinition def);

    std::vector<TypeDefinition> _types;
    std::unordered_map<std::string, std::size_t> _index;
    std::size_t _builtinCount = 0;
};

/// Registers every definition, then checks the result with validateSchema.
/// Throws SchemaError carrying every problem found.
Schema buildSchema(const std::vector<TypeDefinitionAst>& defs);

/// Parses SDL text and builds a schema from it.
Schema loadSchema(std::string_view sdl);

/// Empty iff all schema invariants hold.
std::vector<SchemaDiagnostic> validateSchema(const Schema& schema);

const TypeDefinition& lookupType(const Schema& schema, std::string_view name);

// Value-style registration: the input is left untouched on error.
Schema registerTypeResolver(Schema schema, std::string_view typeName, Resolver resolver);
Schema registerFieldResolver(Schema schema, std::string_view typeName, std::string_view fieldName, Resolver resolver);

} // namespace gql
