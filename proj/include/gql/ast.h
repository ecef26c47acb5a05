// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gql {

/// True for `/[_A-Za-z][_0-9A-Za-z]*/`.
bool isValidName(std::string_view name) noexcept;

/// A type expression: a named type, a list of some type, or a non-null wrapper.
///
/// Values are immutable; inner types are shared between copies.
class TypeRef {
public:
    enum class Kind { Named, List, NonNull };

    static TypeRef named(std::string name);
    static TypeRef listOf(TypeRef inner);
    /// Throws std::invalid_argument when `inner` is already non-null.
    static TypeRef nonNull(TypeRef inner);

    Kind kind() const noexcept { return _kind; }
    bool isNamed() const noexcept { return _kind == Kind::Named; }
    bool isList() const noexcept { return _kind == Kind::List; }
    bool isNonNull() const noexcept { return _kind == Kind::NonNull; }

    /// Only valid for Named.
    const std::string& name() const;
    /// Only valid for List and NonNull.
    const TypeRef& inner() const;

    /// The named type at the core of all wrappers.
    const std::string& coreName() const;

    friend bool operator==(const TypeRef& lhs, const TypeRef& rhs);

private:
    TypeRef(Kind kind, std::string name, std::shared_ptr<const TypeRef> inner);

    Kind _kind;
    std::string _name;
    std::shared_ptr<const TypeRef> _inner;
};

struct NullLiteral {
    bool operator==(const NullLiteral&) const = default;
};

struct EnumLiteral {
    std::string name;
    bool operator==(const EnumLiteral&) const = default;
};

/// Literal argument value in a query document.
using LiteralValue = std::variant<NullLiteral, std::string, std::int64_t, bool, EnumLiteral>;

/// Name-ordered pairs; source order is kept.
using ArgumentList = std::vector<std::pair<std::string, LiteralValue>>;

struct FieldSelection {
    std::optional<std::string> alias;
    std::string name;
    ArgumentList arguments;
    std::vector<FieldSelection> selections;

    const std::string& responseKey() const noexcept { return alias ? *alias : name; }
    const LiteralValue* findArgument(std::string_view argName) const noexcept;

    bool operator==(const FieldSelection&) const = default;
};

struct OperationDefinition {
    // The only supported operation kind is `query`.
    std::optional<std::string> name;
    std::vector<FieldSelection> selections;

    bool operator==(const OperationDefinition&) const = default;
};

struct Document {
    std::vector<OperationDefinition> operations;

    bool operator==(const Document&) const = default;
};

struct ArgumentDefAst {
    std::string name;
    TypeRef type;

    bool operator==(const ArgumentDefAst&) const = default;
};

struct FieldDefAst {
    std::string name;
    std::vector<ArgumentDefAst> arguments;
    TypeRef returnType;
    std::optional<std::string> description;

    bool operator==(const FieldDefAst&) const = default;
};

struct ObjectDefAst {
    std::string name;
    std::optional<std::string> description;
    std::vector<FieldDefAst> fields;

    bool operator==(const ObjectDefAst&) const = default;
};

struct EnumDefAst {
    std::string name;
    std::optional<std::string> description;
    std::vector<std::string> values;

    bool operator==(const EnumDefAst&) const = default;
};

using TypeDefinitionAst = std::variant<ObjectDefAst, EnumDefAst>;

const std::string& definitionName(const TypeDefinitionAst& def) noexcept;

// Canonical text printers. Output re-parses to an equal AST.

std::string printTypeRef(const TypeRef& type);
std::string printLiteral(const LiteralValue& value);
std::string printStringLiteral(std::string_view text);
std::string printDocument(const Document& doc);
std::string printSchemaDocument(const std::vector<TypeDefinitionAst>& defs);

} // namespace gql
