// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/ast.h"
#include "gql/schema.h"
#include "gql/value.h"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gql {

/// A response key or a list index.
using PathSegment = std::variant<std::string, std::size_t>;
using ResponsePath = std::vector<PathSegment>;

enum class ErrorKind {
    Parse,
    Validation,
    AmbiguousOperation,
    UnknownOperation,
    NonNullViolation,
    TypeMismatch,
    MissingTypeResolver,
    UnresolvedEntity,
    Coercion,
};

struct ExecutionError {
    std::string message;
    ResponsePath path;
    ErrorKind kind = ErrorKind::Validation;
};

struct Response {
    /// A map, or Null when execution could not produce data.
    DataValue data;
    std::vector<ExecutionError> errors;
};

/// Runs one request: validation, operation selection, then top-down
/// execution from the Query root with no parent and no id.
Response executeRequest(const Schema& schema, const Document& doc,
    std::optional<std::string_view> operationName = std::nullopt);

/// Parses `source` first; parse failures become a response error.
Response executeQuery(const Schema& schema, std::string_view source,
    std::optional<std::string_view> operationName = std::nullopt);

/// The `__type(name:)` answer: Null for unknown names.
DataValue introspectType(const Schema& schema, std::string_view name);

/// Per-request execution state. Not thread-safe; create one per request.
///
/// The optional results below use std::nullopt for "null with an error
/// already recorded"; the nearest nullable position turns it into Null.
class Executor {
public:
    explicit Executor(const Schema& schema) : _schema(schema) {}

    /// Resolves and completes each selection against `parent` (null at the
    /// root). The result map is keyed by response key in selection order.
    std::optional<DataValue> executeSelectionSet(const ObjectType& type,
        const std::vector<FieldSelection>& selections, const DataValue* parent, ResponsePath& path);

    /// Resolution precedence:
    ///   1. the field's own resolver, with the enclosing object's map as parent;
    ///   2. the core type's resolver, when the raw value is absent (no id) or a
    ///      bare scalar (used as id);
    ///   3. the parent's entry under the field name, or Null.
    /// Returns std::nullopt when a resolver reports no result.
    std::optional<DataValue> resolveFieldValue(const ResolveContext& ctx) const;

    /// Enforces `type` on a resolved value: unwraps non-null, maps over lists,
    /// descends into objects and turns bare ids into entities.
    std::optional<DataValue> completeValue(const TypeRef& type, const std::vector<FieldSelection>& selections,
        const DataValue& value, ResponsePath& path, const FieldDefinition& field, const ValueMap& args);

    const std::vector<ExecutionError>& errors() const noexcept { return _errors; }
    std::vector<ExecutionError> takeErrors() noexcept { return std::move(_errors); }

private:
    std::optional<DataValue> completeUnwrapped(const TypeRef& type, const std::vector<FieldSelection>& selections,
        const DataValue& value, ResponsePath& path, const FieldDefinition& field, const ValueMap& args);
    std::optional<DataValue> completeNamed(const TypeRef& type, const std::vector<FieldSelection>& selections,
        const DataValue& value, ResponsePath& path, const FieldDefinition& field, const ValueMap& args);
    void error(ErrorKind kind, std::string message, const ResponsePath& path);

    const Schema& _schema;
    std::vector<ExecutionError> _errors;
};

std::string formatPath(const ResponsePath& path);

} // namespace gql
