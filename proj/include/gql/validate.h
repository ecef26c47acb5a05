// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/ast.h"
#include "gql/schema.h"
#include "gql/value.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace gql {

/// A query validation error. Always severity `error`.
struct Diagnostic {
    std::string message;
    // Response keys from the root; argument problems end with the argument name.
    std::vector<std::string> path;

    bool operator==(const Diagnostic&) const = default;
};

class CoercionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks every operation of `doc` against `schema`. Never calls resolvers.
/// Diagnostics come out in document order, depth first.
std::vector<Diagnostic> validateDocument(const Schema& schema, const Document& doc);

/// Converts literal arguments to runtime values. Omitted arguments stay
/// absent; an explicit `null` becomes a Null entry. Throws CoercionError.
ValueMap coerceArguments(const Schema& schema, const FieldDefinition& field, const ArgumentList& literals);

/// Converts one literal to `type`. Throws CoercionError.
DataValue coerceLiteral(const Schema& schema, const TypeRef& type, const LiteralValue& literal);

} // namespace gql
