// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/ast.h"
#include "gql/execute.h"
#include "gql/validate.h"
#include "gql/value.h"

#include <json.hpp>

#include <string>

namespace gql {

using Json = nlohmann::ordered_json;

/// Map keys keep their order. Throws std::logic_error on Opaque values,
/// which must never reach the wire.
Json toJson(const DataValue& value);

/// Objects become maps, integers stay integers, other numbers become floats.
DataValue fromJson(const Json& json);

/// `{"data": ..., "errors": [...]}`; `errors` is left out when empty and an
/// error's `path` is left out when it has none.
Json responseToJson(const Response& response);

/// Compact, deterministic response body.
std::string serializeResponse(const Response& response);

Json documentToJson(const Document& doc);
Json schemaDocumentToJson(const std::vector<TypeDefinitionAst>& defs);
Json diagnosticsToJson(const std::vector<Diagnostic>& diagnostics);

/// Compact dump with invalid UTF-8 replaced instead of throwing.
std::string dumpCompact(const Json& json);

} // namespace gql
