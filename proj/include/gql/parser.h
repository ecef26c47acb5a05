// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/ast.h"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gql {

enum class TokenKind { Name, String, Int, Punctuator, EndOfFile };

std::string_view tokenKindName(TokenKind kind) noexcept;

struct Token {
    TokenKind kind;
    // Raw lexeme as it appears in the source.
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
    // Decoded contents for String tokens.
    std::string value;
    // Consecutive `#` comment lines directly above this token, one per line.
    std::optional<std::string> leadingComment;
};

/// First grammar or lexical error in a source text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column,
        std::optional<std::string> expected = std::nullopt);

    const std::string& message() const noexcept { return _message; }
    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }
    const std::optional<std::string>& expected() const noexcept { return _expected; }

private:
    std::string _message;
    std::size_t _line;
    std::size_t _column;
    std::optional<std::string> _expected;
};

/// Selection sets and type wrappers may nest at most this deep.
inline constexpr std::size_t kMaxNestingDepth = 128;

/// Splits source text into tokens. Whitespace, commas and comments are
/// skipped; the result always ends with an EndOfFile token.
std::vector<Token> tokenize(std::string_view source);

/// Parses a query document (one or more `query` operations or the anonymous
/// shorthand).
Document parseDocument(std::string_view source);

/// Parses `type` and `enum` definitions. A run of `#` comment lines
/// directly above a definition or field becomes its description.
std::vector<TypeDefinitionAst> parseSchemaDocument(std::string_view source);

/// Parses a bare list of field definitions without the surrounding
/// `type Name { ... }`.
std::vector<FieldDefAst> parseFieldBlock(std::string_view source);

} // namespace gql
