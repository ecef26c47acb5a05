// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/parser.h"

#include <charconv>
#include <unordered_set>

namespace gql {
namespace {

// One method per grammar rule, one token of lookahead (two for aliases).
class Parser {
public:
    explicit Parser(std::string_view source) : _tokens(tokenize(source)) {}

    Document document()
    {
        Document doc;
        if (atEnd()) {
            fail("expected query or '{'", "operation");
        }
        std::unordered_set<std::string> names;
        while (!atEnd()) {
            const Token& start = peek();
            OperationDefinition op = operation();
            if (op.name && !names.insert(*op.name).second) {
                throw ParseError("duplicate operation name " + *op.name, start.line, start.column);
            }
            doc.operations.push_back(std::move(op));
        }
        return doc;
    }

    std::vector<TypeDefinitionAst> schemaDocument()
    {
        std::vector<TypeDefinitionAst> defs;
        if (atEnd()) {
            fail("expected type or enum definition", "definition");
        }
        while (!atEnd()) {
            defs.push_back(typeDefinition());
        }
        return defs;
    }

    std::vector<FieldDefAst> fieldBlock()
    {
        if (atEnd()) {
            fail("at least one field required", "field definition");
        }
        return fieldDefinitions([this] { return atEnd(); });
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        const std::size_t index = std::min(_index + ahead, _tokens.size() - 1);
        return _tokens[index];
    }

    bool atEnd() const { return peek().kind == TokenKind::EndOfFile; }

    bool isPunct(char c, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return t.kind == TokenKind::Punctuator && t.text[0] == c;
    }

    bool isKeyword(std::string_view word) const
    {
        return peek().kind == TokenKind::Name && peek().text == word;
    }

    [[noreturn]] void fail(const std::string& message, std::optional<std::string> expected = std::nullopt) const
    {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::EndOfFile ? "end of input" : "'" + t.text + "'";
        throw ParseError(message + ", found " + found, t.line, t.column, std::move(expected));
    }

    const Token& advance() { return _tokens[_index++]; }

    void expectPunct(char c)
    {
        if (!isPunct(c)) {
            fail(std::string("expected '") + c + "'", std::string(1, c));
        }
        advance();
    }

    const Token& expectName(const char* what)
    {
        if (peek().kind != TokenKind::Name) {
            fail(std::string("expected ") + what, what);
        }
        return advance();
    }

    struct DepthGuard {
        DepthGuard(Parser& parser) : _parser(parser)
        {
            if (++_parser._depth > kMaxNestingDepth) {
                _parser.fail("maximum nesting depth of " + std::to_string(kMaxNestingDepth) + " exceeded");
            }
        }
        ~DepthGuard() { --_parser._depth; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;

        Parser& _parser;
    };

    OperationDefinition operation()
    {
        OperationDefinition op;
        if (isKeyword("query")) {
            advance();
            if (peek().kind == TokenKind::Name) {
                op.name = advance().text;
            }
        } else if (!isPunct('{')) {
            fail("expected query or '{'", "operation");
        }
        op.selections = selectionSet();
        return op;
    }

    std::vector<FieldSelection> selectionSet()
    {
        DepthGuard guard(*this);
        expectPunct('{');
        std::vector<FieldSelection> selections;
        do {
            selections.push_back(field());
        } while (!isPunct('}'));
        advance();
        return selections;
    }

    FieldSelection field()
    {
        FieldSelection result;
        result.name = expectName("field name").text;
        if (isPunct(':')) {
            advance();
            result.alias = std::move(result.name);
            result.name = expectName("field name").text;
        }
        if (isPunct('(')) {
            result.arguments = arguments();
        }
        if (isPunct('{')) {
            result.selections = selectionSet();
        }
        return result;
    }

    ArgumentList arguments()
    {
        expectPunct('(');
        ArgumentList args;
        std::unordered_set<std::string> seen;
        do {
            const Token& nameToken = expectName("argument name");
            if (!seen.insert(nameToken.text).second) {
                throw ParseError("duplicate argument name " + nameToken.text, nameToken.line, nameToken.column);
            }
            expectPunct(':');
            args.emplace_back(nameToken.text, literal());
        } while (!isPunct(')'));
        advance();
        return args;
    }

    LiteralValue literal()
    {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::String:
            advance();
            return t.value;
        case TokenKind::Int: {
            advance();
            std::int64_t value = 0;
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            return value;
        }
        case TokenKind::Name:
            advance();
            if (t.text == "true") {
                return true;
            }
            if (t.text == "false") {
                return false;
            }
            if (t.text == "null") {
                return NullLiteral{};
            }
            return EnumLiteral{t.text};
        default:
            fail("expected literal value", "value");
        }
    }

    TypeDefinitionAst typeDefinition()
    {
        const Token& keyword = peek();
        if (isKeyword("type")) {
            advance();
            ObjectDefAst object;
            object.description = keyword.leadingComment;
            object.name = expectName("type name").text;
            expectPunct('{');
            if (isPunct('}')) {
                fail("expected field name", "field definition");
            }
            object.fields = fieldDefinitions([this] { return isPunct('}'); });
            advance();
            return object;
        }
        if (isKeyword("enum")) {
            advance();
            EnumDefAst enumDef;
            enumDef.description = keyword.leadingComment;
            enumDef.name = expectName("enum name").text;
            expectPunct('{');
            std::unordered_set<std::string> seen;
            do {
                const Token& value = expectName("enum value");
                if (value.text == "true" || value.text == "false" || value.text == "null") {
                    throw ParseError("enum value cannot be " + value.text, value.line, value.column);
                }
                if (!seen.insert(value.text).second) {
                    throw ParseError("duplicate enum value " + value.text, value.line, value.column);
                }
                enumDef.values.push_back(value.text);
            } while (!isPunct('}'));
            advance();
            return enumDef;
        }
        fail("expected type or enum definition", "definition");
    }

    template <typename AtStop>
    std::vector<FieldDefAst> fieldDefinitions(AtStop atStop)
    {
        std::vector<FieldDefAst> fields;
        std::unordered_set<std::string> seen;
        do {
            const Token& nameToken = peek();
            FieldDefAst field = fieldDefinition();
            if (!seen.insert(field.name).second) {
                throw ParseError("duplicate field name " + field.name, nameToken.line, nameToken.column);
            }
            fields.push_back(std::move(field));
        } while (!atStop());
        return fields;
    }

    FieldDefAst fieldDefinition()
    {
        const Token& nameToken = expectName("field name");
        std::vector<ArgumentDefAst> args;
        if (isPunct('(')) {
            advance();
            std::unordered_set<std::string> seen;
            do {
                const Token& argToken = expectName("argument name");
                if (!seen.insert(argToken.text).second) {
                    throw ParseError("duplicate argument name " + argToken.text, argToken.line, argToken.column);
                }
                expectPunct(':');
                args.push_back({argToken.text, typeRef()});
            } while (!isPunct(')'));
            advance();
        }
        expectPunct(':');
        TypeRef returnType = typeRef();
        return {nameToken.text, std::move(args), std::move(returnType), nameToken.leadingComment};
    }

    TypeRef typeRef()
    {
        DepthGuard guard(*this);
        TypeRef base = [&] {
            if (isPunct('[')) {
                advance();
                TypeRef inner = typeRef();
                expectPunct(']');
                return TypeRef::listOf(std::move(inner));
            }
            return TypeRef::named(expectName("type name").text);
        }();
        if (isPunct('!')) {
            advance();
            if (isPunct('!')) {
                fail("non-null type cannot be wrapped in non-null");
            }
            return TypeRef::nonNull(std::move(base));
        }
        return base;
    }

    std::vector<Token> _tokens;
    std::size_t _index = 0;
    std::size_t _depth = 0;
};

} // namespace

Document parseDocument(std::string_view source)
{
    return Parser(source).document();
}

std::vector<TypeDefinitionAst> parseSchemaDocument(std::string_view source)
{
    return Parser(source).schemaDocument();
}

std::vector<FieldDefAst> parseFieldBlock(std::string_view source)
{
    return Parser(source).fieldBlock();
}

} // namespace gql
