// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/parser.h"

#include "support/fixtures.h"

#include <gtest/gtest.h>

namespace gql {
namespace {

FieldSelection leaf(std::string name, std::optional<std::string> alias = std::nullopt)
{
    return FieldSelection{std::move(alias), std::move(name), {}, {}};
}

std::vector<std::string> lexemes(std::string_view source)
{
    std::vector<std::string> out;
    for (const auto& t : tokenize(source)) {
        out.push_back(t.kind == TokenKind::EndOfFile ? "<EOF>" : t.text);
    }
    return out;
}

ParseError parseFailure(std::string_view source)
{
    try {
        parseDocument(source);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for " << source;
    return ParseError("", 0, 0);
}

TEST(TokenizeTest, EmptySourceIsJustEof)
{
    const auto tokens = tokenize("");
    ASSERT_EQ(tokens.size(), 1u);
    EXPECT_EQ(tokens[0].kind, TokenKind::EndOfFile);
}

TEST(TokenizeTest, FieldDefinition)
{
    const auto tokens = tokenize("name: String!");
    ASSERT_EQ(tokens.size(), 5u);
    EXPECT_EQ(tokens[0].kind, TokenKind::Name);
    EXPECT_EQ(tokens[0].text, "name");
    EXPECT_EQ(tokens[1].kind, TokenKind::Punctuator);
    EXPECT_EQ(tokens[1].text, ":");
    EXPECT_EQ(tokens[2].text, "String");
    EXPECT_EQ(tokens[3].text, "!");
    EXPECT_EQ(tokens[4].kind, TokenKind::EndOfFile);
}

TEST(TokenizeTest, CommentsCommasAndWhitespaceVanish)
{
    EXPECT_EQ(lexemes("books(favourite: true) # list"),
        (std::vector<std::string>{"books", "(", "favourite", ":", "true", ")", "<EOF>"}));
    EXPECT_EQ(lexemes(",a,,\tb\r\n,c"), (std::vector<std::string>{"a", "b", "c", "<EOF>"}));
}

TEST(TokenizeTest, ByteOrderMarksAreIgnored)
{
    EXPECT_EQ(lexemes("\xEF\xBB\xBF{ a\xEF\xBB\xBF b }"), (std::vector<std::string>{"{", "a", "b", "}", "<EOF>"}));
}

TEST(TokenizeTest, PositionsAreOneBased)
{
    const auto tokens = tokenize("{\n  name\n}");
    EXPECT_EQ(tokens[1].line, 2u);
    EXPECT_EQ(tokens[1].column, 3u);
}

TEST(TokenizeTest, NumbersAndStrings)
{
    const auto tokens = tokenize(R"(-17 0 "a\"b\\c\né😀")");
    EXPECT_EQ(tokens[0].kind, TokenKind::Int);
    EXPECT_EQ(tokens[0].text, "-17");
    EXPECT_EQ(tokens[1].text, "0");
    EXPECT_EQ(tokens[2].kind, TokenKind::String);
    EXPECT_EQ(tokens[2].value, "a\"b\\c\n\xC3\xA9\xF0\x9F\x98\x80");
}

TEST(TokenizeTest, LexicalErrors)
{
    EXPECT_THROW(tokenize("\"open"), ParseError);
    EXPECT_THROW(tokenize("007"), ParseError);
    EXPECT_THROW(tokenize("1.5"), ParseError);
    EXPECT_THROW(tokenize("12abc"), ParseError);
    EXPECT_THROW(tokenize("99999999999999999999"), ParseError);
    EXPECT_THROW(tokenize("$var"), ParseError);
    EXPECT_THROW(tokenize("\"bad \\q escape\""), ParseError);
    EXPECT_THROW(tokenize("...frag"), ParseError);
}

TEST(ParseDocumentTest, GetAliceQuery)
{
    const Document doc = parseDocument(testing::readData("getAlice.graphql"));

    FieldSelection authors{std::nullopt, "authors", {}, {leaf("name")}};
    FieldSelection books{std::nullopt, "books", {{"favourite", true}}, {leaf("title"), authors}};
    FieldSelection person{
        std::nullopt, "person", {{"name", std::string("Alice")}}, {leaf("name"), leaf("age", "years"), books}};
    Document expected;
    expected.operations.push_back({std::string("getAlice"), {person}});
    EXPECT_EQ(doc, expected);
}

TEST(ParseDocumentTest, AnonymousShorthand)
{
    const Document doc = parseDocument("{ person { name } }");
    ASSERT_EQ(doc.operations.size(), 1u);
    EXPECT_FALSE(doc.operations[0].name.has_value());
    EXPECT_EQ(doc.operations[0].selections[0].name, "person");
    EXPECT_EQ(doc.operations[0].selections[0].selections[0].name, "name");
}

TEST(ParseDocumentTest, EmptySelectionSetIsAnError)
{
    const ParseError e = parseFailure("{ }");
    EXPECT_NE(e.message().find("expected field name"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
}

TEST(ParseDocumentTest, LiteralKinds)
{
    const Document doc = parseDocument(R"({ f(a: null, b: RED, c: -3, d: false, e: "x") })");
    const auto& args = doc.operations[0].selections[0].arguments;
    ASSERT_EQ(args.size(), 5u);
    EXPECT_EQ(args[0].second, LiteralValue(NullLiteral{}));
    EXPECT_EQ(args[1].second, LiteralValue(EnumLiteral{"RED"}));
    EXPECT_EQ(args[2].second, LiteralValue(std::int64_t{-3}));
    EXPECT_EQ(args[3].second, LiteralValue(false));
    EXPECT_EQ(args[4].second, LiteralValue(std::string("x")));
}

TEST(ParseDocumentTest, StructuralErrors)
{
    parseFailure("");
    parseFailure("{");
    parseFailure("{ a } }");
    parseFailure("{ a(b) }");
    parseFailure("{ a(b: ) }");
    parseFailure("{ a(b: 1, b: 2) }");
    parseFailure("{ a() }");
    parseFailure("query q { a } query q { b }");
    parseFailure("mutation { a }");
    parseFailure("{ a: }");
}

TEST(ParseDocumentTest, DepthLimit)
{
    auto nested = [](std::size_t depth) {
        std::string text;
        for (std::size_t i = 0; i < depth; ++i) {
            text += "{ a ";
        }
        text += "{ b }";
        for (std::size_t i = 0; i < depth; ++i) {
            text += " }";
        }
        return text;
    };
    EXPECT_NO_THROW(parseDocument(nested(100)));
    EXPECT_THROW(parseDocument(nested(5000)), ParseError);
}

TEST(ParseSchemaTest, PersonType)
{
    const auto defs = parseSchemaDocument(testing::readData("fig4.graphql"));
    ASSERT_EQ(defs.size(), 3u);
    const auto& person = std::get<ObjectDefAst>(defs[0]);
    EXPECT_EQ(person.name, "Person");
    ASSERT_EQ(person.fields.size(), 4u);
    EXPECT_EQ(person.fields[0].name, "name");
    EXPECT_EQ(person.fields[0].returnType, TypeRef::nonNull(TypeRef::named("String")));
    EXPECT_EQ(person.fields[1].returnType, TypeRef::named("Integer"));
    EXPECT_EQ(person.fields[2].name, "books");
    ASSERT_EQ(person.fields[2].arguments.size(), 1u);
    EXPECT_EQ(person.fields[2].arguments[0].name, "favourite");
    EXPECT_EQ(person.fields[2].arguments[0].type, TypeRef::named("Boolean"));
    EXPECT_EQ(person.fields[2].returnType, TypeRef::listOf(TypeRef::named("Book")));
    EXPECT_EQ(person.fields[3].returnType, TypeRef::listOf(TypeRef::named("Person")));
}

TEST(ParseSchemaTest, QueryType)
{
    const auto defs = parseSchemaDocument(testing::readData("fig4.graphql"));
    const auto& query = std::get<ObjectDefAst>(defs[2]);
    EXPECT_EQ(query.name, "Query");
    ASSERT_EQ(query.fields.size(), 3u);
    EXPECT_EQ(query.fields[0].name, "person");
    EXPECT_EQ(query.fields[0].arguments[0].type, TypeRef::nonNull(TypeRef::named("String")));
    EXPECT_EQ(query.fields[0].returnType, TypeRef::named("Person"));
    EXPECT_EQ(query.fields[1].name, "book");
    EXPECT_EQ(query.fields[1].returnType, TypeRef::named("Book"));
    EXPECT_EQ(query.fields[2].name, "books");
    EXPECT_EQ(query.fields[2].arguments[0].name, "filter");
    EXPECT_EQ(query.fields[2].returnType, TypeRef::listOf(TypeRef::named("Book")));
}

TEST(ParseSchemaTest, Enum)
{
    const auto defs = parseSchemaDocument("enum Color { RED GREEN }");
    ASSERT_EQ(defs.size(), 1u);
    const auto& color = std::get<EnumDefAst>(defs[0]);
    EXPECT_EQ(color.name, "Color");
    EXPECT_EQ(color.values, (std::vector<std::string>{"RED", "GREEN"}));
}

TEST(ParseSchemaTest, ListAndNonNullNesting)
{
    const auto fields = parseFieldBlock("a: [Book!]\nb: [Book]!\nc: [[Int!]!]");
    EXPECT_EQ(fields[0].returnType, TypeRef::listOf(TypeRef::nonNull(TypeRef::named("Book"))));
    EXPECT_EQ(fields[1].returnType, TypeRef::nonNull(TypeRef::listOf(TypeRef::named("Book"))));
    EXPECT_EQ(printTypeRef(fields[2].returnType), "[[Int!]!]");
    EXPECT_THROW(parseFieldBlock("a: Book!!"), ParseError);
    EXPECT_THROW(parseFieldBlock("a: [Book"), ParseError);
}

TEST(ParseSchemaTest, Descriptions)
{
    const auto defs = parseSchemaDocument("# A reader\n# of books\ntype Person {\n  # full name\n  name: String!\n\n"
                                          "  # detached\n\n  age: Integer # trailing\n}");
    const auto& person = std::get<ObjectDefAst>(defs[0]);
    EXPECT_EQ(person.description, std::optional<std::string>("A reader\nof books"));
    EXPECT_EQ(person.fields[0].description, std::optional<std::string>("full name"));
    EXPECT_FALSE(person.fields[1].description.has_value());
}

TEST(ParseSchemaTest, SchemaErrors)
{
    EXPECT_THROW(parseSchemaDocument("type A { }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("type A { x: Int x: Int }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("type A { x(a: Int, a: Int): Int }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("enum E { A A }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("enum E { true }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("interface A { x: Int }"), ParseError);
    EXPECT_THROW(parseSchemaDocument("type A { x Int }"), ParseError);
}

TEST(ParseFieldBlockTest, Examples)
{
    const auto two = parseFieldBlock("name: String!\nage: Integer");
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].name, "name");
    EXPECT_EQ(two[1].returnType, TypeRef::named("Integer"));

    const auto friends = parseFieldBlock("friends: [Person]");
    ASSERT_EQ(friends.size(), 1u);
    EXPECT_EQ(friends[0].returnType, TypeRef::listOf(TypeRef::named("Person")));

    try {
        parseFieldBlock("");
        FAIL() << "empty block parsed";
    } catch (const ParseError& e) {
        EXPECT_NE(e.message().find("at least one field required"), std::string::npos);
    }
}

} // namespace
} // namespace gql
