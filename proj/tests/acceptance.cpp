// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "gql/execute.h"
#include "gql/json.h"
#include "gql/parser.h"
#include "gql/server.h"
#include "gql/validate.h"

#include "support/fixtures.h"
#include "support/generators.h"
#include "support/oracle.h"

#include <httplib.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using namespace gql;
using gql::testing::readData;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

double millisSince(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json getAliceExpected()
{
    return Json::parse(R"({"data":{"person":{"name":"Alice","years":31,
        "books":[{"title":"Moby-Dick","authors":[{"name":"H. Melville"}]}]}}})");
}

Outcome goldenEndToEnd()
{
    Outcome o;
    const std::string sdl = readData("fig4.graphql");
    const std::string dataset = readData("example.json");
    const std::string query = readData("getAlice.graphql");
    const auto start = Clock::now();
    const Engine engine = Engine::fromSources(sdl, dataset);
    const std::string body = engine.execute({query, std::nullopt});
    const double elapsed = millisSince(start);
    o.require(Json::parse(body) == getAliceExpected(), "response differs: " + body);
    o.require(body == dumpCompact(getAliceExpected()), "key order differs: " + body);
    o.require(elapsed < 100.0, "took " + std::to_string(elapsed) + " ms");
    o.detail = o.ok ? std::to_string(elapsed) + " ms" : o.detail;
    return o;
}

Outcome aliasSemantics()
{
    Outcome o;
    const std::string aliased = readData("getAlice.graphql");
    std::string bare = aliased;
    bare.replace(bare.find("years: age"), std::string("years: age").size(), "age");
    const Json a = gql::testing::runExample(aliased)["data"]["person"];
    const Json b = gql::testing::runExample(bare)["data"]["person"];
    o.require(a.contains("years") && a["years"] == 31 && !a.contains("age"), "aliased: " + a.dump());
    o.require(b.contains("age") && b["age"] == 31 && !b.contains("years"), "bare: " + b.dump());
    Json renamed = a;
    renamed.erase("years");
    Json stripped = b;
    stripped.erase("age");
    o.require(renamed == stripped, "alias changed other fields");
    return o;
}

oracle::PersonQuery booksQuery(const std::string& who, std::optional<bool> favourite)
{
    oracle::PersonField books{oracle::PersonField::Books, std::nullopt, favourite, {},
        {{oracle::BookField::Title, std::nullopt, {}}}};
    return {who, {books}};
}

Outcome favouriteFiltering(const oracle::Evaluator& evaluator)
{
    Outcome o;
    auto check = [&](const oracle::PersonQuery& q, const Json& expectedData, const Json& expectedErrorPaths) {
        const Json response = gql::testing::runExample(oracle::queryText(q));
        const Json normalized = oracle::normalize(response);
        o.require(normalized == evaluator.evaluate(q), "oracle mismatch for " + oracle::queryText(q));
        o.require(response["data"] == expectedData, "data " + response["data"].dump());
        o.require(normalized["errors"] == expectedErrorPaths, "errors " + normalized["errors"].dump());
    };
    check(booksQuery("Alice", true), Json::parse(R"({"person":{"books":[{"title":"Moby-Dick"}]}})"),
        Json::array());
    check(booksQuery("Bob", true), Json::parse(R"({"person":{"books":[{"title":"Robinson Crusoe"},null]}})"),
        Json::parse(R"([["person","books",1]])"));
    check(booksQuery("Bob", std::nullopt), Json::parse(R"({"person":{"books":[{"title":"Moby-Dick"}]}})"),
        Json::array());
    return o;
}

Outcome validationSuite()
{
    Outcome o;
    const Schema schema = loadSchema(readData("fig4.graphql"));
    auto diagnose = [&](const std::string& q) { return validateDocument(schema, parseDocument(q)); };
    using Path = std::vector<std::string>;
    o.require(diagnose(readData("getAlice.graphql")).empty(), "getAlice rejected");
    const auto unknown = diagnose(R"({ person(name:"Alice"){ salary } })");
    o.require(unknown.size() == 1 && unknown[0].message == "unknown field salary on Person"
            && unknown[0].path == Path{"person", "salary"},
        "unknown field");
    const auto missing = diagnose("{ person { name } }");
    o.require(missing.size() == 1 && missing[0].message == "missing required argument name"
            && missing[0].path == Path{"person", "name"},
        "missing argument");
    const auto composite = diagnose(R"({ person(name:"Alice") })");
    o.require(composite.size() == 1 && composite[0].message == "object field requires selection set"
            && composite[0].path == Path{"person"},
        "composite leaf");
    return o;
}

Outcome schemaGate()
{
    Outcome o;
    const std::string sdl = readData("fig4.graphql");
    try {
        const Schema schema = loadSchema(sdl);
        o.require(validateSchema(schema).empty(), "diagnostics on the example schema");
    } catch (const std::exception& e) {
        o.require(false, std::string("example schema rejected: ") + e.what());
    }
    auto failsWith = [](const std::string& text, SchemaErrorKind kind) {
        try {
            loadSchema(text);
        } catch (const SchemaError& e) {
            return e.has(kind);
        }
        return false;
    };
    std::string noQuery = sdl.substr(0, sdl.find("type Query"));
    o.require(failsWith(noQuery, SchemaErrorKind::MissingQueryRoot), "missing Query accepted");
    o.require(failsWith(sdl + "\ntype Zoo { pet: Animal }\n", SchemaErrorKind::UnresolvedType),
        "undefined type accepted");
    return o;
}

Outcome parserRoundTrip()
{
    Outcome o;
    gql::testing::DocumentGenerator gen(1);
    std::mt19937 rng(2);
    static const char* separators[] = {" ", ",", "\n", "\t", " # comment\n", ",\n,"};
    std::size_t count = 0;
    for (; count < 1000 && o.ok; ++count) {
        const Document doc = gen.document(6, 5);
        const std::string printed = printDocument(doc);
        const Document once = parseDocument(printed);
        o.require(once == doc && parseDocument(printDocument(once)) == once, "round trip: " + printed);
        const auto tokens = tokenize(printed);
        std::string padded;
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            padded += tokens[i].text;
            padded += separators[std::uniform_int_distribution<std::size_t>(0, std::size(separators) - 1)(rng)];
        }
        o.require(parseDocument(padded) == doc, "separators changed: " + padded);
    }
    o.detail = o.ok ? std::to_string(count) + " documents" : o.detail;
    return o;
}

std::vector<oracle::PersonQuery> enumerateQueries()
{
    using oracle::BookField;
    using oracle::PersonField;
    const std::vector<std::vector<BookField>> bookShapes = {
        {{BookField::Title, std::nullopt, {}}},
        {{BookField::Authors, std::nullopt, {{PersonField::Name, std::nullopt, std::nullopt, {}, {}}}}},
        {{BookField::Title, std::nullopt, {}},
            {BookField::Authors, std::nullopt, {{PersonField::Name, std::nullopt, std::nullopt, {}, {}}}}},
        {{BookField::Authors, std::nullopt, {{PersonField::Name, std::nullopt, std::nullopt, {}, {}}}},
            {BookField::Title, std::nullopt, {}}},
    };
    // Every field of the root person, each with its possible shapes.
    std::vector<std::vector<PersonField>> options = {
        {{PersonField::Name, std::nullopt, std::nullopt, {}, {}}},
        {{PersonField::Age, std::nullopt, std::nullopt, {}, {}}},
        {{PersonField::Friends, std::nullopt, std::nullopt, {{PersonField::Name, std::nullopt, std::nullopt, {}, {}}},
            {}}},
        {},
    };
    for (std::optional<bool> favourite : {std::optional<bool>(true), std::optional<bool>(false), std::optional<bool>()}) {
        for (const auto& shape : bookShapes) {
            options[3].push_back({PersonField::Books, std::nullopt, favourite, {}, shape});
        }
    }

    std::vector<oracle::PersonQuery> queries;
    for (const char* who : {"Alice", "Bob"}) {
        for (unsigned mask = 1; mask < 16; ++mask) {
            std::vector<std::vector<PersonField>> chosen = {{}};
            for (unsigned bit = 0; bit < 4; ++bit) {
                if (!(mask & (1u << bit))) {
                    continue;
                }
                std::vector<std::vector<PersonField>> next;
                for (const auto& prefix : chosen) {
                    for (const auto& option : options[bit]) {
                        auto extended = prefix;
                        extended.push_back(option);
                        next.push_back(std::move(extended));
                    }
                }
                chosen = std::move(next);
            }
            for (auto& fields : chosen) {
                queries.push_back({who, fields});
                if (fields.size() > 1) {
                    std::reverse(fields.begin(), fields.end());
                    queries.push_back({who, fields});
                }
            }
        }
    }
    return queries;
}

Outcome oracleEquivalence(const oracle::Evaluator& evaluator)
{
    Outcome o;
    const Engine& engine = gql::testing::exampleEngine();
    const auto queries = enumerateQueries();
    const auto start = Clock::now();
    for (const auto& q : queries) {
        const std::string text = oracle::queryText(q);
        const Json actual = oracle::normalize(Json::parse(engine.execute({text, std::nullopt})));
        const Json expected = evaluator.evaluate(q);
        o.require(actual == expected, text + " gave " + actual.dump() + ", expected " + expected.dump());
    }
    const double elapsed = millisSince(start);
    o.require(elapsed < 10000.0, "took " + std::to_string(elapsed) + " ms");
    o.require(queries.size() >= 200, "only " + std::to_string(queries.size()) + " queries");
    o.detail = o.ok ? std::to_string(queries.size()) + " queries in " + std::to_string(elapsed) + " ms" : o.detail;
    return o;
}

std::size_t nestingDepth(const Json& person)
{
    if (!person.is_object() || !person.contains("friends")) {
        return 0;
    }
    std::size_t deepest = 0;
    for (const auto& f : person["friends"]) {
        deepest = std::max(deepest, nestingDepth(f));
    }
    return deepest + 1;
}

Outcome recursionTermination()
{
    Outcome o;
    const Json response =
        gql::testing::runExample(R"({ person(name:"Alice"){ friends { friends { friends { name } } } } })");
    o.require(!response.contains("errors"), "errors: " + response.dump());
    const Json& alice = response["data"]["person"];
    o.require(nestingDepth(alice) == 3, "depth " + std::to_string(nestingDepth(alice)));
    o.require(alice["friends"][0]["friends"][0]["friends"][0] == Json::parse(R"({"name":"Alice"})"),
        "innermost " + alice.dump());
    return o;
}

Outcome introspection()
{
    Outcome o;
    const Json response = gql::testing::runExample(R"({ __type(name:"Person"){ name fields { name type } } })");
    const Json expected = Json::parse(R"({"data":{"__type":{"name":"Person","fields":[
        {"name":"name","type":"String!"},{"name":"age","type":"Integer"},
        {"name":"books","type":"[Book]"},{"name":"friends","type":"[Person]"}]}}})");
    o.require(response == expected, response.dump());
    return o;
}

Outcome wireConformance()
{
    Outcome o;
    auto engine = std::make_shared<const Engine>(Engine::fromFiles(
        gql::testing::dataPath("fig4.graphql"), gql::testing::dataPath("example.json")));
    HttpServer server(engine, "/graphql");
    const int port = server.bind("127.0.0.1", 0);
    std::thread listener([&] { server.listen(); });
    server.waitUntilReady();

    httplib::Client client("127.0.0.1", port);
    client.set_read_timeout(5, 0);
    const std::string body = dumpCompact(Json{{"query", readData("getAlice.graphql")}});
    std::optional<std::string> first;
    for (int i = 0; i < 5 && o.ok; ++i) {
        auto res = client.Post("/graphql", body, "application/json");
        if (!res) {
            o.require(false, "no response");
            break;
        }
        o.require(res->status == 200, "status " + std::to_string(res->status));
        o.require(res->get_header_value("Content-Type") == "application/json",
            "content type " + res->get_header_value("Content-Type"));
        o.require(Json::parse(res->body) == getAliceExpected(), "body " + res->body);
        if (!first) {
            first = res->body;
        }
        o.require(res->body == *first, "body changed between requests");
    }
    server.stop();
    listener.join();
    return o;
}

} // namespace

int main()
{
    const oracle::Evaluator evaluator(readData("example.json"));
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden end-to-end", goldenEndToEnd},
        {"alias semantics", aliasSemantics},
        {"favourite filtering", [&] { return favouriteFiltering(evaluator); }},
        {"validation suite", validationSuite},
        {"schema gate", schemaGate},
        {"parser round trip", parserRoundTrip},
        {"oracle equivalence", [&] { return oracleEquivalence(evaluator); }},
        {"recursion termination", recursionTermination},
        {"introspection", introspection},
        {"wire conformance", wireConformance},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!outcome.detail.empty()) {
            std::cout << " (" << outcome.detail << ")";
        }
        std::cout << '\n';
        failures += outcome.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
