// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/cli.h"

#include "gql/execute.h"
#include "gql/json.h"
#include "gql/parser.h"
#include "gql/server.h"
#include "gql/validate.h"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace gql {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looksLikeSchema(std::string_view source)
{
    try {
        const auto tokens = tokenize(source);
        const Token& first = tokens.front();
        return first.kind == TokenKind::Name && (first.text == "type" || first.text == "enum");
    } catch (const ParseError&) {
        return false;
    }
}

int runParse(const std::string& file, bool forceSchema, std::ostream& out, std::ostream& err)
{
    const std::string source = readFile(file);
    try {
        if (forceSchema || looksLikeSchema(source)) {
            out << schemaDocumentToJson(parseSchemaDocument(source)).dump(2) << '\n';
        } else {
            out << documentToJson(parseDocument(source)).dump(2) << '\n';
        }
    } catch (const ParseError& e) {
        err << file << ":" << e.what() << '\n';
        return kFailed;
    }
    return kOk;
}

Schema loadSchemaFile(const std::string& path)
{
    const std::string sdl = readFile(path);
    try {
        return loadSchema(sdl);
    } catch (const ParseError& e) {
        throw IoError(path + ":" + e.what());
    } catch (const SchemaError& e) {
        std::string message = path + ": invalid schema";
        for (const auto& d : e.diagnostics()) {
            message += "\n  " + d.message;
        }
        throw IoError(message);
    }
}

int runValidate(const std::string& schemaPath, const std::string& queryFile, bool asJson, std::ostream& out,
    std::ostream& err)
{
    const Schema schema = loadSchemaFile(schemaPath);
    const std::string source = readFile(queryFile);
    std::vector<Diagnostic> diagnostics;
    try {
        diagnostics = validateDocument(schema, parseDocument(source));
    } catch (const ParseError& e) {
        err << queryFile << ":" << e.what() << '\n';
        return kFailed;
    }
    if (asJson) {
        out << diagnosticsToJson(diagnostics).dump(2) << '\n';
    } else {
        for (const auto& d : diagnostics) {
            std::string path;
            for (const auto& key : d.path) {
                path += path.empty() ? key : "." + key;
            }
            out << queryFile << ": error: " << path << ": " << d.message << '\n';
        }
    }
    return diagnostics.empty() ? kOk : kFailed;
}

int runExec(const std::string& schemaPath, const std::string& dataPath, const std::string& query,
    const std::optional<std::string>& operationName, std::ostream& out)
{
    const std::string sdl = readFile(schemaPath);
    const std::string dataset = readFile(dataPath);
    std::optional<Engine> engine;
    try {
        engine.emplace(Engine::fromSources(sdl, dataset));
    } catch (const StartupError& e) {
        throw IoError(e.what());
    }
    const Response response = executeQuery(engine->schema(), query,
        operationName ? std::optional<std::string_view>(*operationName) : std::nullopt);
    out << serializeResponse(response) << '\n';
    return response.errors.empty() ? kOk : kFailed;
}

} // namespace

int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"GraphQL query engine: parse, validate and execute queries, or serve them over HTTP", "gql"};
    app.require_subcommand(1);

    std::string parseFile;
    bool parseAsSchema = false;
    auto* parse = app.add_subcommand("parse", "Print the syntax tree of a query or schema file as JSON");
    parse->add_option("file", parseFile, "Query document or SDL file")->required();
    parse->add_flag("--schema", parseAsSchema, "Parse as SDL even if it does not start with type/enum");

    std::string validateSchemaPath;
    std::string validateFile;
    bool validateJson = false;
    auto* validate = app.add_subcommand("validate", "Check a query document against a schema");
    validate->add_option("--schema", validateSchemaPath, "SDL file")->required();
    validate->add_option("queryfile", validateFile, "Query document")->required();
    validate->add_flag("--json", validateJson, "Print diagnostics as JSON");

    std::string execSchemaPath;
    std::string execDataPath;
    std::string execQuery;
    std::string execFile;
    std::string execOperation;
    auto* exec = app.add_subcommand("exec", "Execute a query and print the response document");
    exec->add_option("--schema", execSchemaPath, "SDL file")->required();
    exec->add_option("--data", execDataPath, "Dataset JSON file")->required();
    auto* queryOpt = exec->add_option("--query", execQuery, "Query text");
    auto* fileOpt = exec->add_option("queryfile", execFile, "Query document file");
    queryOpt->excludes(fileOpt);
    fileOpt->excludes(queryOpt);
    exec->add_option("--operation", execOperation, "Operation to run when the document has several");

    ServerConfig config;
    std::string schemaPath;
    std::string dataPath;
    auto* serveCmd = app.add_subcommand("serve", "Serve the single POST endpoint over HTTP");
    serveCmd->add_option("--schema", schemaPath, "SDL file")->required();
    serveCmd->add_option("--data", dataPath, "Dataset JSON file")->required();
    serveCmd->add_option("--host", config.host, "Address to bind")->capture_default_str();
    serveCmd->add_option("--port", config.port, "Port to bind")->envname("GQL_PORT")->capture_default_str();
    serveCmd->add_option("--path", config.endpointPath, "Endpoint path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*parse) {
            return runParse(parseFile, parseAsSchema, out, err);
        }
        if (*validate) {
            return runValidate(validateSchemaPath, validateFile, validateJson, out, err);
        }
        if (*exec) {
            if (queryOpt->count() == 0 && fileOpt->count() == 0) {
                err << "exec: either --query or a query file is required\n";
                return kUsage;
            }
            const std::string query = queryOpt->count() ? execQuery : readFile(execFile);
            std::optional<std::string> operation;
            if (!execOperation.empty()) {
                operation = execOperation;
            }
            return runExec(execSchemaPath, execDataPath, query, operation, out);
        }
        if (*serveCmd) {
            config.schemaPath = schemaPath;
            config.dataPath = dataPath;
            serve(config, err);
            return kOk;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const StartupError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace gql
