// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/server.h"

#include "gql/execute.h"
#include "gql/json.h"
#include "gql/parser.h"

#include <httplib.h>

#include <csignal>
#include <fstream>
#include <ostream>
#include <pthread.h>
#include <sstream>
#include <thread>

namespace gql {
namespace {

std::string readFile(const std::filesystem::path& path, const char* what)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StartupError(std::string("cannot read ") + what + " file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string transportErrorBody(const std::string& message)
{
    Json body = Json::object();
    body["errors"] = Json::array({Json{{"message", message}}});
    return dumpCompact(body);
}

} // namespace

WireRequest parseWireRequest(std::string_view body)
{
    Json json;
    try {
        json = Json::parse(body.begin(), body.end());
    } catch (const Json::parse_error&) {
        throw TransportError("request body is not valid JSON");
    }
    if (!json.is_object()) {
        throw TransportError("request body must be a JSON object");
    }
    auto query = json.find("query");
    if (query == json.end() || !query->is_string()) {
        throw TransportError("request body needs a string \"query\"");
    }
    WireRequest request{query->get<std::string>(), std::nullopt};
    if (request.query.empty()) {
        throw TransportError("\"query\" must not be empty");
    }
    if (auto name = json.find("operationName"); name != json.end() && !name->is_null()) {
        if (!name->is_string()) {
            throw TransportError("\"operationName\" must be a string");
        }
        request.operationName = name->get<std::string>();
    }
    return request;
}

Engine::Engine(Schema schema, std::shared_ptr<const EntityStore> store)
    : _schema(bindExampleResolvers(std::move(schema), store)), _store(std::move(store))
{
}

Engine Engine::fromSources(std::string_view sdl, std::string_view dataset)
{
    Schema schema;
    try {
        schema = loadSchema(sdl);
    } catch (const ParseError& e) {
        throw StartupError(std::string("schema parse error at ") + e.what());
    } catch (const SchemaError& e) {
        throw StartupError(std::string("invalid schema: ") + e.what());
    }
    std::shared_ptr<const EntityStore> store;
    try {
        store = std::make_shared<const EntityStore>(loadDataset(dataset));
    } catch (const FormatError& e) {
        throw StartupError(std::string("invalid dataset: ") + e.what());
    }
    try {
        return Engine(std::move(schema), std::move(store));
    } catch (const RegistrationError& e) {
        throw StartupError(std::string("cannot bind resolvers: ") + e.what());
    }
}

Engine Engine::fromFiles(const std::filesystem::path& schemaPath, const std::filesystem::path& dataPath)
{
    const std::string sdl = readFile(schemaPath, "schema");
    const std::string dataset = readFile(dataPath, "dataset");
    return fromSources(sdl, dataset);
}

std::string Engine::execute(const WireRequest& request) const
{
    std::optional<std::string_view> operationName;
    if (request.operationName) {
        operationName = *request.operationName;
    }
    return serializeResponse(executeQuery(_schema, request.query, operationName));
}

HttpReply handleRequest(const Engine& engine, std::string_view body)
{
    WireRequest request;
    try {
        request = parseWireRequest(body);
    } catch (const TransportError& e) {
        return {400, transportErrorBody(e.what())};
    }
    return {200, engine.execute(request)};
}

HttpServer::HttpServer(std::shared_ptr<const Engine> engine, std::string endpointPath)
    : _engine(std::move(engine)), _endpointPath(std::move(endpointPath)), _server(std::make_unique<httplib::Server>())
{
    const std::string contentType(HttpReply::kContentType);
    _server->Post(_endpointPath, [this, contentType](const httplib::Request& req, httplib::Response& res) {
        HttpReply reply = handleRequest(*_engine, req.body);
        res.status = reply.status;
        res.set_content(reply.body, contentType);
    });
    auto notAllowed = [contentType](const httplib::Request&, httplib::Response& res) {
        res.status = 405;
        res.set_header("Allow", "POST");
        res.set_content(transportErrorBody("only POST is supported"), contentType);
    };
    _server->Get(_endpointPath, notAllowed);
    _server->Put(_endpointPath, notAllowed);
    _server->Patch(_endpointPath, notAllowed);
    _server->Delete(_endpointPath, notAllowed);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port)
{
    if (port == 0) {
        const int bound = _server->bind_to_any_port(host);
        if (bound < 0) {
            throw StartupError("cannot bind to " + host);
        }
        return bound;
    }
    if (!_server->bind_to_port(host, port)) {
        throw StartupError("cannot bind to " + host + ":" + std::to_string(port));
    }
    return port;
}

void HttpServer::listen()
{
    _server->listen_after_bind();
}

void HttpServer::stop()
{
    _server->stop();
}

void HttpServer::waitUntilReady() const
{
    _server->wait_until_ready();
}

void serve(const ServerConfig& config, std::ostream& log)
{
    auto engine = std::make_shared<const Engine>(Engine::fromFiles(config.schemaPath, config.dataPath));

    // Block the shutdown signals everywhere; a dedicated thread waits for them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    HttpServer server(engine, config.endpointPath);
    const int port = server.bind(config.host, config.port);
    log << "listening on http://" << config.host << ":" << port << config.endpointPath << std::endl;

    std::thread waiter([&] {
        int received = 0;
        sigwait(&signals, &received);
        server.stop();
    });
    server.listen();
    // listen() may also end without a signal; wake the waiter.
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    log << "stopped" << std::endl;
}

} // namespace gql
