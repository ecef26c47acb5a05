// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/schema.h"
#include "gql/store.h"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace gql {

struct ServerConfig {
    std::filesystem::path schemaPath;
    std::filesystem::path dataPath;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string endpointPath = "/graphql";
};

/// Body of a POST to the endpoint: `{"query": "...", "operationName": "..."}`.
struct WireRequest {
    std::string query;
    std::optional<std::string> operationName;
};

struct HttpReply {
    int status = 200;
    std::string body;
    static constexpr std::string_view kContentType = "application/json";
};

/// Malformed transport body (not JSON, no `query`).
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad schema or dataset, or the listener could not bind.
class StartupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws TransportError.
WireRequest parseWireRequest(std::string_view body);

/// A schema with the example resolvers bound to a loaded store. Immutable,
/// so one engine serves any number of concurrent requests.
class Engine {
public:
    Engine(Schema schema, std::shared_ptr<const EntityStore> store);

    /// Loads SDL and dataset text. Throws StartupError.
    static Engine fromSources(std::string_view sdl, std::string_view dataset);
    static Engine fromFiles(const std::filesystem::path& schemaPath, const std::filesystem::path& dataPath);

    const Schema& schema() const noexcept { return _schema; }
    const EntityStore& store() const noexcept { return *_store; }

    /// Parse, validate, execute; the serialized response document.
    std::string execute(const WireRequest& request) const;

private:
    Schema _schema;
    std::shared_ptr<const EntityStore> _store;
};

/// Status 200 for every well-formed request, GraphQL errors included;
/// 400 for malformed bodies.
HttpReply handleRequest(const Engine& engine, std::string_view body);

/// The single POST endpoint on top of cpp-httplib. Other methods on the
/// endpoint get 405.
class HttpServer {
public:
    HttpServer(std::shared_ptr<const Engine> engine, std::string endpointPath);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port; throws StartupError.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    void listen();
    void stop();
    void waitUntilReady() const;

private:
    std::shared_ptr<const Engine> _engine;
    std::string _endpointPath;
    std::unique_ptr<httplib::Server> _server;
};

/// Loads everything, binds, and serves until SIGINT or SIGTERM. Throws
/// StartupError before binding when inputs are bad.
void serve(const ServerConfig& config, std::ostream& log);

} // namespace gql
