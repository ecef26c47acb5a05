// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/execute.h"
#include "gql/json.h"
#include "gql/schema.h"
#include "gql/server.h"
#include "gql/store.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gql::testing {

inline std::string dataPath(const std::string& name)
{
    return std::string(GQL_DATA_DIR) + "/" + name;
}

inline std::string readData(const std::string& name)
{
    std::ifstream in(dataPath(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::shared_ptr<const EntityStore> exampleStore()
{
    return std::make_shared<const EntityStore>(loadDataset(readData("example.json")));
}

/// The example schema with every example resolver bound.
inline Schema exampleSchema()
{
    return bindExampleResolvers(loadSchema(readData("fig4.graphql")), exampleStore());
}

inline const Engine& exampleEngine()
{
    static const Engine engine = Engine::fromSources(readData("fig4.graphql"), readData("example.json"));
    return engine;
}

/// Serialized response for `query` against the example engine, parsed back.
inline Json runExample(const std::string& query)
{
    return Json::parse(exampleEngine().execute({query, std::nullopt}));
}

} // namespace gql::testing
