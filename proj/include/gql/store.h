// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gql/schema.h"
#include "gql/value.h"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gql {

/// Dataset problem, located by a JSON pointer into the source document.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string pointer, const std::string& message)
        : std::runtime_error(pointer + ": " + message), _pointer(std::move(pointer))
    {
    }

    const std::string& pointer() const noexcept { return _pointer; }

private:
    std::string _pointer;
};

/// What a person resolver stores under `books` until the field resolver
/// picks one of the two lists.
struct BookLists {
    ValueList all;
    ValueList favourites;
};

/// In-memory tables of flat records keyed by integer id. Read-only once
/// loaded.
class EntityStore {
public:
    using Table = std::map<std::int64_t, DataValue>;

    /// Throws FormatError on a duplicate id.
    void insert(const std::string& table, std::int64_t id, DataValue record, const std::string& pointer = {});

    const Table* table(std::string_view name) const noexcept;
    const DataValue* find(std::string_view table, std::int64_t id) const noexcept;
    /// First record (by id) whose `field` equals `value`.
    const DataValue* findBy(std::string_view table, std::string_view field, const DataValue& value) const noexcept;
    std::size_t size(std::string_view table) const noexcept;

private:
    std::map<std::string, Table, std::less<>> _tables;
};

/// Loads the JSON dataset format:
///   {"person": [{"id":1,"name":"Alice","age":31,"friends":[1,2],"books":[2],"favourites":[2]}, ...],
///    "book":   [{"id":1,"title":"Robinson Crusoe","authors":[4]}, ...]}
/// Ids referenced from lists may dangle. Throws FormatError.
EntityStore loadDataset(std::string_view jsonText);
EntityStore loadDatasetFile(const std::filesystem::path& path);

/// Person by `name` argument, falling back to the id. The result carries
/// `books` as an Opaque BookLists for personBooksFieldResolver.
Resolver personTypeResolver(std::shared_ptr<const EntityStore> store);

/// Book by `title` argument, falling back to the id.
Resolver bookTypeResolver(std::shared_ptr<const EntityStore> store);

/// Picks favourites when `favourite: true`, otherwise all books.
Resolver personBooksFieldResolver();

/// Ids of books whose title contains `filter`, ignoring ASCII case; all
/// books without a filter.
Resolver bookFilterResolver(std::shared_ptr<const EntityStore> store);

/// Binds Person, Person.books and Book, plus Query.books when declared.
/// Throws RegistrationError; the input schema is left untouched on error.
Schema bindExampleResolvers(Schema schema, std::shared_ptr<const EntityStore> store);

} // namespace gql
