// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/store.h"

#include "gql/json.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gql {

void EntityStore::insert(const std::string& table, std::int64_t id, DataValue record, const std::string& pointer)
{
    auto& rows = _tables[table];
    if (!rows.emplace(id, std::move(record)).second) {
        throw FormatError(pointer, "duplicate id " + std::to_string(id) + " in table " + table);
    }
}

const EntityStore::Table* EntityStore::table(std::string_view name) const noexcept
{
    auto it = _tables.find(name);
    return it == _tables.end() ? nullptr : &it->second;
}

const DataValue* EntityStore::find(std::string_view table, std::int64_t id) const noexcept
{
    const Table* rows = this->table(table);
    if (!rows) {
        return nullptr;
    }
    auto it = rows->find(id);
    return it == rows->end() ? nullptr : &it->second;
}

const DataValue* EntityStore::findBy(std::string_view table, std::string_view field, const DataValue& value) const noexcept
{
    const Table* rows = this->table(table);
    if (!rows) {
        return nullptr;
    }
    for (const auto& [id, record] : *rows) {
        const DataValue* entry = record.find(field);
        if (entry && *entry == value) {
            return &record;
        }
    }
    return nullptr;
}

std::size_t EntityStore::size(std::string_view table) const noexcept
{
    const Table* rows = this->table(table);
    return rows ? rows->size() : 0;
}

namespace {

struct FieldRule {
    std::string_view name;
    enum { String, Integer, IdList } kind;
    bool required;
};

const std::vector<FieldRule>* rulesFor(std::string_view table)
{
    static const std::vector<FieldRule> person = {
        {"name", FieldRule::String, true},
        {"age", FieldRule::Integer, false},
        {"friends", FieldRule::IdList, false},
        {"books", FieldRule::IdList, false},
        {"favourites", FieldRule::IdList, false},
    };
    static const std::vector<FieldRule> book = {
        {"title", FieldRule::String, true},
        {"authors", FieldRule::IdList, false},
    };
    if (table == "person") {
        return &person;
    }
    if (table == "book") {
        return &book;
    }
    return nullptr;
}

void checkFlatValue(const Json& value, const std::string& pointer)
{
    if (value.is_object()) {
        throw FormatError(pointer, "nested objects are not allowed in records");
    }
    if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (value[i].is_object() || value[i].is_array()) {
                throw FormatError(pointer + "/" + std::to_string(i), "lists may only hold scalars");
            }
        }
    }
}

DataValue loadRecord(const std::string& table, const Json& json, const std::string& pointer, std::int64_t& id)
{
    if (!json.is_object()) {
        throw FormatError(pointer, "record must be an object");
    }
    auto idIt = json.find("id");
    if (idIt == json.end() || !idIt->is_number_integer()) {
        throw FormatError(pointer + "/id", "record needs an integer id");
    }
    id = idIt->get<std::int64_t>();

    DataValue record = ValueMap{};
    for (const auto& [key, value] : json.items()) {
        checkFlatValue(value, pointer + "/" + key);
        record.set(key, fromJson(value));
    }

    if (const auto* rules = rulesFor(table)) {
        for (const auto& rule : *rules) {
            const std::string fieldPointer = pointer + "/" + std::string(rule.name);
            auto it = json.find(std::string(rule.name));
            if (it == json.end() || it->is_null()) {
                if (rule.required) {
                    throw FormatError(fieldPointer, "missing required field " + std::string(rule.name));
                }
                if (rule.kind == FieldRule::IdList) {
                    record.set(std::string(rule.name), ValueList{});
                }
                continue;
            }
            bool ok = true;
            switch (rule.kind) {
            case FieldRule::String:
                ok = it->is_string();
                break;
            case FieldRule::Integer:
                ok = it->is_number_integer();
                break;
            case FieldRule::IdList:
                ok = it->is_array();
                for (std::size_t i = 0; ok && i < it->size(); ++i) {
                    if (!(*it)[i].is_number_integer()) {
                        throw FormatError(fieldPointer + "/" + std::to_string(i), "ids must be integers");
                    }
                }
                break;
            }
            if (!ok) {
                static constexpr std::string_view expected[] = {"a string", "an integer", "a list of integer ids"};
                throw FormatError(fieldPointer, std::string(rule.name) + " must be " + std::string(expected[rule.kind]));
            }
        }
    }
    return record;
}

std::string lowercase(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

/// Name or title argument first, then the id.
const DataValue* lookup(const EntityStore& store, std::string_view table, std::string_view keyField,
    const ResolveContext& ctx)
{
    if (const DataValue* key = ctx.arg(keyField); key && !key->isNull()) {
        if (const DataValue* record = store.findBy(table, keyField, *key)) {
            return record;
        }
    }
    if (ctx.id && ctx.id->isInt()) {
        return store.find(table, ctx.id->asInt());
    }
    return nullptr;
}

DataValue fieldOrNull(const DataValue& record, std::string_view field)
{
    const DataValue* value = record.find(field);
    return value ? *value : DataValue{};
}

} // namespace

EntityStore loadDataset(std::string_view jsonText)
{
    Json root;
    try {
        root = Json::parse(jsonText.begin(), jsonText.end());
    } catch (const Json::parse_error& e) {
        throw FormatError("", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw FormatError("", "dataset must be a JSON object of tables");
    }

    EntityStore store;
    for (const auto& [table, rows] : root.items()) {
        const std::string tablePointer = "/" + table;
        if (!rows.is_array()) {
            throw FormatError(tablePointer, "table must be an array of records");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string pointer = tablePointer + "/" + std::to_string(i);
            std::int64_t id = 0;
            DataValue record = loadRecord(table, rows[i], pointer, id);
            store.insert(table, id, std::move(record), pointer + "/id");
        }
    }
    return store;
}

EntityStore loadDatasetFile(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open dataset " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return loadDataset(buffer.str());
}

Resolver personTypeResolver(std::shared_ptr<const EntityStore> store)
{
    return [store = std::move(store)](const ResolveContext& ctx) -> std::optional<DataValue> {
        const DataValue* person = lookup(*store, "person", "name", ctx);
        if (!person) {
            return std::nullopt;
        }
        BookLists books{fieldOrNull(*person, "books").asList(), fieldOrNull(*person, "favourites").asList()};
        return DataValue(ValueMap{
            {"name", fieldOrNull(*person, "name")},
            {"age", fieldOrNull(*person, "age")},
            {"friends", fieldOrNull(*person, "friends")},
            {"books", Opaque(std::move(books))},
        });
    };
}

Resolver bookTypeResolver(std::shared_ptr<const EntityStore> store)
{
    return [store = std::move(store)](const ResolveContext& ctx) -> std::optional<DataValue> {
        const DataValue* book = lookup(*store, "book", "title", ctx);
        if (!book) {
            return std::nullopt;
        }
        return DataValue(ValueMap{
            {"title", fieldOrNull(*book, "title")},
            {"authors", fieldOrNull(*book, "authors")},
        });
    };
}

Resolver personBooksFieldResolver()
{
    return [](const ResolveContext& ctx) -> std::optional<DataValue> {
        const DataValue* books = ctx.parent ? ctx.parent->find("books") : nullptr;
        const BookLists* lists = books && books->isOpaque() ? books->asOpaque().get<BookLists>() : nullptr;
        if (!lists) {
            return std::nullopt;
        }
        const DataValue* favourite = ctx.arg("favourite");
        if (favourite && favourite->isBool() && favourite->asBool()) {
            return DataValue(lists->favourites);
        }
        return DataValue(lists->all);
    };
}

Resolver bookFilterResolver(std::shared_ptr<const EntityStore> store)
{
    return [store = std::move(store)](const ResolveContext& ctx) -> std::optional<DataValue> {
        const DataValue* filter = ctx.arg("filter");
        const std::string needle = filter && filter->isString() ? lowercase(filter->asString()) : std::string();
        ValueList ids;
        if (const auto* books = store->table("book")) {
            for (const auto& [id, record] : *books) {
                const DataValue* title = record.find("title");
                if (needle.empty() || (title && title->isString() && lowercase(title->asString()).find(needle) != std::string::npos)) {
                    ids.emplace_back(id);
                }
            }
        }
        return DataValue(std::move(ids));
    };
}

Schema bindExampleResolvers(Schema schema, std::shared_ptr<const EntityStore> store)
{
    for (std::string_view name : {"Person", "Book"}) {
        if (!schema.findObjectType(name)) {
            throw RegistrationError(RegistrationError::Kind::UnknownType, "no object type named " + std::string(name));
        }
    }
    schema.registerTypeResolver("Person", personTypeResolver(store));
    schema.registerFieldResolver("Person", "books", personBooksFieldResolver());
    schema.registerTypeResolver("Book", bookTypeResolver(store));
    if (const ObjectType* query = schema.findObjectType(Schema::kQueryTypeName); query && query->findField("books")) {
        schema.registerFieldResolver(Schema::kQueryTypeName, "books", bookFilterResolver(store));
    }
    return schema;
}

} // namespace gql
