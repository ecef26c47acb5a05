// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <any>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gql {

class DataValue;

struct EnumSymbol {
    std::string name;
    bool operator==(const EnumSymbol&) const = default;
};

/// Resolver-private payload that the engine carries but never inspects.
/// Copies share the payload; equality is identity.
class Opaque {
public:
    template <typename T>
    explicit Opaque(T payload) : _payload(std::make_shared<const std::any>(std::move(payload)))
    {
    }

    template <typename T>
    const T* get() const noexcept
    {
        return std::any_cast<T>(_payload.get());
    }

    bool operator==(const Opaque& other) const noexcept { return _payload == other._payload; }

private:
    std::shared_ptr<const std::any> _payload;
};

using ValueList = std::vector<DataValue>;
/// Insertion-ordered map.
using ValueMap = std::vector<std::pair<std::string, DataValue>>;

/// Dynamic value tree exchanged with resolvers and serialized as JSON.
class DataValue {
public:
    enum class Kind { Null, String, Int, Float, Bool, Enum, List, Map, Opaque };

    DataValue() = default;
    DataValue(std::nullptr_t) {}
    DataValue(std::string s) : _data(std::move(s)) {}
    DataValue(const char* s) : _data(std::string(s)) {}
    DataValue(std::int64_t i) : _data(i) {}
    DataValue(int i) : _data(static_cast<std::int64_t>(i)) {}
    DataValue(double d) : _data(d) {}
    DataValue(bool b) : _data(b) {}
    DataValue(EnumSymbol e) : _data(std::move(e)) {}
    DataValue(ValueList l) : _data(std::move(l)) {}
    DataValue(ValueMap m) : _data(std::move(m)) {}
    DataValue(Opaque o) : _data(std::move(o)) {}

    Kind kind() const noexcept { return static_cast<Kind>(_data.index()); }
    bool isNull() const noexcept { return kind() == Kind::Null; }
    bool isString() const noexcept { return kind() == Kind::String; }
    bool isInt() const noexcept { return kind() == Kind::Int; }
    bool isFloat() const noexcept { return kind() == Kind::Float; }
    bool isBool() const noexcept { return kind() == Kind::Bool; }
    bool isEnum() const noexcept { return kind() == Kind::Enum; }
    bool isList() const noexcept { return kind() == Kind::List; }
    bool isMap() const noexcept { return kind() == Kind::Map; }
    bool isOpaque() const noexcept { return kind() == Kind::Opaque; }
    /// Strings, numbers, booleans and enum symbols.
    bool isScalar() const noexcept;

    const std::string& asString() const { return std::get<std::string>(_data); }
    std::int64_t asInt() const { return std::get<std::int64_t>(_data); }
    double asFloat() const { return std::get<double>(_data); }
    bool asBool() const { return std::get<bool>(_data); }
    const EnumSymbol& asEnum() const { return std::get<EnumSymbol>(_data); }
    const ValueList& asList() const { return std::get<ValueList>(_data); }
    ValueList& asList() { return std::get<ValueList>(_data); }
    const ValueMap& asMap() const { return std::get<ValueMap>(_data); }
    ValueMap& asMap() { return std::get<ValueMap>(_data); }
    const Opaque& asOpaque() const { return std::get<Opaque>(_data); }

    /// Map lookup; nullptr when this is not a map or the key is absent.
    const DataValue* find(std::string_view key) const noexcept;

    /// Appends or replaces a map entry. Converts a Null value into an empty map.
    DataValue& set(std::string key, DataValue value);

    friend bool operator==(const DataValue& lhs, const DataValue& rhs) { return lhs._data == rhs._data; }

private:
    std::variant<std::monostate, std::string, std::int64_t, double, bool, EnumSymbol, ValueList, ValueMap, Opaque> _data;
};

std::string_view kindName(DataValue::Kind kind) noexcept;

/// Compact debug rendering; not the wire format.
std::string toDebugString(const DataValue& value);

} // namespace gql
