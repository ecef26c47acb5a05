// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/ast.h"

#include <stdexcept>

namespace gql {

bool isValidName(std::string_view name) noexcept
{
    if (name.empty()) {
        return false;
    }
    auto isStart = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    if (!isStart(name.front())) {
        return false;
    }
    for (char c : name.substr(1)) {
        if (!isStart(c) && !(c >= '0' && c <= '9')) {
            return false;
        }
    }
    return true;
}

TypeRef::TypeRef(Kind kind, std::string name, std::shared_ptr<const TypeRef> inner)
    : _kind(kind), _name(std::move(name)), _inner(std::move(inner))
{
}

TypeRef TypeRef::named(std::string name)
{
    if (!isValidName(name)) {
        throw std::invalid_argument("invalid type name: " + name);
    }
    return TypeRef(Kind::Named, std::move(name), nullptr);
}

TypeRef TypeRef::listOf(TypeRef inner)
{
    return TypeRef(Kind::List, {}, std::make_shared<const TypeRef>(std::move(inner)));
}

TypeRef TypeRef::nonNull(TypeRef inner)
{
    if (inner.isNonNull()) {
        throw std::invalid_argument("non-null type cannot wrap another non-null type");
    }
    return TypeRef(Kind::NonNull, {}, std::make_shared<const TypeRef>(std::move(inner)));
}

const std::string& TypeRef::name() const
{
    if (_kind != Kind::Named) {
        throw std::logic_error("TypeRef::name on a wrapper type");
    }
    return _name;
}

const TypeRef& TypeRef::inner() const
{
    if (_kind == Kind::Named) {
        throw std::logic_error("TypeRef::inner on a named type");
    }
    return *_inner;
}

const std::string& TypeRef::coreName() const
{
    const TypeRef* current = this;
    while (!current->isNamed()) {
        current = current->_inner.get();
    }
    return current->_name;
}

bool operator==(const TypeRef& lhs, const TypeRef& rhs)
{
    if (lhs._kind != rhs._kind) {
        return false;
    }
    if (lhs._kind == TypeRef::Kind::Named) {
        return lhs._name == rhs._name;
    }
    return *lhs._inner == *rhs._inner;
}

const LiteralValue* FieldSelection::findArgument(std::string_view argName) const noexcept
{
    for (const auto& [name, value] : arguments) {
        if (name == argName) {
            return &value;
        }
    }
    return nullptr;
}

const std::string& definitionName(const TypeDefinitionAst& def) noexcept
{
    return std::visit([](const auto& d) -> const std::string& { return d.name; }, def);
}

std::string printTypeRef(const TypeRef& type)
{
    switch (type.kind()) {
    case TypeRef::Kind::Named:
        return type.name();
    case TypeRef::Kind::List:
        return "[" + printTypeRef(type.inner()) + "]";
    case TypeRef::Kind::NonNull:
        return printTypeRef(type.inner()) + "!";
    }
    return {};
}

std::string printStringLiteral(std::string_view text)
{
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
                out += "\\u00";
                out.push_back(hex[(static_cast<unsigned char>(c) >> 4) & 0xf]);
                out.push_back(hex[static_cast<unsigned char>(c) & 0xf]);
            } else {
                out.push_back(c);
            }
        }
    }
    out.push_back('"');
    return out;
}

std::string printLiteral(const LiteralValue& value)
{
    struct Printer {
        std::string operator()(const NullLiteral&) const { return "null"; }
        std::string operator()(const std::string& s) const { return printStringLiteral(s); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const EnumLiteral& e) const { return e.name; }
    };
    return std::visit(Printer{}, value);
}

namespace {

void printSelections(std::string& out, const std::vector<FieldSelection>& selections, std::size_t depth)
{
    out += "{\n";
    for (const auto& field : selections) {
        out.append((depth + 1) * 2, ' ');
        if (field.alias) {
            out += *field.alias;
            out += ": ";
        }
        out += field.name;
        if (!field.arguments.empty()) {
            out.push_back('(');
            bool first = true;
            for (const auto& [name, value] : field.arguments) {
                if (!first) {
                    out += ", ";
                }
                first = false;
                out += name;
                out += ": ";
                out += printLiteral(value);
            }
            out.push_back(')');
        }
        if (!field.selections.empty()) {
            out.push_back(' ');
            printSelections(out, field.selections, depth + 1);
        }
        out.push_back('\n');
    }
    out.append(depth * 2, ' ');
    out.push_back('}');
}

void printDescription(std::string& out, const std::optional<std::string>& description, std::size_t indent)
{
    if (!description) {
        return;
    }
    std::size_t start = 0;
    while (true) {
        auto end = description->find('\n', start);
        out.append(indent, ' ');
        out += "# ";
        out += description->substr(start, end == std::string::npos ? std::string::npos : end - start);
        out.push_back('\n');
        if (end == std::string::npos) {
            break;
        }
        start = end + 1;
    }
}

} // namespace

std::string printDocument(const Document& doc)
{
    std::string out;
    bool first = true;
    for (const auto& op : doc.operations) {
        if (!first) {
            out += "\n\n";
        }
        first = false;
        if (op.name) {
            out += "query ";
            out += *op.name;
            out.push_back(' ');
        }
        printSelections(out, op.selections, 0);
    }
    return out;
}

std::string printSchemaDocument(const std::vector<TypeDefinitionAst>& defs)
{
    std::string out;
    bool first = true;
    for (const auto& def : defs) {
        if (!first) {
            out += "\n";
        }
        first = false;
        if (const auto* object = std::get_if<ObjectDefAst>(&def)) {
            printDescription(out, object->description, 0);
            out += "type " + object->name + " {\n";
            for (const auto& field : object->fields) {
                printDescription(out, field.description, 2);
                out += "  " + field.name;
                if (!field.arguments.empty()) {
                    out.push_back('(');
                    for (std::size_t i = 0; i < field.arguments.size(); ++i) {
                        if (i > 0) {
                            out += ", ";
                        }
                        out += field.arguments[i].name + ": " + printTypeRef(field.arguments[i].type);
                    }
                    out.push_back(')');
                }
                out += ": " + printTypeRef(field.returnType) + "\n";
            }
            out += "}\n";
        } else {
            const auto& enumDef = std::get<EnumDefAst>(def);
            printDescription(out, enumDef.description, 0);
            out += "enum " + enumDef.name + " {\n";
            for (const auto& value : enumDef.values) {
                out += "  " + value + "\n";
            }
            out += "}\n";
        }
    }
    return out;
}

} // namespace gql
