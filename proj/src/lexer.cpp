// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/parser.h"

#include <charconv>

namespace gql {

std::string_view tokenKindName(TokenKind kind) noexcept
{
    switch (kind) {
    case TokenKind::Name:
        return "name";
    case TokenKind::String:
        return "string";
    case TokenKind::Int:
        return "integer";
    case TokenKind::Punctuator:
        return "punctuator";
    case TokenKind::EndOfFile:
        return "end of input";
    }
    return "token";
}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::optional<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
    , _message(std::move(message))
    , _line(line)
    , _column(column)
    , _expected(std::move(expected))
{
}

namespace {

bool isNameStart(char c) noexcept
{
    return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool isDigit(char c) noexcept
{
    return c >= '0' && c <= '9';
}

bool isPunctuator(char c) noexcept
{
    switch (c) {
    case '{':
    case '}':
    case '(':
    case ')':
    case '[':
    case ']':
    case ':':
    case '!':
        return true;
    default:
        return false;
    }
}

void appendUtf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : _src(source) {}

    std::vector<Token> run()
    {
        std::vector<Token> tokens;
        while (true) {
            skipIgnored();
            if (_pos >= _src.size()) {
                tokens.push_back(makeToken(TokenKind::EndOfFile, _pos, _line, _column));
                return tokens;
            }
            tokens.push_back(next());
        }
    }

private:
    Token makeToken(TokenKind kind, std::size_t start, std::size_t line, std::size_t column)
    {
        Token token{kind, std::string(_src.substr(start, _pos - start)), line, column, {}, {}};
        if (_hasPendingComment) {
            token.leadingComment = std::move(_pendingComment);
            _pendingComment.clear();
            _hasPendingComment = false;
        }
        _lastTokenLine = line;
        _lineHasContent = true;
        return token;
    }

    void newline()
    {
        if (!_lineHasContent) {
            // A blank line detaches earlier comments from the next token.
            _pendingComment.clear();
            _hasPendingComment = false;
        }
        ++_line;
        _column = 1;
        _lineHasContent = false;
    }

    void skipIgnored()
    {
        while (_pos < _src.size()) {
            char c = _src[_pos];
            if (c == ' ' || c == '\t' || c == ',') {
                ++_pos;
                ++_column;
            } else if (c == '\n') {
                ++_pos;
                newline();
            } else if (c == '\r') {
                ++_pos;
                if (_pos < _src.size() && _src[_pos] == '\n') {
                    ++_pos;
                }
                newline();
            } else if (_src.substr(_pos, 3) == "\xEF\xBB\xBF") {
                // Byte order marks are ignored wherever they appear.
                _pos += 3;
                ++_column;
            } else if (c == '#') {
                std::size_t start = _pos + 1;
                while (_pos < _src.size() && _src[_pos] != '\n' && _src[_pos] != '\r') {
                    ++_pos;
                }
                _column += _pos - start + 1;
                if (_lastTokenLine != _line) {
                    std::string_view text = _src.substr(start, _pos - start);
                    if (!text.empty() && text.front() == ' ') {
                        text.remove_prefix(1);
                    }
                    if (_hasPendingComment) {
                        _pendingComment.push_back('\n');
                    }
                    _pendingComment.append(text);
                    _hasPendingComment = true;
                }
                _lineHasContent = true;
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message, std::size_t line, std::size_t column)
    {
        throw ParseError(message, line, column);
    }

    Token next()
    {
        const std::size_t start = _pos;
        const std::size_t line = _line;
        const std::size_t column = _column;
        const char c = _src[_pos];

        if (isPunctuator(c)) {
            ++_pos;
            ++_column;
            return makeToken(TokenKind::Punctuator, start, line, column);
        }
        if (isNameStart(c)) {
            while (_pos < _src.size() && (isNameStart(_src[_pos]) || isDigit(_src[_pos]))) {
                ++_pos;
            }
            _column += _pos - start;
            return makeToken(TokenKind::Name, start, line, column);
        }
        if (c == '-' || isDigit(c)) {
            return lexInt(start, line, column);
        }
        if (c == '"') {
            return lexString(start, line, column);
        }
        if (c == '.' && _src.substr(_pos, 3) == "...") {
            fail("fragment spreads are not supported", line, column);
        }
        if (static_cast<unsigned char>(c) < 0x20) {
            fail("illegal control character", line, column);
        }
        std::size_t len = 1;
        const auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xF0) {
            len = 4;
        } else if (lead >= 0xE0) {
            len = 3;
        } else if (lead >= 0xC0) {
            len = 2;
        }
        fail("illegal character '" + std::string(_src.substr(_pos, len)) + "'", line, column);
    }

    Token lexInt(std::size_t start, std::size_t line, std::size_t column)
    {
        if (_src[_pos] == '-') {
            ++_pos;
            if (_pos >= _src.size() || !isDigit(_src[_pos])) {
                fail("expected digit after '-'", line, column);
            }
        }
        const std::size_t digitsStart = _pos;
        while (_pos < _src.size() && isDigit(_src[_pos])) {
            ++_pos;
        }
        if (_src[digitsStart] == '0' && _pos - digitsStart > 1) {
            fail("integer literal must not have leading zeros", line, column);
        }
        if (_pos < _src.size()) {
            char after = _src[_pos];
            if (after == '.' || after == 'e' || after == 'E') {
                fail("float literals are not supported", line, column);
            }
            if (isNameStart(after)) {
                fail("invalid character after integer literal", line, column + (_pos - start));
            }
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(_src.data() + start, _src.data() + _pos, value);
        if (ec != std::errc()) {
            fail("integer literal out of range", line, column);
        }
        _column += _pos - start;
        return makeToken(TokenKind::Int, start, line, column);
    }

    Token lexString(std::size_t start, std::size_t line, std::size_t column)
    {
        if (_src.substr(_pos, 3) == "\"\"\"") {
            fail("block strings are not supported", line, column);
        }
        ++_pos;
        std::string value;
        while (true) {
            if (_pos >= _src.size() || _src[_pos] == '\n' || _src[_pos] == '\r') {
                fail("unterminated string", line, column);
            }
            char c = _src[_pos];
            if (c == '"') {
                ++_pos;
                break;
            }
            if (c == '\\') {
                const std::size_t escapeColumn = column + (_pos - start);
                if (_pos + 1 >= _src.size()) {
                    fail("unterminated string", line, column);
                }
                char e = _src[_pos + 1];
                _pos += 2;
                switch (e) {
                case '"':
                    value.push_back('"');
                    break;
                case '\\':
                    value.push_back('\\');
                    break;
                case '/':
                    value.push_back('/');
                    break;
                case 'b':
                    value.push_back('\b');
                    break;
                case 'f':
                    value.push_back('\f');
                    break;
                case 'n':
                    value.push_back('\n');
                    break;
                case 'r':
                    value.push_back('\r');
                    break;
                case 't':
                    value.push_back('\t');
                    break;
                case 'u': {
                    char32_t cp = readHex4(line, escapeColumn);
                    if (cp >= 0xD800 && cp <= 0xDBFF) {
                        if (_src.substr(_pos, 2) != "\\u") {
                            fail("unpaired surrogate in unicode escape", line, escapeColumn);
                        }
                        _pos += 2;
                        char32_t low = readHex4(line, escapeColumn);
                        if (low < 0xDC00 || low > 0xDFFF) {
                            fail("unpaired surrogate in unicode escape", line, escapeColumn);
                        }
                        cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
                    } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
                        fail("unpaired surrogate in unicode escape", line, escapeColumn);
                    }
                    appendUtf8(value, cp);
                    break;
                }
                default:
                    fail(std::string("invalid escape sequence '\\") + e + "'", line, escapeColumn);
                }
                continue;
            }
            if (static_cast<unsigned char>(c) < 0x20 && c != '\t') {
                fail("illegal control character in string", line, column + (_pos - start));
            }
            value.push_back(c);
            ++_pos;
        }
        _column += _pos - start;
        Token token = makeToken(TokenKind::String, start, line, column);
        token.value = std::move(value);
        return token;
    }

    char32_t readHex4(std::size_t line, std::size_t column)
    {
        if (_pos + 4 > _src.size()) {
            fail("invalid unicode escape", line, column);
        }
        char32_t cp = 0;
        for (int i = 0; i < 4; ++i) {
            char h = _src[_pos + i];
            cp <<= 4;
            if (h >= '0' && h <= '9') {
                cp |= static_cast<char32_t>(h - '0');
            } else if (h >= 'a' && h <= 'f') {
                cp |= static_cast<char32_t>(h - 'a' + 10);
            } else if (h >= 'A' && h <= 'F') {
                cp |= static_cast<char32_t>(h - 'A' + 10);
            } else {
                fail("invalid unicode escape", line, column);
            }
        }
        _pos += 4;
        return cp;
    }

    std::string_view _src;
    std::size_t _pos = 0;
    std::size_t _line = 1;
    std::size_t _column = 1;
    std::size_t _lastTokenLine = 0;
    bool _lineHasContent = false;
    std::string _pendingComment;
    bool _hasPendingComment = false;
};

} // namespace

std::vector<Token> tokenize(std::string_view source)
{
    return Lexer(source).run();
}

} // namespace gql
