#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "shadescan/error.hpp"

namespace shadescan {

enum class JavaTokenKind { keyword, identifier, number, string_lit, char_lit, punct };

struct JavaToken {
    JavaTokenKind kind;
    std::string text;
    size_t offset = 0; // byte offset into the original source

    size_t end() const { return offset + text.size(); }
};

inline const std::unordered_set<std::string>& java_keywords() {
    static const std::unordered_set<std::string> kw = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
        "const", "continue", "default", "do", "double", "else", "enum", "extends", "final",
        "finally", "float", "for", "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private", "protected", "public",
        "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
        "throw", "throws", "transient", "try", "void", "volatile", "while"};
    return kw;
}

// Lexes a Java compilation unit into a token list. Comments and whitespace are
// skipped; offsets index the original text so callers can splice edits back.
// Multi-character operators are emitted one punctuation character at a time,
// which keeps tokenization independent of spacing.
inline std::vector<JavaToken> lex_java(std::string_view src, const std::string& origin = "<memory>") {
    std::vector<JavaToken> out;
    size_t i = 0;
    const size_t n = src.size();

    auto fail = [&](const std::string& what, size_t at) {
        raise(ErrorKind::lex_error, origin + ": " + what + " at offset " + std::to_string(at));
    };
    auto is_ident_start = [](unsigned char c) {
        return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
    };
    auto is_ident_part = [&](unsigned char c) { return is_ident_start(c) || std::isdigit(c); };

    while (i < n) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            size_t start = i;
            i += 2;
            while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
            if (i + 1 >= n) fail("unterminated block comment", start);
            i += 2;
            continue;
        }
        if (is_ident_start(c)) {
            size_t start = i;
            while (i < n && is_ident_part(static_cast<unsigned char>(src[i]))) ++i;
            std::string text(src.substr(start, i - start));
            bool kw = java_keywords().count(text) > 0;
            out.push_back({kw ? JavaTokenKind::keyword : JavaTokenKind::identifier, std::move(text), start});
            continue;
        }
        if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            size_t start = i;
            bool hex = false;
            if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
                hex = true;
                i += 2;
            }
            while (i < n) {
                unsigned char d = static_cast<unsigned char>(src[i]);
                if (std::isdigit(d) || d == '_' || d == '.' ||
                    (hex && std::isxdigit(d)) ||
                    (!hex && (d == 'e' || d == 'E')) || (hex && (d == 'p' || d == 'P')) ||
                    d == 'l' || d == 'L' || d == 'f' || d == 'F' || d == 'd' || d == 'D' ||
                    (!hex && (d == 'x' || d == 'X' || d == 'b' || d == 'B'))) {
                    // exponent sign
                    if ((d == 'e' || d == 'E' || d == 'p' || d == 'P') && i + 1 < n &&
                        (src[i + 1] == '+' || src[i + 1] == '-'))
                        ++i;
                    ++i;
                } else {
                    break;
                }
            }
            out.push_back({JavaTokenKind::number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (c == '"') {
            size_t start = i;
            // Text block?
            if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
                i += 3;
                while (i + 2 < n && !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) ++i;
                if (i + 2 >= n) fail("unterminated text block", start);
                i += 3;
            } else {
                ++i;
                while (i < n && src[i] != '"' && src[i] != '\n') {
                    if (src[i] == '\\' && i + 1 < n) ++i;
                    ++i;
                }
                if (i >= n || src[i] == '\n') fail("unterminated string literal", start);
                ++i;
            }
            out.push_back({JavaTokenKind::string_lit, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (c == '\'') {
            size_t start = i;
            ++i;
            while (i < n && src[i] != '\'' && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < n) ++i;
                ++i;
            }
            if (i >= n || src[i] == '\n') fail("unterminated char literal", start);
            ++i;
            out.push_back({JavaTokenKind::char_lit, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::ispunct(c)) {
            out.push_back({JavaTokenKind::punct, std::string(1, static_cast<char>(c)), i});
            ++i;
            continue;
        }
        fail("unexpected character", i);
    }
    return out;
}

// True when every brace/bracket/paren in the token list nests properly.
inline bool balanced_delimiters(const std::vector<JavaToken>& tokens) {
    std::vector<char> stack;
    for (const auto& t : tokens) {
        if (t.kind != JavaTokenKind::punct) continue;
        char c = t.text[0];
        if (c == '{' || c == '(' || c == '[') {
            stack.push_back(c);
        } else if (c == '}' || c == ')' || c == ']') {
            char open = c == '}' ? '{' : c == ')' ? '(' : '[';
            if (stack.empty() || stack.back() != open) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

} // namespace shadescan
