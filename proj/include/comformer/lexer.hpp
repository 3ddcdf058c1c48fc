#pragma once

// Lexer for the Java method subset. Produces the raw token stream the parser
// and the code-sequence normalizer both consume. Comments and whitespace are
// skipped; everything else must concatenate back to the source byte-for-byte.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace comformer {

enum class TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    BooleanLiteral,
    NullLiteral,
    Operator,
    Separator,
};

struct Token {
    TokenKind kind;
    std::string text;       // exact source slice, quotes included for literals
    size_t byte_start = 0;  // [byte_start, byte_end) into the source
    size_t byte_end = 0;
};

class LexError : public std::runtime_error {
public:
    LexError(size_t offset, const std::string& what)
        : std::runtime_error("lex error at byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    size_t offset;
};

namespace detail {

inline const std::unordered_set<std::string>& java_keywords() {
    static const std::unordered_set<std::string> kw = {
        "abstract", "assert",   "boolean",    "break",      "byte",
        "case",     "catch",    "char",       "class",      "const",
        "continue", "default",  "do",         "double",     "else",
        "enum",     "extends",  "final",      "finally",    "float",
        "for",      "goto",     "if",         "implements", "import",
        "instanceof", "int",    "interface",  "long",       "native",
        "new",      "package",  "private",    "protected",  "public",
        "return",   "short",    "static",     "strictfp",   "super",
        "switch",   "synchronized", "this",   "throw",      "throws",
        "transient", "try",     "void",       "volatile",   "while",
    };
    return kw;
}

inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident_part(char c) { return is_ident_start(c) || is_digit(c); }
inline bool is_hex_digit(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Multi-character operators, longest first so maximal munch is a linear scan.
inline const std::vector<std::string>& multi_operators() {
    static const std::vector<std::string> ops = {
        ">>>=", ">>>", ">>=", "<<=", "->", "::", "==", "!=", "<=", ">=",
        "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=",
        "|=", "^=", "<<", ">>",
    };
    return ops;
}

} // namespace detail

// Lex a Java method body. Throws LexError on unterminated string/char
// literals, unterminated block comments, and bytes that cannot start a token.
inline std::vector<Token> lex(std::string_view source) {
    using namespace detail;
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = source.size();

    auto push = [&](TokenKind kind, size_t start, size_t end) {
        out.push_back(Token{kind, std::string(source.substr(start, end - start)), start, end});
    };

    while (i < n) {
        char c = source[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        // Comments.
        if (c == '/' && i + 1 < n && source[i + 1] == '/') {
            i += 2;
            while (i < n && source[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && source[i + 1] == '*') {
            size_t start = i;
            i += 2;
            while (i + 1 < n && !(source[i] == '*' && source[i + 1] == '/')) ++i;
            if (i + 1 >= n) throw LexError(start, "unterminated block comment");
            i += 2;
            continue;
        }
        // Identifiers and word-like literals.
        if (is_ident_start(c)) {
            size_t start = i;
            while (i < n && is_ident_part(source[i])) ++i;
            std::string word(source.substr(start, i - start));
            TokenKind kind = TokenKind::Identifier;
            if (word == "true" || word == "false") kind = TokenKind::BooleanLiteral;
            else if (word == "null") kind = TokenKind::NullLiteral;
            else if (java_keywords().count(word)) kind = TokenKind::Keyword;
            push(kind, start, i);
            continue;
        }
        // Number literals, including ".5" style.
        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(source[i + 1]))) {
            size_t start = i;
            if (c == '0' && i + 1 < n && (source[i + 1] == 'x' || source[i + 1] == 'X')) {
                i += 2;
                while (i < n && (is_hex_digit(source[i]) || source[i] == '_')) ++i;
            } else if (c == '0' && i + 1 < n && (source[i + 1] == 'b' || source[i + 1] == 'B')) {
                i += 2;
                while (i < n && (source[i] == '0' || source[i] == '1' || source[i] == '_')) ++i;
            } else {
                while (i < n && (is_digit(source[i]) || source[i] == '_')) ++i;
                if (i < n && source[i] == '.') {
                    ++i;
                    while (i < n && (is_digit(source[i]) || source[i] == '_')) ++i;
                }
                if (i < n && (source[i] == 'e' || source[i] == 'E')) {
                    size_t mark = i;
                    ++i;
                    if (i < n && (source[i] == '+' || source[i] == '-')) ++i;
                    if (i < n && is_digit(source[i])) {
                        while (i < n && is_digit(source[i])) ++i;
                    } else {
                        i = mark;  // 'e' belongs to the next token
                    }
                }
            }
            if (i < n && (source[i] == 'l' || source[i] == 'L' || source[i] == 'f' ||
                          source[i] == 'F' || source[i] == 'd' || source[i] == 'D')) {
                ++i;
            }
            push(TokenKind::NumberLiteral, start, i);
            continue;
        }
        // String literals.
        if (c == '"') {
            size_t start = i;
            ++i;
            while (i < n && source[i] != '"' && source[i] != '\n') {
                if (source[i] == '\\' && i + 1 < n) i += 2;
                else ++i;
            }
            if (i >= n || source[i] != '"') throw LexError(start, "unterminated string literal");
            ++i;
            push(TokenKind::StringLiteral, start, i);
            continue;
        }
        // Char literals.
        if (c == '\'') {
            size_t start = i;
            ++i;
            while (i < n && source[i] != '\'' && source[i] != '\n') {
                if (source[i] == '\\' && i + 1 < n) i += 2;
                else ++i;
            }
            if (i >= n || source[i] != '\'') throw LexError(start, "unterminated char literal");
            ++i;
            push(TokenKind::CharLiteral, start, i);
            continue;
        }
        // "..." varargs, then '.' as separator.
        if (c == '.') {
            if (i + 2 < n && source[i + 1] == '.' && source[i + 2] == '.') {
                push(TokenKind::Separator, i, i + 3);
                i += 3;
            } else {
                push(TokenKind::Separator, i, i + 1);
                ++i;
            }
            continue;
        }
        if (c == '(' || c == ')' || c == '{' || c == '}' || c == '[' || c == ']' ||
            c == ';' || c == ',' || c == '@') {
            push(TokenKind::Separator, i, i + 1);
            ++i;
            continue;
        }
        // Operators, maximal munch.
        {
            bool matched = false;
            for (const std::string& op : multi_operators()) {
                if (source.substr(i, op.size()) == op) {
                    push(TokenKind::Operator, i, i + op.size());
                    i += op.size();
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
        }
        if (std::string_view("=><!~?:+-*/&|^%").find(c) != std::string_view::npos) {
            push(TokenKind::Operator, i, i + 1);
            ++i;
            continue;
        }
        throw LexError(i, std::string("illegal character '") + c + "'");
    }
    return out;
}

} // namespace comformer
