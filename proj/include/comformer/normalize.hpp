#pragma once

// Code-sequence normalization: identifier sub-word splitting, lowercasing,
// and literal abstraction tags. Output feeds the byte-BPE tokenizer.

#include <cctype>
#include <string>
#include <vector>

#include "comformer/lexer.hpp"

namespace comformer {

inline constexpr const char* kNumTag = "<num_>";
inline constexpr const char* kStrTag = "<str_>";

// Normalized token sequence: lowercase sub-words, abstraction tags, and the
// untouched keywords / operators / separators.
using NormTokenSeq = std::vector<std::string>;

// Split an identifier on camel-case humps, underscores and letter->digit
// boundaries; parts come back lowercased. Concatenating the parts (ignoring
// case and underscores) reproduces the identifier.
inline std::vector<std::string> split_identifier(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            parts.push_back(cur);
            cur.clear();
        }
    };
    const size_t n = name.size();
    for (size_t i = 0; i < n; ++i) {
        char c = name[i];
        if (c == '_') {
            flush();
            continue;
        }
        bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
        if (!cur.empty()) {
            char prev = name[i - 1];
            bool prev_lower = std::islower(static_cast<unsigned char>(prev)) != 0;
            bool prev_upper = std::isupper(static_cast<unsigned char>(prev)) != 0;
            bool prev_alpha = std::isalpha(static_cast<unsigned char>(prev)) != 0;
            bool next_lower = i + 1 < n && std::islower(static_cast<unsigned char>(name[i + 1])) != 0;
            if (upper && prev_lower) flush();                       // fooBar -> foo|Bar
            else if (upper && prev_upper && next_lower) flush();    // URLConn -> URL|Conn
            else if (digit && prev_alpha) flush();                  // base64 -> base|64
        }
        cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    flush();
    return parts;
}

// Apply the lexical normalization of the pipeline's code channel:
// identifiers split to lowercase sub-words, numbers and string/char literals
// abstracted to tags, everything else passed through.
inline NormTokenSeq normalize_code_tokens(const std::vector<Token>& tokens) {
    NormTokenSeq out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) {
        switch (t.kind) {
            case TokenKind::Identifier: {
                for (auto& part : split_identifier(t.text)) out.push_back(std::move(part));
                break;
            }
            case TokenKind::NumberLiteral:
                out.emplace_back(kNumTag);
                break;
            case TokenKind::StringLiteral:
            case TokenKind::CharLiteral:
                out.emplace_back(kStrTag);
                break;
            default:
                out.push_back(t.text);  // keywords, operators, separators, true/false/null
                break;
        }
    }
    return out;
}

// Re-normalization of an already-normalized token string. Used to state the
// idempotence property: tags and symbol tokens are fixed points, word tokens
// go through split_identifier again (which is the identity on lowercase
// boundary-free sub-words).
inline std::vector<std::string> normalize_norm_token(const std::string& tok) {
    if (tok == kNumTag || tok == kStrTag) return {tok};
    bool wordlike = false;
    for (char c : tok) {
        if (detail::is_ident_part(c)) {
            wordlike = true;
            break;
        }
    }
    if (!wordlike) return {tok};  // operators / separators
    return split_identifier(tok);
}

} // namespace comformer
