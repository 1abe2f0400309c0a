#ifndef PARADIGM_TOKENIZER_HPP
#define PARADIGM_TOKENIZER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "paradigm/source.hpp"

namespace paradigm::py {

enum class TokenType : std::uint8_t {
    Name,      // identifiers and keywords
    Number,
    String,    // any string/bytes literal, prefix and quotes included
    Op,        // operators and delimiters
    Newline,   // end of a logical line
    Indent,
    Dedent,
    EndMarker,
};

struct Token {
    TokenType type;
    std::string text;
    int line;
    int col;

    bool is(TokenType t) const { return type == t; }
    bool is_op(std::string_view s) const { return type == TokenType::Op && text == s; }
    bool is_name(std::string_view s) const { return type == TokenType::Name && text == s; }
};

bool is_python_keyword(std::string_view word);

/// Lex a whole module. Comments and blank lines produce no tokens;
/// indentation becomes Indent/Dedent; the stream ends with EndMarker.
/// Throws SyntaxError on malformed input.
std::vector<Token> tokenize(std::string_view source);

/// Lossy UTF-8 normalization applied before tokenizing: strips a BOM,
/// converts CR/CRLF line endings, replaces invalid UTF-8 bytes.
std::string normalize_source_text(std::string_view raw);

} // namespace paradigm::py

#endif // PARADIGM_TOKENIZER_HPP
