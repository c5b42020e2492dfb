#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace raidd {

// Byte span [begin, end) into the original text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Tokens plus their byte offsets in the source. Token strings are normalized
// (ASCII-lowercased); offsets always point at the original, unmodified text, so
// text.substr(span.begin, span.end - span.begin) recovers the source spelling.
struct TokenSequence {
    std::vector<std::string> tokens;
    std::vector<TokenSpan> offsets;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

// Pluggable tokenization backend. The engine only ever counts tokens and cuts
// chunk boundaries with it, so any deterministic implementation will do.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;
    virtual TokenSequence tokenize(const std::string& text) const = 0;
};

// Default backend: locale-free word/punctuation splitter.
//   - runs of ASCII alphanumerics and bytes >= 0x80 form word tokens
//   - ASCII punctuation is emitted one character per token
//   - ASCII whitespace separates tokens
// Word tokens are ASCII-lowercased. Same input gives the identical token list
// on every platform.
class WordTokenizer final : public Tokenizer {
public:
    TokenSequence tokenize(const std::string& text) const override;
};

// Process-wide default tokenizer instance.
const Tokenizer& default_tokenizer();

// Convenience wrapper over the default tokenizer.
TokenSequence tokenize(const std::string& text);

}  // namespace raidd
