#include "raidd/core/tokenizer.hpp"

namespace raidd {

namespace {

inline bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

inline bool is_word_byte(unsigned char c) {
    if (c >= 0x80) return true;  // multi-byte UTF-8 sequences group into words
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

TokenSequence WordTokenizer::tokenize(const std::string& text) const {
    TokenSequence seq;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_ascii_space(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            std::size_t j = i + 1;
            while (j < n && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
            std::string tok;
            tok.reserve(j - i);
            for (std::size_t p = i; p < j; ++p) tok.push_back(ascii_lower(text[p]));
            seq.tokens.push_back(std::move(tok));
            seq.offsets.push_back({i, j});
            i = j;
        } else {
            // single punctuation byte
            seq.tokens.emplace_back(1, text[i]);
            seq.offsets.push_back({i, i + 1});
            ++i;
        }
    }
    return seq;
}

const Tokenizer& default_tokenizer() {
    static const WordTokenizer instance;
    return instance;
}

TokenSequence tokenize(const std::string& text) {
    return default_tokenizer().tokenize(text);
}

}  // namespace raidd
