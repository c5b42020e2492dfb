#include "raidd/core/chunker.hpp"

#include <algorithm>

#include "raidd/errors.hpp"

namespace raidd {

std::vector<Chunk> chunk_tokens(const std::string& text, const TokenSequence& tokens,
                                const std::string& doc_id, std::size_t chunk_size,
                                std::size_t overlap) {
    if (chunk_size == 0 || overlap >= chunk_size) {
        throw ConfigError("chunking requires 0 <= overlap < chunk_size (got chunk_size=" +
                          std::to_string(chunk_size) + ", overlap=" + std::to_string(overlap) +
                          ")");
    }
    std::vector<Chunk> chunks;
    const std::size_t total = tokens.size();
    if (total == 0) return chunks;

    const std::size_t stride = chunk_size - overlap;
    std::size_t start = 0;
    std::size_t ordinal = 0;
    while (start < total) {
        const std::size_t end = std::min(start + chunk_size, total);
        const std::size_t byte_begin = tokens.offsets[start].begin;
        const std::size_t byte_end = tokens.offsets[end - 1].end;
        Chunk c;
        c.chunk_id = doc_id + "#" + std::to_string(ordinal++);
        c.doc_id = doc_id;
        c.text = text.substr(byte_begin, byte_end - byte_begin);
        c.token_begin = start;
        c.token_end = end;
        chunks.push_back(std::move(c));
        if (end == total) break;  // this window reached the end; later starts add nothing new
        start += stride;
    }
    return chunks;
}

std::vector<Chunk> chunk_text(const std::string& text, const std::string& doc_id,
                              std::size_t chunk_size, std::size_t overlap,
                              const Tokenizer* tokenizer) {
    const Tokenizer& tok = tokenizer ? *tokenizer : default_tokenizer();
    return chunk_tokens(text, tok.tokenize(text), doc_id, chunk_size, overlap);
}

}  // namespace raidd
