#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raidd/core/tokenizer.hpp"

namespace raidd {

// A contiguous token window of a source document. The text is the verbatim
// substring of the source that covers the window, so chunk text placed into a
// QA prompt is byte-identical to the ingested document.
struct Chunk {
    std::string chunk_id;  // "<doc_id>#<ordinal>"
    std::string doc_id;
    std::string text;
    std::size_t token_begin = 0;  // [token_begin, token_end)
    std::size_t token_end = 0;

    std::size_t token_count() const { return token_end - token_begin; }
};

// Sliding-window chunking with stride = chunk_size - overlap. Window i starts
// at i*stride; emission stops once a window reaches the end of the token
// stream, so the chunk count is ceil(max(T - chunk_size, 0) / stride) + 1 for
// nonempty input. Throws ConfigError unless 0 <= overlap < chunk_size.
std::vector<Chunk> chunk_tokens(const std::string& text, const TokenSequence& tokens,
                                const std::string& doc_id, std::size_t chunk_size,
                                std::size_t overlap);

// Tokenizes with the given backend (default tokenizer if null) and chunks.
std::vector<Chunk> chunk_text(const std::string& text, const std::string& doc_id,
                              std::size_t chunk_size, std::size_t overlap,
                              const Tokenizer* tokenizer = nullptr);

}  // namespace raidd
