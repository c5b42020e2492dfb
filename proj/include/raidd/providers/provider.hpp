#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raidd/core/vector_ops.hpp"

namespace raidd {

enum class Role { system, user, assistant };

std::string to_string(Role r);

struct ChatMessage {
    Role role = Role::user;
    std::string content;
};

// Canonical single-string rendering of a message list: "role: content\n" per
// message. Used as the mock provider's scripting key and in logs.
std::string render_prompt(const std::vector<ChatMessage>& messages);

// Connection settings for an OpenAI-compatible service. Model names are pure
// configuration; the engine never hardcodes a vendor.
struct ProviderConfig {
    std::string base_url = "https://api.openai.com/v1";
    std::string api_key_env = "OPENAI_API_KEY";
    std::string embed_model = "text-embedding-3-small";
    std::string chat_model = "gpt-4o-mini";
    std::string judge_model = "gpt-4o-mini";
    double temperature = 0.0;
    std::size_t max_parallel = 4;
    std::size_t max_retries = 3;
    double timeout_seconds = 60.0;
    std::size_t embed_batch_size = 64;

    void validate() const;  // throws ConfigError
};

// Embedding + chat-completion backend. Implementations are thread-safe and may
// be called from max_parallel threads at once.
class Provider {
public:
    virtual ~Provider() = default;

    // One vector per input, order-preserving, all the same dimension.
    // Throws DataError on empty input or an empty text; ProviderError on
    // transport failure after retries.
    virtual std::vector<Vector> embed(const std::vector<std::string>& texts) = 0;

    // Returns the assistant message content. The last message must have role
    // user and the list must be non-empty.
    virtual std::string chat(const std::vector<ChatMessage>& messages, double temperature) = 0;

    // Same wire call routed at the judge model (live client); the mock treats
    // it identically to chat.
    virtual std::string judge_chat(const std::vector<ChatMessage>& messages, double temperature) {
        return chat(messages, temperature);
    }

    virtual std::string name() const = 0;
};

void validate_chat_input(const std::vector<ChatMessage>& messages);
void validate_embed_input(const std::vector<std::string>& texts);

}  // namespace raidd
