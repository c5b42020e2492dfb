#include "raidd/providers/provider.hpp"

#include "raidd/errors.hpp"

namespace raidd {

std::string to_string(Role r) {
    switch (r) {
        case Role::system: return "system";
        case Role::user: return "user";
        case Role::assistant: return "assistant";
    }
    return "user";
}

std::string render_prompt(const std::vector<ChatMessage>& messages) {
    std::string out;
    for (const auto& m : messages) {
        out += to_string(m.role);
        out += ": ";
        out += m.content;
        out += '\n';
    }
    return out;
}

void ProviderConfig::validate() const {
    if (max_parallel < 1) throw ConfigError("provider max_parallel must be >= 1");
    if (timeout_seconds <= 0) throw ConfigError("provider timeout must be > 0");
    if (temperature < 0) throw ConfigError("provider temperature must be >= 0");
    if (embed_batch_size < 1) throw ConfigError("provider embed_batch_size must be >= 1");
    if (base_url.empty()) throw ConfigError("provider base_url must be set");
}

void validate_chat_input(const std::vector<ChatMessage>& messages) {
    if (messages.empty()) throw DataError("chat: message list is empty");
    if (messages.back().role != Role::user) throw DataError("chat: last message must be user");
    for (const auto& m : messages) {
        if (m.content.empty() && m.role != Role::assistant) {
            throw DataError("chat: empty content in " + to_string(m.role) + " message");
        }
    }
}

void validate_embed_input(const std::vector<std::string>& texts) {
    if (texts.empty()) throw DataError("embed: input list is empty");
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (texts[i].empty()) {
            throw DataError("embed: input " + std::to_string(i) + " is empty");
        }
    }
}

}  // namespace raidd
