#pragma once

#include <stdexcept>
#include <string>

namespace raidd {

// Error taxonomy mirrors the CLI exit codes:
//   ConfigError -> 1 (usage / configuration)
//   ProviderError -> 2 (transport / upstream model failure)
//   DataError -> 3 (corpus, dataset, or index content)

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class ProviderError : public std::runtime_error {
public:
    ProviderError(const std::string& msg, int http_status = 0, std::string body_excerpt = "")
        : std::runtime_error(msg), status(http_status), body(std::move(body_excerpt)) {}

    int status;        // 0 when the failure happened before an HTTP status existed
    std::string body;  // first bytes of the offending response, for diagnostics
};

}  // namespace raidd
