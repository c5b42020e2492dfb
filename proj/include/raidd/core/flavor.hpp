#pragma once

#include <cstddef>
#include <string>

namespace raidd {

// Retrieval flavor. The derived-document kinds a flavor indexes and searches:
//   baseline -> raw          s      -> summary       s_plus -> summary+raw
//   q        -> question     q_plus -> question+raw   u      -> raw+summary+question
//   s_icl    -> summary (retrieval identical to s; answering adds the
//               scored-example feedback loop and requires labeled questions)
enum class Flavor { baseline, s, s_plus, q, q_plus, u, s_icl };

// Which derived-document kinds participate. Used both to materialize an index
// and to filter entries at query time.
struct KindSet {
    bool raw = false;
    bool summary = false;
    bool question = false;

    bool contains(const KindSet& other) const {
        return (raw || !other.raw) && (summary || !other.summary) &&
               (question || !other.question);
    }
};

Flavor parse_flavor(const std::string& name);  // throws ConfigError on unknown name
std::string to_string(Flavor f);
KindSet kinds_for(Flavor f);

// Query-time retrieval settings.
struct RetrievalConfig {
    std::size_t chunk_size = 256;
    std::size_t overlap = 50;
    std::size_t top_k = 8;
    Flavor flavor = Flavor::baseline;

    void validate() const;  // throws ConfigError on bad ranges
};

}  // namespace raidd
