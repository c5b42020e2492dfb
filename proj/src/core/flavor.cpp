#include "raidd/core/flavor.hpp"

#include "raidd/errors.hpp"

namespace raidd {

Flavor parse_flavor(const std::string& name) {
    if (name == "baseline") return Flavor::baseline;
    if (name == "s") return Flavor::s;
    if (name == "s_plus") return Flavor::s_plus;
    if (name == "q") return Flavor::q;
    if (name == "q_plus") return Flavor::q_plus;
    if (name == "u") return Flavor::u;
    if (name == "s_icl") return Flavor::s_icl;
    throw ConfigError("unknown flavor '" + name +
                      "' (expected baseline|s|s_plus|q|q_plus|u|s_icl)");
}

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::baseline: return "baseline";
        case Flavor::s: return "s";
        case Flavor::s_plus: return "s_plus";
        case Flavor::q: return "q";
        case Flavor::q_plus: return "q_plus";
        case Flavor::u: return "u";
        case Flavor::s_icl: return "s_icl";
    }
    return "baseline";
}

KindSet kinds_for(Flavor f) {
    switch (f) {
        case Flavor::baseline: return {true, false, false};
        case Flavor::s: return {false, true, false};
        case Flavor::s_plus: return {true, true, false};
        case Flavor::q: return {false, false, true};
        case Flavor::q_plus: return {true, false, true};
        case Flavor::u: return {true, true, true};
        case Flavor::s_icl: return {false, true, false};
    }
    return {true, false, false};
}

void RetrievalConfig::validate() const {
    if (chunk_size == 0 || overlap >= chunk_size) {
        throw ConfigError("retrieval config requires 0 <= overlap < chunk_size");
    }
    if (top_k < 1) throw ConfigError("retrieval config requires top_k >= 1");
}

}  // namespace raidd
