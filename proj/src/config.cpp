#include "sigmarho/config.hpp"

#include <cstdlib>
#include <string>

namespace sigmarho {
namespace {

int cap_from_env(int fallback) {
    const char* raw = std::getenv("SIGMARHO_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        int value = std::stoi(raw);
        if (value > 0) return value;
    } catch (const std::exception&) {
    }
    return fallback;
}

}  // namespace

int oracle_vertex_cap() { return cap_from_env(kDefaultVertexCap); }

int oracle_csp_var_cap() { return cap_from_env(kDefaultCspVarCap); }

}  // namespace sigmarho
