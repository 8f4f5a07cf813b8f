#include "qbraid/laurent.hpp"

#include <cstdlib>
#include <string>

namespace qbraid {

long max_degree() {
    static const long cap = [] {
        const char* env = std::getenv("QBRAID_MAX_DEGREE");
        if (!env || !*env) return 100000L;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        return (end && *end == '\0' && v > 0) ? v : 100000L;
    }();
    return cap;
}

void check_degree(long span) {
    if (span > max_degree())
        throw DegreeLimitExceeded("polynomial degree span " + std::to_string(span) + " exceeds QBRAID_MAX_DEGREE=" +
                                  std::to_string(max_degree()));
}

}  // namespace qbraid
