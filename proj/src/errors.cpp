#include "hlpa/errors.hpp"

#include <cstdlib>

namespace hlpa {

namespace {
unsigned long long default_limit() {
    if (const char* env = std::getenv("HLPA_MAX_STEPS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}
}  // namespace

Budget::Budget() : limit_(default_limit()) {}

}  // namespace hlpa
