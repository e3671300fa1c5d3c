#include "hyperten/apply.hpp"

#include <cstdlib>

namespace hyperten {

int worker_count() {
    static const int cached = [] {
        const char* env = std::getenv("HYPERTEN_THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        return v >= 1 ? v : 1;
    }();
    return cached;
}

}  // namespace hyperten
