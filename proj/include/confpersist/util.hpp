#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace confpersist {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Default simplex enumeration budget.
inline constexpr std::size_t kDefaultBudget = 5'000'000;

// Decimal rendering with 12 significant digits, used for all exported
// filtration values so repeated runs are byte-identical.
inline std::string format_sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

// FNV-1a, used to stamp output files with a hash of the run configuration.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// Thread cap: CONFPERSIST_THREADS bounds internal parallelism.
inline unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CONFPERSIST_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min(static_cast<unsigned>(v), hw);
    }
    return hw;
}

// Chunked parallel loop with in-order result visibility: body(i) must only
// write to slots owned by iteration i, so the result is schedule-independent.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned nthreads = thread_cap();
    if (nthreads <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// n choose k without overflow for desk-scale arguments; saturates at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t num = n - k + i;
        if (r > static_cast<std::size_t>(-1) / num) return static_cast<std::size_t>(-1);
        r = r * num / i;
    }
    return r;
}

} // namespace confpersist
