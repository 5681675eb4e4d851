#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fedsim::rng {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and up to three
// stream coordinates (e.g. client id, round). Order-sensitive.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = mix(master);
    s = mix(s ^ mix(a + 0x1ULL));
    s = mix(s ^ mix(b + 0x2ULL));
    s = mix(s ^ mix(c + 0x3ULL));
    return s;
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// k distinct values from {0, ..., n-1}, returned in ascending order.
inline std::vector<int> sample_without_replacement(std::mt19937_64& gen, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[i], pool[pick(gen)]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace fedsim::rng
