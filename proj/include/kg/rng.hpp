#pragma once
#include <cstdint>
#include <random>

namespace kg {

// splitmix64: cheap, full-period 64-bit mixer. Used both as a stream on its
// own and to derive independent per-task seeds from (master, task counter),
// so ensemble runs stay deterministic no matter how work is scheduled.
struct SplitMix64 {
    uint64_t x;
    explicit SplitMix64(uint64_t seed) : x(seed) {}
    uint64_t next() {
        uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline uint64_t task_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    SplitMix64 s(master);
    uint64_t h = s.next();
    h ^= SplitMix64(a + 0x1234567887654321ull).next();
    h = SplitMix64(h).next();
    h ^= SplitMix64(b + 0xabcdef0123456789ull).next();
    h = SplitMix64(h).next();
    h ^= SplitMix64(c + 0x5555aaaa5555aaaaull).next();
    return SplitMix64(h).next();
}

// mt19937_64 seeded from the mixer; all stochastic code takes one of these.
inline std::mt19937_64 make_rng(uint64_t seed) {
    return std::mt19937_64(SplitMix64(seed).next());
}

} // namespace kg
