#pragma once

#include <cstdint>
#include <vector>

namespace dqc {

// Murmur3 fmix64: full-avalanche 64-bit finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

// k keyed hash functions derived from one master seed (splitmix64 chain).
// Slot 0 doubles as the single global hash of the bottom-k variant.
class HashScheme {
public:
    HashScheme() : HashScheme(0, 1) {}

    HashScheme(std::uint64_t master_seed, int k) : master_seed_(master_seed), seeds_(static_cast<std::size_t>(k)) {
        std::uint64_t s = master_seed;
        for (auto& seed : seeds_) {
            s += 0x9e3779b97f4a7c15ULL;
            seed = mix64(s);
        }
    }

    int k() const { return static_cast<int>(seeds_.size()); }
    std::uint64_t master_seed() const { return master_seed_; }

    std::uint64_t hash(int slot, std::uint64_t value) const {
        return mix64(seeds_[static_cast<std::size_t>(slot)] ^ (value + 1) * 0x9e3779b97f4a7c15ULL);
    }

private:
    std::uint64_t master_seed_;
    std::vector<std::uint64_t> seeds_;
};

} // namespace dqc
