#pragma once

#include <cstdint>
#include <string_view>

namespace specht {

// Counter-based splittable generator (splitmix64).  Streams keyed by
// (seed, stream) are independent and reproducible across platforms, so
// samples may be drawn in any order or concurrently.
class SplitRng {
  public:
    static SplitRng keyed(uint64_t seed, uint64_t stream) {
        SplitRng r;
        r.state_ = mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ULL));
        return r;
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform residue in [0, m) for small m, via byte rejection.
    uint32_t below(uint32_t m) {
        for (;;) {
            uint64_t w = next();
            for (int i = 0; i < 8; ++i) {
                uint32_t b = static_cast<uint32_t>(w & 0xFF);
                w >>= 8;
                if (b < 256 - 256 % m) return b % m;
            }
        }
    }

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

  private:
    uint64_t state_ = 0;
};

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace specht
