#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace archetypes {

// Thin wrapper over mt19937_64 that avoids std::*_distribution, whose
// output is not pinned by the standard. The raw engine is bit-exact
// everywhere, so seeded runs reproduce across compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, n) by rejection.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return static_cast<std::size_t>(v % span);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // k distinct indices from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t pick = j + uniform_index(n - j);
            std::swap(pool[j], pool[pick]);
            out.push_back(pool[j]);
        }
        return out;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace archetypes
