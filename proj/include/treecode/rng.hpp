#pragma once

#include <cstdint>
#include <vector>

namespace treecode {

// splitmix64: tiny seeded generator with a fixed, platform-independent output
// stream. Standard-library distributions are implementation-defined, and the
// seeded trials here must be bit-reproducible everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection-free Lemire reduction is
    // biased by < 2^-32 for the small bounds used here, so plain modulo of a
    // rejection loop keeps it exact and still deterministic.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

  private:
    std::uint64_t state_;
};

template <typename T>
void deterministic_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace treecode
