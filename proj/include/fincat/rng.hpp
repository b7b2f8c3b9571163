#pragma once

#include <cstdint>
#include <random>

namespace fincat {

// mt19937_64 with rejection sampling.  The engine's stream is pinned down by
// the standard, and avoiding std::uniform_int_distribution (whose mapping is
// implementation-defined) keeps seeded runs byte-identical across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    int below(int n) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return static_cast<int>(v % n);
    }

    int between(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

private:
    std::mt19937_64 eng_;
};

}  // namespace fincat
