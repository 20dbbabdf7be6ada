#ifndef PSC_COMMON_HPP
#define PSC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psc {

// Input could not be parsed. line/column are 1-based; column counts tokens.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

// A guaranteed internal invariant failed. Distinct from rejection: rejections
// are values, this is a bug (or a use outside the supported input class).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Small deterministic PRNG so generated fixtures are identical across
// platforms and standard libraries.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace psc

#endif
