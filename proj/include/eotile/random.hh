#ifndef EOTILE_RANDOM_HH
#define EOTILE_RANDOM_HH

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace eotile {

// std distributions are implementation-defined, so sampling is done by hand
// to keep seeded output identical across standard libraries.

inline auto splitmix64(std::uint64_t x) -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` derived from a master seed.
inline auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

/// Uniform in [0, bound) by rejection.
inline auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
{
    if (bound <= 1)
        return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do
        r = rng();
    while (r >= limit);
    return r % bound;
}

/// Uniform in [0, 1) with 53 bits.
inline auto uniform_unit(Rng & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T> & v, Rng & rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}

#endif
