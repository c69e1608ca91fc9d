#include "mimetic/rng.hpp"

#include <cmath>

#include "mimetic/errors.hpp"

namespace mimetic {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t hash64(std::uint64_t seed, std::uint64_t layer, std::uint64_t slot) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64_next(s);
    s = h ^ layer;
    h = splitmix64_next(s);
    s = h ^ slot;
    return splitmix64_next(s);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64_next(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::next_unit_open() {
    // 53-bit mantissa; +1 keeps the value strictly positive for log().
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw ShapeError("next_below: bound must be >= 1");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

double Rng::next_gaussian() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, double std, Rng& rng) {
    if (rows < 1 || cols < 1) throw ShapeError("gaussian_matrix: rows, cols must be >= 1");
    if (!(std >= 0.0)) throw ShapeError("gaussian_matrix: std must be non-negative");
    Matrix m(rows, cols);
    for (double& v : m.storage()) v = std * rng.next_gaussian();
    return m;
}

} // namespace mimetic
