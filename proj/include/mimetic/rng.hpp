#pragma once

#include <array>
#include <cstdint>

#include "mimetic/matrix.hpp"

namespace mimetic {

/// Deterministic 256-bit generator (xoshiro256++ seeded via splitmix64).
/// Integer-only state transitions, so the raw stream is bit-identical on
/// every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0);

    /// Next raw 64-bit word of the stream.
    std::uint64_t next_u64();

    /// Uniform double in (0, 1]; exactly one raw draw.
    double next_unit_open();

    /// Uniform double in [0, 1); exactly one raw draw.
    double next_unit();

    /// Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via Box-Muller (cosine branch only). Consumes exactly
    /// two raw draws per call; no state is cached between calls.
    double next_gaussian();

    const std::array<std::uint64_t, 4>& state() const { return state_; }

private:
    std::array<std::uint64_t, 4> state_{};
};

/// splitmix64 output function; the seed-expansion and hashing primitive.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Deterministic sub-seed for (layer, slot) substreams so per-layer/per-head
/// construction can run in any order with schedule-independent results.
std::uint64_t hash64(std::uint64_t seed, std::uint64_t layer, std::uint64_t slot);

/// rows x cols matrix of i.i.d. N(0, std^2) entries drawn row-major from rng.
/// Consumes exactly 2*rows*cols raw draws, including when std == 0.
Matrix gaussian_matrix(std::size_t rows, std::size_t cols, double std, Rng& rng);

} // namespace mimetic
