#pragma once

#include "mimetic/matrix.hpp"
#include "mimetic/rng.hpp"

namespace mimetic {

enum class PosEmbedKind { sinusoidal, random };

/// Additive position embedding P (one row per token) with its scale gamma.
/// Sinusoidal rows all share the norm gamma*sqrt(d/2); the optional class
/// token contributes a zeroed row at index 0.
struct PositionEmbedding {
    Matrix p;
    double gamma = 1.0;
    PosEmbedKind kind = PosEmbedKind::sinusoidal;
    bool class_token = false;

    std::size_t tokens() const { return p.rows(); }
    std::size_t dim() const { return p.cols(); }
};

/// Standard 1-D transformer sinusoid over the flattened token index, scaled
/// by gamma: P[t, 2j] = gamma*sin(t / 10000^(2j/d)), P[t, 2j+1] the cosine.
/// d must be even. With class_token a zero row is prepended (n+1 rows).
PositionEmbedding sinusoidal_embedding(std::size_t n, std::size_t d, double gamma,
                                       bool class_token);

/// Baseline embedding with i.i.d. N(0, 0.02^2) entries scaled by gamma;
/// fills every row including the class-token one.
PositionEmbedding random_embedding(std::size_t n, std::size_t d, double gamma, bool class_token,
                                   Rng& rng);

/// The Gram matrix P P^T that shapes the expected attention logits.
Matrix gram(const PositionEmbedding& pe);

} // namespace mimetic
